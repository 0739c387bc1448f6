#include "eqk/induction.hpp"

#include <set>

#include "eqk/errors.hpp"

namespace eqk {

namespace {

void require_invariant(const LaurentPoly& a, const SubDatum& group, const char* what) {
  if (!is_invariant(a, group.weyl))
    throw PreconditionError(std::string(what) + ": " + a.str() +
                            " is not invariant under the Weyl group of " + group.describe());
}

std::string pair_text(const LaurentPoly& a) { return a.is_zero() ? "0" : a.str(); }

}  // namespace

VirtualCharacter restrict(const VirtualCharacter& a, std::shared_ptr<const SubDatum> target) {
  if (!target) throw PreconditionError("restriction target missing");
  if (!(a.group->parent == target->parent))
    throw PreconditionError("restriction target is not a subgroup of the same parent");
  if (!is_invariant(a.poly, target->weyl))
    throw StructuralError("restriction of " + a.poly.str() + " is not invariant under " +
                          target->describe());
  return VirtualCharacter(a.poly, std::move(target));
}

LaurentPoly induce(const SubDatum& to, const SubDatum& from, const LaurentPoly& a) {
  require_invariant(a, from, "induction");
  LaurentPoly out(to.rank());
  for (const auto& w : coset_representatives(to.weyl, from.weyl)) out += act(w.matrix, a);
  if (!is_invariant(out, to.weyl))
    throw StructuralError("induced character " + out.str() + " is not invariant");
  return out;
}

LaurentPoly induce(const SubDatum& sub, const LaurentPoly& a) {
  return induce(full_subdatum(sub.parent), sub, a);
}

LaurentPoly pushforward_fixed_points(const SubDatum& levi, const LaurentPoly& a) {
  require_invariant(a, levi, "pushforward");
  const std::vector<Weight> tangent = relative_weights(levi, RelativeKind::g_mod_p, false).weights;
  const WeylGroup reps = coset_representatives(weyl_elements(levi.parent), levi.weyl);
  const std::size_t r = levi.rank();
  auto binomial = [r](const Weight& g) {
    LaurentPoly f(r, Cyclotomic(1));
    f.add_term(g, Cyclotomic(-1));
    return f;
  };
  // Distinct factors 1 - x^{w beta} across all fixed points.
  std::set<Weight> all;
  for (const auto& w : reps)
    for (const auto& b : tangent) all.insert(w.apply(b));
  LaurentPoly common(r, Cyclotomic(1));
  for (const auto& g : all) common = common * binomial(g);
  LaurentPoly num(r);
  for (const auto& w : reps) {
    std::set<Weight> own;
    for (const auto& b : tangent) own.insert(w.apply(b));
    LaurentPoly cofactor = act(w.matrix, a);
    for (const auto& g : all)
      if (!own.count(g)) cofactor = cofactor * binomial(g);
    num += cofactor;
  }
  LaurentPoly out = exact_div(num, common);
  if (!is_invariant(out, weyl_elements(levi.parent)))
    throw StructuralError("fixed-point sum " + out.str() + " is not Weyl-invariant");
  return out;
}

VerificationReport verify_alternate_induction(const SubDatum& levi,
                                              const std::vector<LaurentPoly>& samples) {
  VerificationReport rep;
  rep.suite = "alternate_induction";
  const SubDatum g = full_subdatum(levi.parent);
  const LaurentPoly lam = lambda_minus_one(relative_weights(levi, RelativeKind::g_mod_p, false));
  for (const auto& a : samples) {
    const LaurentPoly lhs = induce(g, levi, a);
    const LaurentPoly rhs = pushforward_fixed_points(levi, lam * a);
    rep.add({levi.parent.name() + " " + to_string(levi.kind), {{"a", pair_text(a)}}, pair_text(lhs),
             pair_text(rhs), lhs == rhs});
  }
  return rep;
}

CaseRecord check_reciprocity(const SubDatum& g, const SubDatum& sub, const LaurentPoly& a,
                             const LaurentPoly& b) {
  require_invariant(b, g, "reciprocity");
  const Cyclotomic lhs = hom_pairing(g, induce(g, sub, a), b);
  const LaurentPoly lam = lambda_minus_one(relative_weights(sub, RelativeKind::g_mod_z, true));
  const Cyclotomic rhs = hom_pairing(sub, lam * a, b);
  return {sub.parent.name() + " " + to_string(sub.kind),
          {{"a", pair_text(a)}, {"b", pair_text(b)}},
          lhs.str(),
          rhs.str(),
          lhs == rhs};
}

VerificationReport check_reciprocity(const SubDatum& sub,
                                     const std::vector<std::pair<LaurentPoly, LaurentPoly>>& pairs) {
  VerificationReport rep;
  rep.suite = "reciprocity";
  const SubDatum g = full_subdatum(sub.parent);
  for (const auto& [a, b] : pairs) rep.add(check_reciprocity(g, sub, a, b));
  return rep;
}

VerificationReport verify_induction_axioms(
    const InductionChain& chain, const std::vector<LaurentPoly>& transitivity,
    const std::vector<std::pair<LaurentPoly, LaurentPoly>>& projection) {
  VerificationReport rep;
  rep.suite = "induction_axioms";
  const std::string name = chain.g.parent.name();
  for (const auto& a : transitivity) {
    const LaurentPoly lhs = induce(chain.g, chain.h, induce(chain.h, chain.k, a));
    const LaurentPoly rhs = induce(chain.g, chain.k, a);
    rep.add({name + " transitivity", {{"a", pair_text(a)}}, pair_text(lhs), pair_text(rhs), lhs == rhs});
  }
  for (const auto& [alpha, beta] : projection) {
    require_invariant(beta, chain.g, "projection formula");
    const LaurentPoly lhs = induce(chain.g, chain.h, alpha * beta);
    const LaurentPoly rhs = induce(chain.g, chain.h, alpha) * beta;
    rep.add({name + " projection", {{"alpha", pair_text(alpha)}, {"beta", pair_text(beta)}},
             pair_text(lhs), pair_text(rhs), lhs == rhs});
  }
  return rep;
}

}  // namespace eqk
