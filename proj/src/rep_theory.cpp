#include "eqk/rep_theory.hpp"

#include <algorithm>
#include <set>

#include "eqk/errors.hpp"

namespace eqk {

WeightMultiset WeightMultiset::negated() const {
  WeightMultiset out{rank, {}};
  for (const auto& w : weights) out.weights.push_back(-w);
  return out;
}

bool is_invariant(const LaurentPoly& a, const WeylGroup& w) {
  return std::all_of(w.begin(), w.end(),
                     [&](const WeylElement& g) { return g.is_identity() || act(g.matrix, a) == a; });
}

VirtualCharacter::VirtualCharacter(LaurentPoly p, std::shared_ptr<const SubDatum> g)
    : poly(std::move(p)), group(std::move(g)) {
  if (!group) throw PreconditionError("virtual character without a group");
  if (poly.rank() != group->rank() && !poly.is_zero())
    throw PreconditionError("character rank does not match the group");
  if (!is_invariant(poly, group->weyl))
    throw PreconditionError(poly.str() + " is not invariant under the Weyl group of " +
                            group->describe());
}

namespace {

Weight two_rho(const RootDatum& d) {
  Weight s(d.rank());
  for (std::size_t i : d.positive_roots()) s = s + d.roots()[i];
  return s;
}

Weight two_rho_check(const RootDatum& d) {
  Weight s(d.rank());
  for (std::size_t i : d.positive_roots()) s = s + d.coroots()[i];
  return s;
}

LaurentPoly alternating_sum(const Weight& mu, const WeylGroup& w) {
  LaurentPoly out(mu.size());
  for (const auto& g : w) out.add_term(g.apply(mu), Cyclotomic(g.sign()));
  return out;
}

}  // namespace

LaurentPoly weyl_character(const RootDatum& datum, const Weight& lam, const WeylGroup& w) {
  if (lam.size() != datum.rank()) throw PreconditionError("weight has the wrong rank");
  if (!datum.is_dominant(lam))
    throw PreconditionError("weight " + lam.str() + " is not dominant for " + datum.name());
  // Work with doubled exponents so that 2*rho is always integral, then halve.
  const Weight r2 = two_rho(datum);
  const LaurentPoly num = alternating_sum(2 * lam + r2, w);
  const LaurentPoly den = alternating_sum(r2, w);
  LaurentPoly q = exact_div(num, den);
  if (q * den != num) throw StructuralError("Weyl character division failed to multiply back");
  LaurentPoly out(datum.rank());
  for (const auto& [e, c] : q.terms()) {
    Weight half(datum.rank());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] % 2 != 0) throw StructuralError("Weyl character has a non-integral weight");
      half[i] = e[i] / 2;
    }
    out.add_term(half, c);
  }
  return out;
}

LaurentPoly weyl_character(const RootDatum& datum, const Weight& lam) {
  return weyl_character(datum, lam, weyl_elements(datum));
}

Rational weyl_dimension(const RootDatum& datum, const Weight& lam) {
  const Weight r2 = two_rho(datum);
  const Weight top = 2 * lam + r2;
  Rational d = 1;
  for (std::size_t i : datum.positive_roots())
    d *= ratio(pairing(top, datum.coroots()[i]), pairing(r2, datum.coroots()[i]));
  return d;
}

LaurentPoly lambda_minus_one(const WeightMultiset& ws) {
  LaurentPoly out(ws.rank, Cyclotomic(1));
  for (const auto& mu : ws.weights) {
    LaurentPoly f(ws.rank, Cyclotomic(1));
    f.add_term(mu, Cyclotomic(-1));
    out = out * f;
  }
  return out;
}

WeightMultiset relative_weights(const SubDatum& sub, RelativeKind kind, bool dualize) {
  const RootDatum& d = sub.parent;
  if (kind != RelativeKind::g_mod_z && !sub.is_standard_levi())
    throw PreconditionError("parabolic weights need a standard Levi subgroup, got " + sub.describe());
  WeightMultiset out{d.rank(), {}};
  for (std::size_t i = 0; i < d.roots().size(); ++i) {
    if (sub.contains_root(i)) continue;
    bool take = kind == RelativeKind::g_mod_z ||
                (kind == RelativeKind::g_mod_p && !d.is_positive(i)) ||
                (kind == RelativeKind::p_mod_z && d.is_positive(i));
    if (take) out.weights.push_back(dualize ? -d.roots()[i] : d.roots()[i]);
  }
  return out;
}

Cyclotomic invariant_dim(const SubDatum& group, const LaurentPoly& a) {
  WeightMultiset phi{group.rank(), {}};
  for (std::size_t i : group.roots) phi.weights.push_back(group.parent.roots()[i]);
  const Cyclotomic ct = constant_term_of_product(lambda_minus_one(phi), a);
  return ct * Cyclotomic(ratio(1, static_cast<long>(group.weyl.size())));
}

Cyclotomic invariant_dim(const RootDatum& datum, const LaurentPoly& a) {
  return invariant_dim(full_subdatum(datum), a);
}

Cyclotomic hom_pairing(const SubDatum& group, const LaurentPoly& a, const LaurentPoly& b) {
  return invariant_dim(group, dual(a) * b);
}

Cyclotomic hom_pairing(const RootDatum& datum, const LaurentPoly& a, const LaurentPoly& b) {
  return hom_pairing(full_subdatum(datum), a, b);
}

std::vector<std::pair<Weight, Cyclotomic>> decompose_irreducibles(const RootDatum& datum,
                                                                  const LaurentPoly& a) {
  const WeylGroup w = weyl_elements(datum);
  if (!is_invariant(a, w)) throw PreconditionError(a.str() + " is not Weyl-invariant");
  const Weight r2c = two_rho_check(datum);
  std::vector<std::pair<Weight, Cyclotomic>> out;
  std::set<Weight> peeled;
  LaurentPoly rest = a;
  while (!rest.is_zero()) {
    std::optional<Weight> lead;
    for (const auto& [e, c] : rest.terms()) {
      if (!datum.is_dominant(e)) continue;
      if (!lead || pairing(e, r2c) > pairing(*lead, r2c) ||
          (pairing(e, r2c) == pairing(*lead, r2c) && e > *lead))
        lead = e;
    }
    if (!lead) throw StructuralError("invariant element without a dominant term: " + rest.str());
    if (!peeled.insert(*lead).second)
      throw StructuralError("peeling revisited the weight " + lead->str());
    const Cyclotomic m = rest.coefficient(*lead);
    rest -= weyl_character(datum, *lead, w) * m;
    out.emplace_back(*lead, m);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  LaurentPoly check(a.rank());
  for (const auto& [lam, m] : out) check += weyl_character(datum, lam, w) * m;
  if (check != a) throw StructuralError("decomposition does not reconstruct its input");
  return out;
}

std::vector<Weight> dominant_weights(const RootDatum& datum, int height) {
  const std::size_t r = datum.rank();
  std::vector<Weight> out;
  Weight cur(r);
  // Enumerate the l1 ball coordinate by coordinate.
  auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == r) {
      if (datum.is_dominant(cur)) out.push_back(cur);
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      cur[i] = v;
      self(self, i + 1, budget - (v < 0 ? -v : v));
    }
    cur[i] = 0;
  };
  rec(rec, 0, height);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eqk
