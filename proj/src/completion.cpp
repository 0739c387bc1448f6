#include "eqk/completion.hpp"

#include <algorithm>
#include <sstream>

#include "eqk/errors.hpp"
#include "eqk/induction.hpp"
#include "eqk/linalg.hpp"

namespace eqk {

namespace {

// Columns of coefficients of each series on the given monomials, as matrix rows
// indexed by monomial.
CycMatrix coefficient_matrix(const std::vector<TruncatedSeries>& columns, const std::vector<Weight>& mons) {
  CycMatrix rows(mons.size(), std::vector<Cyclotomic>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < mons.size(); ++i) rows[i][j] = columns[j].coefficient(mons[i]);
  return rows;
}

std::size_t element_order(const WeylElement& w) {
  const WeylElement id = WeylElement::identity(w.rank());
  WeylElement p = w;
  std::size_t k = 1;
  while (!(p == id)) {
    p = p * w;
    ++k;
  }
  return k;
}

TruncatedSeries shift(const TruncatedSeries& s, const Weight& e) {
  TruncatedSeries out(s.rank(), s.order());
  for (const auto& [m, c] : s.terms()) out.add_term(m + e, c);
  return out;
}

std::string count_text(std::size_t n) { return std::to_string(n); }

}  // namespace

LaurentPoly twist(const LaurentPoly& a, const TorsionPoint& q) {
  if (a.rank() != q.rank() && !a.is_zero()) throw PreconditionError("twist: rank mismatch");
  LaurentPoly out(a.rank());
  for (const auto& [e, c] : a.terms()) out.add_term(e, c * q.character_value(e));
  return out;
}

VirtualCharacter twist(const VirtualCharacter& a, const TorsionPoint& q) {
  for (const auto& w : a.group->weyl)
    if (!(w.apply(q) == q))
      throw PreconditionError("twist: " + q.str() + " is not fixed by the Weyl group of " +
                              a.group->describe());
  return VirtualCharacter(twist(a.poly, q), a.group);
}

TruncatedSeries jet(const LaurentPoly& a, const TorsionPoint& q, unsigned k) {
  if (a.rank() != q.rank() && !a.is_zero()) throw PreconditionError("jet: rank mismatch");
  TruncatedSeries out(q.rank(), k);
  for (const auto& [e, c] : a.terms()) out += TruncatedSeries::exp_linear(e, k) * (c * q.character_value(e));
  return out;
}

TruncatedSeries jet_transport(const WeylElement& w, const TruncatedSeries& s) {
  if (w.is_identity()) return s;
  return s.substitute(w.matrix.transpose());
}

bool is_transport_invariant(const TruncatedSeries& s, const WeylGroup& w) {
  return std::all_of(w.begin(), w.end(), [&](const WeylElement& g) { return jet_transport(g, s) == s; });
}

TruncatedSeries chern_character(const LaurentPoly& a, unsigned n) {
  return jet(a, TorsionPoint(a.rank()), n);
}

std::vector<Rational> todd_coefficients(unsigned n) {
  // (1 - e^{-u}) / u = sum_k (-1)^k u^k / (k+1)!
  TruncatedSeries f(1, n);
  Rational fact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    fact *= (k + 1);
    Rational c = Rational(k % 2 == 0 ? 1 : -1) / fact;
    f.add_term(Weight{static_cast<int>(k)}, Cyclotomic(c));
  }
  TruncatedSeries t = f.inverse();
  std::vector<Rational> out(n + 1);
  for (unsigned k = 0; k <= n; ++k) out[k] = *t.coefficient(Weight{static_cast<int>(k)}).as_rational();
  return out;
}

TruncatedSeries todd_class(const WeightMultiset& ws, unsigned n) {
  const std::vector<Rational> c = todd_coefficients(n);
  TruncatedSeries out = TruncatedSeries::constant(ws.rank, n, Cyclotomic(1));
  for (const auto& mu : ws.weights) {
    if (mu.is_zero()) continue;
    const TruncatedSeries u = TruncatedSeries::linear_form(mu, n);
    TruncatedSeries factor = TruncatedSeries::constant(ws.rank, n, Cyclotomic(1));
    TruncatedSeries power = factor;
    for (unsigned k = 1; k <= n; ++k) {
      power = power * u;
      factor += power * Cyclotomic(c[k]);
    }
    out = out * factor;
  }
  return out;
}

TruncatedSeries todd_class_virtual(const WeightMultiset& positive, const WeightMultiset& negative,
                                   unsigned n) {
  return todd_class(positive, n) * todd_class(negative, n).inverse();
}

TruncatedSeries tau_point(const RootDatum& parent, const TorsionPoint& q, const LaurentPoly& a,
                          unsigned n) {
  if (!is_invariant(a, weyl_elements(parent)))
    throw PreconditionError("tau: " + a.str() + " is not Weyl-invariant");
  auto z = std::make_shared<const SubDatum>(centralizer_subdatum(parent, q));
  auto g = std::make_shared<const SubDatum>(full_subdatum(parent));
  const VirtualCharacter res = restrict(VirtualCharacter(a, g), z);
  const TruncatedSeries out = chern_character(twist(res, q).poly, n);
  if (!is_transport_invariant(out, z->weyl))
    throw StructuralError("tau image " + out.str() + " is not invariant under W(Z)");
  return out;
}

std::size_t molien_dimension(const WeylGroup& w, std::size_t rank, unsigned d) {
  // trace of g on Sym^d is the s^d coefficient of 1/det(1 - s g).
  Rational total = 0;
  for (const auto& g : w) {
    std::vector<Rational> c(rank + 1, 0);  // det(1 - s g) = sum_k (-1)^k e_k(g) s^k
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < rank; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      IntMatrix sub(idx.size(), idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = g.matrix(idx[i], idx[j]);
      const long minor = idx.empty() ? 1 : sub.determinant();
      c[idx.size()] += (idx.size() % 2 == 0 ? minor : -minor);
    }
    std::vector<Rational> h(d + 1, 0);
    h[0] = 1;
    for (unsigned m = 1; m <= d; ++m)
      for (std::size_t k = 1; k <= std::min<std::size_t>(m, rank); ++k) h[m] -= c[k] * h[m - k];
    total += h[d];
  }
  total /= static_cast<long>(w.size());
  if (total.get_den() != 1 || total < 0) throw StructuralError("Molien average is not a natural number");
  return total.get_num().get_ui();
}

std::size_t invariant_dimension_brute_force(const WeylGroup& w, std::size_t rank, unsigned d) {
  const std::vector<Weight> basis = monomials_of_degree(rank, d);
  CycMatrix rows;
  for (const auto& g : w) {
    if (g.is_identity()) continue;
    std::vector<TruncatedSeries> cols;
    for (const auto& m : basis) {
      TruncatedSeries s(rank, d);
      s.add_term(m, Cyclotomic(1));
      cols.push_back(jet_transport(g, s) - s);
    }
    CycMatrix block = coefficient_matrix(cols, basis);
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return basis.size() - (rows.empty() ? 0 : matrix_rank(rows));
}

std::optional<std::vector<LaurentPoly>> maximal_ideal_generators(const RootDatum& parent,
                                                                 const TorsionPoint& q) {
  auto fw = parent.fundamental_weights();
  if (!fw) return std::nullopt;
  const WeylGroup w = weyl_elements(parent);
  std::vector<LaurentPoly> out;
  auto centred = [&](LaurentPoly chi) {
    chi -= LaurentPoly(parent.rank(), evaluate_at_torsion(chi, q));
    return chi;
  };
  for (const auto& omega : *fw) out.push_back(centred(weyl_character(parent, omega, w)));
  for (const auto& z : parent.central_characters()) out.push_back(centred(LaurentPoly::monomial(z)));
  return out;
}

GradedReport graded_iso_report(const RootDatum& parent, const TorsionPoint& q, unsigned n) {
  const SubDatum z = centralizer_subdatum(parent, q);
  const std::size_t r = parent.rank();
  GradedReport rep;
  rep.parent = parent.name();
  rep.point = q.str();
  rep.centralizer = z.describe();
  rep.warning_not_simply_connected = !parent.simply_connected_commutator();
  for (unsigned d = 0; d <= n; ++d) {
    GradedDegree g;
    g.degree = d;
    g.target_dim = molien_dimension(z.weyl, r, d);
    g.brute_force_dim = invariant_dimension_brute_force(z.weyl, r, d);
    rep.degrees.push_back(g);
  }
  const auto gens = maximal_ideal_generators(parent, q);
  if (!gens) {
    rep.inconclusive = true;
    rep.notes.push_back("no integral fundamental weights: generators of the maximal ideal unavailable");
    return rep;
  }
  if (rep.warning_not_simply_connected)
    rep.notes.push_back("parent commutator is not simply connected; Z may be disconnected");

  // Leading forms of the generators have degree at most the largest element
  // order of W_Z, so products of d generators are detected by degree d * h.
  std::size_t h = 1;
  for (const auto& w : z.weyl) h = std::max(h, element_order(w));
  const unsigned top = std::max<unsigned>(n, static_cast<unsigned>(n * h));
  std::vector<TruncatedSeries> tau_gens;
  for (const auto& g : *gens) {
    tau_point(parent, q, g, n);  // asserts W_Z-invariance
    tau_gens.push_back(chern_character(twist(g, q), top));
  }
  const std::size_t m = gens->size();
  const std::vector<Weight> exps = monomials_up_to(m, n);
  std::vector<TruncatedSeries> images;
  for (const auto& beta : exps) {
    TruncatedSeries s = TruncatedSeries::constant(r, top, Cyclotomic(1));
    for (std::size_t i = 0; i < m; ++i)
      for (int k = 0; k < beta[i]; ++k) s = s * tau_gens[i];
    images.push_back(s);
  }
  rep.notes.push_back(std::to_string(m) + " generators; products up to degree " + std::to_string(n) +
                      "; injectivity tested through t-degree " + std::to_string(top));

  // Surjectivity: dim gr^d of the span of all images inside the truncation at n.
  std::vector<TruncatedSeries> low;
  for (const auto& s : images) low.push_back(s.truncated(n));
  std::size_t previous = 0;
  for (unsigned d = 0; d <= n; ++d) {
    const std::size_t rk = matrix_rank(coefficient_matrix(low, monomials_up_to(r, d)));
    GradedDegree& g = rep.degrees[d];
    g.source_rank = rk - previous;
    previous = rk;
    g.surjective = g.source_rank == g.target_dim;
  }
  // Injectivity: the images of all products of at most d generators are independent.
  for (unsigned d = 0; d <= n; ++d) {
    std::vector<TruncatedSeries> cols;
    for (std::size_t j = 0; j < exps.size(); ++j)
      if (exps[j].height() <= static_cast<int>(d)) cols.push_back(images[j].truncated(static_cast<unsigned>(d * h)));
    const std::size_t rk = matrix_rank(coefficient_matrix(cols, monomials_up_to(r, static_cast<unsigned>(d * h))));
    rep.degrees[d].injective = rk == cols.size();
  }
  return rep;
}

VerificationReport crt_decomposition_check(const RootDatum& parent, const TorsionPoint& q, unsigned k,
                                           std::optional<int> box) {
  if (k == 0) throw PreconditionError("jet order k must be positive");
  VerificationReport rep;
  rep.suite = "crt";
  const std::size_t r = parent.rank();
  const auto orbit = orbit_and_stabilizer(parent, q).orbit;
  const int b = box.value_or(static_cast<int>(k) + parent.max_root_height());
  const std::vector<Weight> jet_mons = monomials_up_to(r, k - 1);

  // One row per box monomial: its jets at every orbit point.
  CycMatrix rows;
  Weight lam(r);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == r) {
      std::vector<Cyclotomic> row;
      for (const auto& p : orbit) {
        const TruncatedSeries s = jet(LaurentPoly::monomial(lam), p, k - 1);
        for (const auto& m : jet_mons) row.push_back(s.coefficient(m));
      }
      rows.push_back(std::move(row));
      return;
    }
    for (int v = -b; v <= b; ++v) {
      lam[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  const std::size_t expected = orbit.size() * jet_mons.size();
  const std::size_t rk = matrix_rank(rows);
  const std::string label = parent.name() + " q=" + q.str() + " k=" + std::to_string(k);
  rep.add({label + " surjectivity",
           {{"orbit", count_text(orbit.size())}, {"jet monomials", count_text(jet_mons.size())},
            {"box", std::to_string(b)}},
           count_text(rk),
           count_text(expected),
           rk == expected});
  if (rk < expected) {
    rep.inconclusive = true;
    rep.note("box bound " + std::to_string(b) + " too small for surjectivity; try --box " +
             std::to_string(b + 2));
  }
  if (orbit.size() == 1)
    rep.note("single-point orbit (central h): the decomposition reduces to completing at one point");

  const auto gens = maximal_ideal_generators(parent, q);
  if (!gens) {
    rep.inconclusive = true;
    rep.note("generators of the maximal ideal unavailable; containment not checked");
    return rep;
  }
  for (const auto& beta : monomials_of_degree(gens->size(), k)) {
    LaurentPoly prod(r, Cyclotomic(1));
    std::string name;
    for (std::size_t i = 0; i < gens->size(); ++i)
      for (int j = 0; j < beta[i]; ++j) {
        prod = prod * (*gens)[i];
        name += (name.empty() ? "g" : "*g") + std::to_string(i + 1);
      }
    bool zero = true;
    std::string witness = "0";
    for (const auto& p : orbit) {
      const TruncatedSeries s = jet(prod, p, k - 1);
      if (!s.is_zero()) {
        zero = false;
        witness = s.str() + " at " + p.str();
        break;
      }
    }
    rep.add({label + " containment", {{"product", name}}, witness, "0", zero});
  }
  return rep;
}

VerificationReport indres_completion_check(const RootDatum& parent, const TorsionPoint& q, unsigned k,
                                           const std::vector<LaurentPoly>& samples) {
  VerificationReport rep;
  rep.suite = "indres";
  const SubDatum g = full_subdatum(parent);
  const SubDatum z = centralizer_subdatum(parent, q);
  const WeylGroup reps = coset_representatives(g.weyl, z.weyl);
  const std::string label = parent.name() + " q=" + q.str() + " k=" + std::to_string(k);
  for (const auto& a : samples) {
    const LaurentPoly ind = induce(g, z, a);
    TruncatedSeries lhs = jet(ind, q, k);
    for (const auto& w : reps)
      if (!w.is_identity()) lhs -= jet_transport(w, jet(a, w.inv().apply(q), k));
    const TruncatedSeries rhs = jet(a, q, k);
    rep.add({label + " res_h ind_h", {{"a", a.str()}}, lhs.str(), rhs.str(), lhs == rhs});

    const TruncatedSeries base = jet(ind, q, k);
    for (const auto& w : reps) {
      const TorsionPoint p = w.apply(q);
      const TruncatedSeries direct = jet(ind, p, k);
      const TruncatedSeries moved = jet_transport(w, base);
      rep.add({label + " orbit reconstruction", {{"b", ind.str()}, {"point", p.str()}}, direct.str(),
               moved.str(), direct == moved});
    }
  }
  if (z.roots.empty()) {
    // Z = T: products of fewer than k generators span all jets of order < k at h.
    if (auto gens = maximal_ideal_generators(parent, q)) {
      std::vector<TruncatedSeries> cols;
      for (const auto& beta : monomials_up_to(gens->size(), k - 1)) {
        LaurentPoly prod(parent.rank(), Cyclotomic(1));
        for (std::size_t i = 0; i < gens->size(); ++i)
          for (int j = 0; j < beta[i]; ++j) prod = prod * (*gens)[i];
        cols.push_back(jet(prod, q, k - 1));
      }
      const auto mons = monomials_up_to(parent.rank(), k - 1);
      const std::size_t rk = matrix_rank(coefficient_matrix(cols, mons));
      rep.add({label + " jet map R(G)/m^k -> jets at h", {{"generators", count_text(gens->size())}},
               count_text(rk), count_text(mons.size()), rk == mons.size()});
    }
  }
  return rep;
}

ResidueFiber residue_fiber(const RootDatum& parent, const TorsionPoint& q) {
  const auto gens = maximal_ideal_generators(parent, q);
  if (!gens) throw PreconditionError("residue fiber needs integral fundamental weights");
  ResidueFiber out;
  out.orbit_size = orbit_and_stabilizer(parent, q).orbit.size();
  const std::size_t r = parent.rank();
  // dim C[t] / (I + m^K) for growing K until it stops changing.
  std::optional<std::size_t> last;
  for (unsigned order = 0; order < 16; ++order) {
    const auto mons = monomials_up_to(r, order);
    std::vector<TruncatedSeries> span;
    for (const auto& g : *gens) {
      const TruncatedSeries s = jet(g, q, order);
      for (const auto& e : mons) span.push_back(shift(s, e));
    }
    const std::size_t dim = mons.size() - matrix_rank(coefficient_matrix(span, mons));
    if (last && *last == dim) {
      out.local_multiplicity = dim;
      return out;
    }
    last = dim;
  }
  throw ResourceError("local multiplicity did not stabilise by order 16");
}

VerificationReport central_invertibility_check(const RootDatum& parent, const TorsionPoint& q) {
  VerificationReport rep;
  rep.suite = "central_invertibility";
  const SubDatum z = centralizer_subdatum(parent, q);
  const LaurentPoly u = lambda_minus_one(relative_weights(z, RelativeKind::g_mod_z, true));
  const Cyclotomic value = evaluate_at_torsion(u, q);
  rep.add({parent.name() + " q=" + q.str(),
           {{"q", q.str()}, {"roots outside Z", count_text(parent.roots().size() - z.roots.size())}},
           value.str(),
           "nonzero",
           !value.is_zero()});
  return rep;
}

}  // namespace eqk
