#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "eqk/laurent.hpp"
#include "eqk/root_datum.hpp"

namespace eqk {

/// Multiset of integer weights of one rank, e.g. the weights of g/z.
struct WeightMultiset {
  std::size_t rank = 0;
  std::vector<Weight> weights;

  WeightMultiset negated() const;
};

/// Element of R(H) = R(T)^{W_H}: a Laurent polynomial tagged with the group
/// whose Weyl group it is invariant under. Invariance is checked on construction.
struct VirtualCharacter {
  LaurentPoly poly;
  std::shared_ptr<const SubDatum> group;

  VirtualCharacter(LaurentPoly p, std::shared_ptr<const SubDatum> g);
};

bool is_invariant(const LaurentPoly& a, const WeylGroup& w);

/// Irreducible character of highest weight lam (lam dominant).
LaurentPoly weyl_character(const RootDatum& datum, const Weight& lam, const WeylGroup& w);
LaurentPoly weyl_character(const RootDatum& datum, const Weight& lam);
/// Weyl dimension formula.
Rational weyl_dimension(const RootDatum& datum, const Weight& lam);

/// prod over the multiset of (1 - x^mu).
LaurentPoly lambda_minus_one(const WeightMultiset& ws);

enum class RelativeKind { g_mod_z, g_mod_p, p_mod_z };

/// Weights of g/h, g/p or p/h for an equal-rank subgroup h; p is the standard
/// parabolic containing h and every positive root. dualize negates each weight.
WeightMultiset relative_weights(const SubDatum& sub, RelativeKind kind, bool dualize);

/// Weyl integration formula: (1/|W_H|) CT(prod_{alpha in Phi_H} (1 - x^alpha) * a).
Cyclotomic invariant_dim(const SubDatum& group, const LaurentPoly& a);
Cyclotomic invariant_dim(const RootDatum& datum, const LaurentPoly& a);
/// invariant_dim(dual(a) * b); bilinear, no conjugation of coefficients.
Cyclotomic hom_pairing(const SubDatum& group, const LaurentPoly& a, const LaurentPoly& b);
Cyclotomic hom_pairing(const RootDatum& datum, const LaurentPoly& a, const LaurentPoly& b);

/// Multiplicities of irreducibles by repeatedly peeling off the leading
/// dominant term. The reconstruction is verified before returning.
std::vector<std::pair<Weight, Cyclotomic>> decompose_irreducibles(const RootDatum& datum,
                                                                  const LaurentPoly& a);

/// Dominant weights lam with sum |lam_i| <= height, lexicographically sorted.
std::vector<Weight> dominant_weights(const RootDatum& datum, int height);

}  // namespace eqk
