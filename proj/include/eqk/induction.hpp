#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "eqk/laurent.hpp"
#include "eqk/rep_theory.hpp"
#include "eqk/report.hpp"
#include "eqk/root_datum.hpp"

namespace eqk {

/// The inclusion R(G) -> R(H): same polynomial, re-tagged. Throws
/// StructuralError if the polynomial is not invariant under the target.
VirtualCharacter restrict(const VirtualCharacter& a, std::shared_ptr<const SubDatum> target);

/// ind_from^to(a) = sum over coset representatives w of W_to / W_from of w.a.
/// Both groups are subgroups of the same parent and W_from must lie in W_to.
LaurentPoly induce(const SubDatum& to, const SubDatum& from, const LaurentPoly& a);
/// Induction from sub to its parent.
LaurentPoly induce(const SubDatum& sub, const LaurentPoly& a);

/// Torus-fixed-point formula on G/P for the standard parabolic P with Levi `levi`:
///   sum_{w in W/W_L} w( a / prod_{alpha < 0, alpha not in L} (1 - x^alpha) ),
/// over one common denominator, divided exactly at the end.
LaurentPoly pushforward_fixed_points(const SubDatum& levi, const LaurentPoly& a);

/// ind(a) against the pushforward of lambda_{-1}(g/p) * a, one case per sample.
VerificationReport verify_alternate_induction(const SubDatum& levi,
                                              const std::vector<LaurentPoly>& samples);

/// Hom_G(ind a, b) against Hom_H(lambda_{-1}(g*/h*) a, res b) for one pair.
CaseRecord check_reciprocity(const SubDatum& g, const SubDatum& sub, const LaurentPoly& a,
                             const LaurentPoly& b);
VerificationReport check_reciprocity(const SubDatum& sub,
                                     const std::vector<std::pair<LaurentPoly, LaurentPoly>>& pairs);

/// Nested subgroups K in H in G of one parent.
struct InductionChain {
  SubDatum g;
  SubDatum h;
  SubDatum k;
};

/// Transitivity ind_H^G ind_K^H = ind_K^G on `transitivity` (W_K-invariant) and
/// the projection formula ind(alpha res beta) = ind(alpha) beta on `projection`
/// pairs (alpha in R(H), beta in R(G)).
VerificationReport verify_induction_axioms(
    const InductionChain& chain, const std::vector<LaurentPoly>& transitivity,
    const std::vector<std::pair<LaurentPoly, LaurentPoly>>& projection);

}  // namespace eqk
