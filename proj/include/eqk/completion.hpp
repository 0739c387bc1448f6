#pragma once

#include <optional>
#include <vector>

#include "eqk/laurent.hpp"
#include "eqk/rep_theory.hpp"
#include "eqk/report.hpp"
#include "eqk/root_datum.hpp"
#include "eqk/series.hpp"

namespace eqk {

/// x^lambda -> lambda(h) x^lambda.
LaurentPoly twist(const LaurentPoly& a, const TorsionPoint& q);
/// Twist of a character of H; q must be fixed by W_H.
VirtualCharacter twist(const VirtualCharacter& a, const TorsionPoint& q);

/// Expansion of a at h in the coordinates t: x^lambda -> lambda(h) exp(<lambda, t>) mod deg > k.
TruncatedSeries jet(const LaurentPoly& a, const TorsionPoint& q, unsigned k);
/// Moves a jet at q to the jet at w.q: s(t) -> s(w^T t), so that
/// jet(w.a, w.q, k) = jet_transport(w, jet(a, q, k)).
TruncatedSeries jet_transport(const WeylElement& w, const TruncatedSeries& s);
bool is_transport_invariant(const TruncatedSeries& s, const WeylGroup& w);
/// jet(a, 0, n).
TruncatedSeries chern_character(const LaurentPoly& a, unsigned n);

/// Series of T(u) = u / (1 - e^{-u}) in one variable up to degree n, by inverting (1 - e^{-u})/u.
std::vector<Rational> todd_coefficients(unsigned n);
/// prod over nonzero mu of T(<mu, t>) mod deg > n.
TruncatedSeries todd_class(const WeightMultiset& ws, unsigned n);
/// Todd class of the virtual bundle positive - negative.
TruncatedSeries todd_class_virtual(const WeightMultiset& positive, const WeightMultiset& negative,
                                   unsigned n);

/// ch(t_h(res_Z a)) for W-invariant a, with Z the centralizer of h. The result
/// is asserted to be W_Z-invariant.
TruncatedSeries tau_point(const RootDatum& parent, const TorsionPoint& q, const LaurentPoly& a,
                          unsigned n);

/// dim Sym^d(Q^r)^W by averaging traces of symmetric powers (Molien).
std::size_t molien_dimension(const WeylGroup& w, std::size_t rank, unsigned d);
/// The same dimension as the kernel of all (w - 1) on degree-d polynomials.
std::size_t invariant_dimension_brute_force(const WeylGroup& w, std::size_t rank, unsigned d);

/// Generators of m_Psi in R(G): chi_omega - chi_omega(h) for fundamental
/// weights and x^z - z(h) for a basis of central characters. nullopt when no
/// integral fundamental weights exist.
std::optional<std::vector<LaurentPoly>> maximal_ideal_generators(const RootDatum& parent,
                                                                 const TorsionPoint& q);

/// Per-degree ranks of tau on R(G) against dim CH^d(BZ) for d <= n.
GradedReport graded_iso_report(const RootDatum& parent, const TorsionPoint& q, unsigned n);

/// Joint jet map on the monomial box |lambda|_inf <= box onto jets of order
/// < k at every orbit point, plus vanishing of products of k generators.
/// The box defaults to k + the highest root height.
VerificationReport crt_decomposition_check(const RootDatum& parent, const TorsionPoint& q, unsigned k,
                                           std::optional<int> box = std::nullopt);

/// res_h o ind_h = id at jet order k for W_Z-invariant samples, and the orbit of
/// jets of the W-invariant ind(a) is recovered from the jet at q by transport.
VerificationReport indres_completion_check(const RootDatum& parent, const TorsionPoint& q, unsigned k,
                                           const std::vector<LaurentPoly>& samples);

struct ResidueFiber {
  std::size_t orbit_size = 0;
  /// dim of the local algebra C[[t]] / (generators) at one orbit point.
  std::size_t local_multiplicity = 0;
  std::size_t dimension() const { return orbit_size * local_multiplicity; }
};
/// dim of R(T) tensor_{R(G)} R(G)/m_Psi over C.
ResidueFiber residue_fiber(const RootDatum& parent, const TorsionPoint& q);

/// lambda_{-1}((g/z)^*) evaluated at h is nonzero.
VerificationReport central_invertibility_check(const RootDatum& parent, const TorsionPoint& q);

}  // namespace eqk
