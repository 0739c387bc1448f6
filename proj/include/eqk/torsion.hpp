#pragma once

#include <string>
#include <vector>

#include "eqk/cyclotomic.hpp"
#include "eqk/weight.hpp"

namespace eqk {

/// Finite-order element h of the maximal torus, written as q in (Q/Z)^r so that
/// a character lambda takes the value exp(2 pi i <lambda, q>) at h.
///
/// Stored as numerators over the common order n: q = numerators / n with every
/// numerator in [0, n) and n minimal. Equality is therefore equality mod 1.
class TorsionPoint {
 public:
  /// The identity element of a rank-r torus.
  explicit TorsionPoint(std::size_t rank = 0);
  /// q = numerators / denominator, reduced mod 1.
  TorsionPoint(const std::vector<long>& numerators, long denominator);
  explicit TorsionPoint(const std::vector<Rational>& q);

  /// Parses "1/2,0" style input; each entry is a rational.
  static TorsionPoint parse(const std::string& text);

  std::size_t rank() const { return num_.size(); }
  long order() const { return order_; }
  const std::vector<long>& numerators() const { return num_; }
  Rational coordinate(std::size_t i) const { return ratio(num_[i], order_); }
  bool is_identity() const { return order_ == 1; }

  /// <lambda, q> * order mod order: lambda(h) = zeta_order^k.
  long character_exponent(const Weight& lambda) const;
  /// lambda(h) as an element of Q(zeta_order).
  Cyclotomic character_value(const Weight& lambda) const;
  /// True iff <lambda, q> is an integer, i.e. lambda(h) = 1.
  bool kills(const Weight& lambda) const { return character_exponent(lambda) == 0; }

  /// Image under the torus automorphism with the given character-lattice matrix:
  /// the point q' with <lambda, q'> = <M^{-1} lambda, q>, i.e. q' = (M^{-1})^T q.
  TorsionPoint transform(const IntMatrix& inverse_matrix) const;

  friend TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b);
  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
  friend auto operator<=>(const TorsionPoint& a, const TorsionPoint& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

  /// "(1/2, 0)".
  std::string str() const;

 private:
  void canonicalize();
  std::vector<long> num_;
  long order_ = 1;
};

/// Every torsion point of rank r whose coordinates lie in (1/n) Z.
std::vector<TorsionPoint> torsion_grid(std::size_t rank, long n);

}  // namespace eqk
