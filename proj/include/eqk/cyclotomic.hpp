#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace eqk {

using Rational = mpq_class;

/// n/d in lowest terms (mpq_class(n, d) alone does not canonicalize).
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Element of the cyclotomic field Q(zeta_n), stored on the power basis
/// 1, zeta, ..., zeta^{phi(n)-1} modulo the n-th cyclotomic polynomial.
///
/// Values of different conductors combine in Q(zeta_lcm); the conductor of a
/// result is the lcm of the operand conductors, never reduced automatically.
/// `normalized()` finds the smallest conductor that still contains the value.
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_(1) {}
  Cyclotomic(long v) : coeffs_{Rational(v)} {}  // NOLINT(implicit)
  Cyclotomic(const Rational& v) : coeffs_{v} {}  // NOLINT(implicit)
  Cyclotomic(unsigned conductor, std::vector<Rational> coeffs);

  /// zeta_n^k, for any integer k.
  static Cyclotomic root_of_unity(unsigned n, long k);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// The rational value, if the element lies in Q.
  std::optional<Rational> as_rational() const;

  /// Re-expresses the value in Q(zeta_m); m must be a multiple of conductor().
  Cyclotomic embed(unsigned m) const;
  /// Same value in the smallest cyclotomic field containing it.
  Cyclotomic normalized() const;
  /// Galois automorphism zeta -> zeta^k (gcd(k, n) = 1).
  Cyclotomic galois(long k) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  Cyclotomic conjugate() const { return galois(-1); }
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Canonical text, e.g. "-1/2 + 3*z12^2"; always rendered in the minimal conductor.
  std::string str() const;

 private:
  unsigned n_ = 1;
  std::vector<Rational> coeffs_;
};

/// Euler's totient.
unsigned euler_phi(unsigned n);
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

std::string rational_str(const Rational& q);

}  // namespace eqk
