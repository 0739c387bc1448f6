#pragma once

#include <map>
#include <string>

#include "eqk/cyclotomic.hpp"
#include "eqk/torsion.hpp"
#include "eqk/weight.hpp"

namespace eqk {

/// Element of the character ring R(T) = Q(zeta)[x_1^{+-1}, ..., x_r^{+-1}]:
/// a finitely supported map from exponent vectors to nonzero cyclotomic scalars.
class LaurentPoly {
 public:
  using Terms = std::map<Weight, Cyclotomic>;

  explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}
  LaurentPoly(std::size_t rank, const Cyclotomic& c);
  /// c * x^lambda.
  static LaurentPoly monomial(const Weight& lambda, const Cyclotomic& c = Cyclotomic(1));

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^lambda (zero if absent).
  Cyclotomic coefficient(const Weight& lambda) const;

  /// Adds c * x^lambda, dropping the term if it cancels.
  void add_term(const Weight& lambda, const Cyclotomic& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Cyclotomic& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Cyclotomic& c) { return a *= c; }
  friend LaurentPoly operator*(const Cyclotomic& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned e) const;

  /// Canonical text: terms by descending lexicographic exponent, variable x for
  /// rank 1 and x1..xr otherwise. `parse_laurent` reads it back exactly.
  std::string str() const;

 private:
  void check_rank(const LaurentPoly& o) const;
  std::size_t rank_;
  Terms terms_;
};

/// Exact quotient a / b in the Laurent ring. Throws DivisibilityError if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

class DivisibilityError : public ArithmeticError {
 public:
  DivisibilityError(const std::string& what, LaurentPoly remainder)
      : ArithmeticError(what), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// x^lambda -> x^{M lambda}, coefficients unchanged.
LaurentPoly act(const IntMatrix& m, const LaurentPoly& a);
/// x^lambda -> x^{-lambda}.
LaurentPoly dual(const LaurentPoly& a);
/// Coefficient of x^0.
Cyclotomic constant_term(const LaurentPoly& a);
/// Constant term of a*b without forming the product.
Cyclotomic constant_term_of_product(const LaurentPoly& a, const LaurentPoly& b);
/// x^lambda -> lambda(h), extended linearly.
Cyclotomic evaluate_at_torsion(const LaurentPoly& a, const TorsionPoint& q);

/// Unreduced quotient num/den of Laurent polynomials; no gcd is ever taken.
struct RationalFn {
  LaurentPoly num;
  LaurentPoly den;

  RationalFn(LaurentPoly n, LaurentPoly d);
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  /// The Laurent polynomial num/den; throws DivisibilityError if not exact.
  LaurentPoly to_polynomial() const { return exact_div(num, den); }
};

/// Parses sums and products of rationals, z<n> (roots of unity) and the
/// variables `var` (rank 1) or `var`1..`var`r, with integer powers.
LaurentPoly parse_laurent(const std::string& text, std::size_t rank, char var = 'x');
Cyclotomic parse_cyclotomic(const std::string& text);

/// Monomial text x1^2*x2^-1 (or "1" for the zero exponent).
std::string monomial_str(const Weight& e, char var);

}  // namespace eqk
