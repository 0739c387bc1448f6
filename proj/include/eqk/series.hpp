#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqk/cyclotomic.hpp"
#include "eqk/weight.hpp"

namespace eqk {

/// Polynomial in t_1..t_r over the cyclotomic field, truncated past total
/// degree N. Exponents are non-negative Weights.
class TruncatedSeries {
 public:
  using Terms = std::map<Weight, Cyclotomic>;

  explicit TruncatedSeries(std::size_t rank = 0, unsigned order = 0) : rank_(rank), order_(order) {}
  static TruncatedSeries constant(std::size_t rank, unsigned order, const Cyclotomic& c);
  /// <lambda, t> = sum lambda_i t_i.
  static TruncatedSeries linear_form(const Weight& lambda, unsigned order);
  /// exp(<lambda, t>) truncated.
  static TruncatedSeries exp_linear(const Weight& lambda, unsigned order);

  std::size_t rank() const { return rank_; }
  unsigned order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Cyclotomic coefficient(const Weight& e) const;
  /// Adds c * t^e; ignored past the truncation order.
  void add_term(const Weight& e, const Cyclotomic& c);

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Cyclotomic& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Cyclotomic& c) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Multiplicative inverse; the constant term must be nonzero.
  TruncatedSeries inverse() const;
  /// Same series viewed at a lower order.
  TruncatedSeries truncated(unsigned order) const;
  /// Homogeneous part of degree d.
  TruncatedSeries degree_component(unsigned d) const;
  /// Lowest degree with a nonzero term (order + 1 for the zero series).
  unsigned valuation() const;
  /// Linear change of variables t_i -> sum_j m(i, j) t_j.
  TruncatedSeries substitute(const IntMatrix& m) const;

  /// Terms by ascending degree, "t" for rank 1 and t1..tr otherwise.
  std::string str() const;

 private:
  void check(const TruncatedSeries& o) const;
  std::size_t rank_;
  unsigned order_;
  Terms terms_;
};

/// Exponent vectors of total degree <= n in r variables, by degree then
/// descending lexicographic order.
std::vector<Weight> monomials_up_to(std::size_t rank, unsigned n);
/// Exponent vectors of total degree exactly d.
std::vector<Weight> monomials_of_degree(std::size_t rank, unsigned d);

}  // namespace eqk
