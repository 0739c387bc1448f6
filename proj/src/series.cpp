#include "eqk/series.hpp"

#include <algorithm>

#include "eqk/errors.hpp"
#include "eqk/render.hpp"

namespace eqk {

namespace {

int degree(const Weight& e) { return e.height(); }

Rational factorial(unsigned n) {
  Rational f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Weight> monomials_of_degree(std::size_t rank, unsigned d) {
  std::vector<Weight> out;
  Weight cur(rank);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == rank) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (rank == 0) return {Weight(0)};
  rec(rec, 0, static_cast<int>(d));
  return out;
}

std::vector<Weight> monomials_up_to(std::size_t rank, unsigned n) {
  std::vector<Weight> out;
  for (unsigned d = 0; d <= n; ++d) {
    auto m = monomials_of_degree(rank, d);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

TruncatedSeries TruncatedSeries::constant(std::size_t rank, unsigned order, const Cyclotomic& c) {
  TruncatedSeries s(rank, order);
  s.add_term(Weight(rank), c);
  return s;
}

TruncatedSeries TruncatedSeries::linear_form(const Weight& lambda, unsigned order) {
  TruncatedSeries s(lambda.size(), order);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    Weight e(lambda.size());
    e[i] = 1;
    s.add_term(e, Cyclotomic(lambda[i]));
  }
  return s;
}

TruncatedSeries TruncatedSeries::exp_linear(const Weight& lambda, unsigned order) {
  // Coefficient of t^beta is prod_i lambda_i^beta_i / beta_i!.
  TruncatedSeries s(lambda.size(), order);
  for (const auto& beta : monomials_up_to(lambda.size(), order)) {
    Rational c = 1;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      Rational p = 1;
      for (int k = 0; k < beta[i]; ++k) p *= lambda[i];
      c *= p / factorial(static_cast<unsigned>(beta[i]));
    }
    if (c != 0) s.add_term(beta, Cyclotomic(c));
  }
  return s;
}

void TruncatedSeries::check(const TruncatedSeries& o) const {
  if (rank_ != o.rank_) throw PreconditionError("series rank mismatch");
  if (order_ != o.order_) throw PreconditionError("series truncation order mismatch");
}

Cyclotomic TruncatedSeries::coefficient(const Weight& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void TruncatedSeries::add_term(const Weight& e, const Cyclotomic& c) {
  if (e.size() != rank_) throw PreconditionError("series exponent rank mismatch");
  if (degree(e) > static_cast<int>(order_) || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries& TruncatedSeries::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check(b);
  TruncatedSeries out(a.rank_, a.order_);
  const int n = static_cast<int>(a.order_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = degree(ea);
    for (const auto& [eb, cb] : b.terms_)
      if (da + degree(eb) <= n) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.rank_ == b.rank_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Cyclotomic c0 = coefficient(Weight(rank_));
  if (c0.is_zero()) throw ArithmeticError("series with zero constant term is not invertible");
  // 1/(c0 (1 - u)) = (1/c0) sum u^k with u = 1 - s/c0, which has no constant term.
  const Cyclotomic inv0 = c0.inverse();
  TruncatedSeries u = constant(rank_, order_, Cyclotomic(1)) - *this * inv0;
  TruncatedSeries sum = constant(rank_, order_, Cyclotomic(1));
  TruncatedSeries power = sum;
  for (unsigned k = 1; k <= order_; ++k) {
    power = power * u;
    sum += power;
  }
  return sum * inv0;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  TruncatedSeries out(rank_, order);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

TruncatedSeries TruncatedSeries::degree_component(unsigned d) const {
  TruncatedSeries out(rank_, order_);
  for (const auto& [e, c] : terms_)
    if (degree(e) == static_cast<int>(d)) out.add_term(e, c);
  return out;
}

unsigned TruncatedSeries::valuation() const {
  unsigned v = order_ + 1;
  for (const auto& [e, c] : terms_) v = std::min(v, static_cast<unsigned>(degree(e)));
  return v;
}

TruncatedSeries TruncatedSeries::substitute(const IntMatrix& m) const {
  if (m.rows() != rank_ || m.cols() != rank_) throw PreconditionError("substitution size mismatch");
  std::vector<TruncatedSeries> image;
  for (std::size_t i = 0; i < rank_; ++i) {
    Weight row(rank_);
    for (std::size_t j = 0; j < rank_; ++j) row[j] = static_cast<int>(m(i, j));
    image.push_back(linear_form(row, order_));
  }
  TruncatedSeries out(rank_, order_);
  for (const auto& [e, c] : terms_) {
    TruncatedSeries term = constant(rank_, order_, c);
    for (std::size_t i = 0; i < rank_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * image[i];
    out += term;
  }
  return out;
}

std::string TruncatedSeries::str() const {
  std::vector<std::pair<Weight, Cyclotomic>> terms(terms_.begin(), terms_.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (degree(a.first) != degree(b.first)) return degree(a.first) < degree(b.first);
    return a.first > b.first;
  });
  return render_terms(terms, "t", 't');
}

}  // namespace eqk
