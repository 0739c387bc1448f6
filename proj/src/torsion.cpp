#include "eqk/torsion.hpp"

#include <numeric>
#include <sstream>

#include "eqk/errors.hpp"

namespace eqk {

namespace {
long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}
}  // namespace

TorsionPoint::TorsionPoint(std::size_t rank) : num_(rank, 0), order_(1) {}

TorsionPoint::TorsionPoint(const std::vector<long>& numerators, long denominator)
    : num_(numerators), order_(denominator) {
  if (denominator <= 0) throw PreconditionError("torsion point denominator must be positive");
  canonicalize();
}

TorsionPoint::TorsionPoint(const std::vector<Rational>& q) {
  long den = 1;
  for (const auto& c : q) den = std::lcm(den, c.get_den().get_si());
  num_.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational scaled = q[i] * den;
    num_[i] = scaled.get_num().get_si();
  }
  order_ = den;
  canonicalize();
}

void TorsionPoint::canonicalize() {
  for (auto& v : num_) v = mod(v, order_);
  long g = order_;
  for (long v : num_) g = std::gcd(g, v);
  if (g > 1) {
    order_ /= g;
    for (auto& v : num_) v /= g;
  }
}

TorsionPoint TorsionPoint::parse(const std::string& text) {
  std::vector<Rational> q;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t()");
    auto e = item.find_last_not_of(" \t()");
    if (b == std::string::npos) throw ParseError("empty torsion coordinate in '" + text + "'");
    Rational r;
    if (r.set_str(item.substr(b, e - b + 1), 10) != 0 || r.get_den() == 0)
      throw ParseError("bad torsion coordinate '" + item + "'");
    r.canonicalize();
    q.push_back(r);
  }
  if (q.empty()) throw ParseError("empty torsion point");
  return TorsionPoint(q);
}

long TorsionPoint::character_exponent(const Weight& lambda) const {
  if (lambda.size() != num_.size()) throw PreconditionError("rank mismatch in character evaluation");
  long s = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) s = mod(s + lambda[i] * num_[i], order_);
  return s;
}

Cyclotomic TorsionPoint::character_value(const Weight& lambda) const {
  if (order_ == 1) return Cyclotomic(1);
  return Cyclotomic::root_of_unity(static_cast<unsigned>(order_), character_exponent(lambda));
}

TorsionPoint TorsionPoint::transform(const IntMatrix& inverse_matrix) const {
  const std::size_t r = num_.size();
  std::vector<long> out(r, 0);
  // q'_j = sum_i Minv(i, j) q_i
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) out[j] += inverse_matrix(i, j) * num_[i];
  return TorsionPoint(out, order_);
}

TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b) {
  if (a.rank() != b.rank()) throw PreconditionError("rank mismatch in torsion sum");
  long n = std::lcm(a.order_, b.order_);
  std::vector<long> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    out[i] = a.num_[i] * (n / a.order_) + b.num_[i] * (n / b.order_);
  return TorsionPoint(out, n);
}

std::string TorsionPoint::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) out << ", ";
    out << coordinate(i).get_str();
  }
  out << ')';
  return out.str();
}

std::vector<TorsionPoint> torsion_grid(std::size_t rank, long n) {
  std::vector<TorsionPoint> out;
  std::vector<long> idx(rank, 0);
  while (true) {
    out.emplace_back(idx, n);
    std::size_t i = 0;
    while (i < rank && ++idx[i] == n) idx[i++] = 0;
    if (i == rank) break;
  }
  return out;
}

}  // namespace eqk
