#include "eqk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "eqk/errors.hpp"

namespace eqk {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials (constant term first), divisor monic.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<long> compute_cyclotomic(unsigned n) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

// Reduce a rational polynomial modulo Phi_n in place; result has length phi(n).
std::vector<Rational> reduce(std::vector<Rational> p, unsigned n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j < d; ++j)
      if (phi[j] != 0) p[i - d + j] -= c * phi[j];
    p[i] = 0;
  }
  p.resize(d);
  return p;
}

// Solve the square-or-tall consistent system A x = b over Q (A given column-wise).
// Returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> cols,
                                           std::vector<Rational> rhs) {
  const std::size_t m = rhs.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
    a[i][k] = rhs[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j <= k; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][k];
  return x;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<long> p = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<Rational> coeffs) : n_(conductor) {
  if (conductor == 0) throw PreconditionError("conductor must be positive");
  coeffs_ = reduce(std::move(coeffs), conductor);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, long>, Cyclotomic> cache;
  const std::pair<unsigned, long> key(n, n == 0 ? k : mod(k, n));
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<Rational> c(n);
  c[key.second] = 1;
  Cyclotomic z(n, std::move(c));
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(z)).first->second;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  Cyclotomic v = normalized();
  if (v.n_ != 1) return std::nullopt;
  return v.coeffs_[0];
}

Cyclotomic Cyclotomic::embed(unsigned m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw PreconditionError("embedding target conductor must be a multiple");
  const unsigned step = m / n_;
  std::vector<Rational> c(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1) return *this;
  if (std::gcd(mod(k, n_), static_cast<long>(n_)) != 1)
    throw PreconditionError("Galois exponent must be coprime to the conductor");
  std::vector<Rational> c(n_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[mod(static_cast<long>(i) * k, n_)] += coeffs_[i];
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::normalized() const {
  if (n_ == 1) return *this;
  for (unsigned d = 1; d < n_; ++d) {
    if (n_ % d != 0) continue;
    bool fixed = true;
    for (unsigned k = 1 + d; k < n_ && fixed; k += d)
      if (std::gcd(k, n_) == 1 && !(galois(k) == *this)) fixed = false;
    if (!fixed) continue;
    const unsigned pd = euler_phi(d);
    std::vector<std::vector<Rational>> cols;
    for (unsigned j = 0; j < pd; ++j) cols.push_back(root_of_unity(d, j).embed(n_).coeffs_);
    auto x = solve(std::move(cols), coeffs_);
    if (!x) throw StructuralError("Galois-fixed value has no subfield representation");
    return Cyclotomic(d, std::move(*x));
  }
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1 / coeffs_[0]));
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> cols;
  for (std::size_t j = 0; j < d; ++j) cols.push_back((*this * root_of_unity(n_, j)).coeffs_);
  std::vector<Rational> e(d);
  e[0] = 1;
  auto x = solve(std::move(cols), std::move(e));
  if (!x) throw ArithmeticError("singular multiplication map");
  Cyclotomic r;
  r.n_ = n_;
  r.coeffs_ = std::move(*x);
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ == n_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  if (o.n_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  unsigned m = std::lcm(n_, o.n_);
  *this = embed(m);
  Cyclotomic b = o.embed(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const unsigned m = std::lcm(n_, o.n_);
  const Cyclotomic a = m == n_ ? Cyclotomic() : embed(m);
  const Cyclotomic b = m == o.n_ ? Cyclotomic() : o.embed(m);
  const std::vector<Rational>& x = m == n_ ? coeffs_ : a.coeffs_;
  const std::vector<Rational>& y = m == o.n_ ? o.coeffs_ : b.coeffs_;
  std::vector<Rational> p(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) p[i + j] += x[i] * y[j];
  }
  n_ = m;
  coeffs_ = reduce(std::move(p), m);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.coeffs_ == b.coeffs_;
  unsigned m = std::lcm(a.n_, b.n_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string Cyclotomic::str() const {
  const Cyclotomic v = normalized();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.coeffs_.size(); ++i) {
    Rational c = v.coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << '*';
    out << 'z' << v.n_;
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace eqk
