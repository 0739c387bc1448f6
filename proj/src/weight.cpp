#include "eqk/weight.hpp"

#include <sstream>

namespace eqk {

std::string Weight::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < n_; ++i) out << (i ? "," : "") << c_[i];
  out << ')';
  return out.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Weight IntMatrix::apply(const Weight& v) const {
  Weight out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = static_cast<int>(s);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      long v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
    }
  return c;
}

// Bareiss fraction-free elimination; exact for integer matrices.
long IntMatrix::determinant() const {
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<long> m = a_;
  auto at = [&](std::size_t i, std::size_t j) -> long& { return m[i * n + j]; };
  long prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

}  // namespace eqk
