#include "eqk/linalg.hpp"

#include <cstdlib>

namespace eqk {

std::size_t matrix_rank(CycMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  Cyclotomic prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Cyclotomic pivot = m[rank][col];
    const Cyclotomic prev_inv = prev.inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Cyclotomic lead = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        if (lead.is_zero()) {
          if (!m[i][j].is_zero()) m[i][j] = m[i][j] * pivot * prev_inv;
        } else {
          m[i][j] = (m[i][j] * pivot - lead * m[rank][j]) * prev_inv;
        }
      }
      m[i][col] = Cyclotomic();
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_rational(const std::vector<std::vector<Rational>>& cols,
                                                    const std::vector<Rational>& rhs) {
  const std::size_t m = rhs.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
    a[i][k] = rhs[i];
  }
  std::vector<std::size_t> pivots;
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
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][k];
  return x;
}

std::vector<long> smith_invariants(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<long> out;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (bi == m || std::labs(a(i, j)) < std::labs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) return out;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(t, j), a(bi, j));
      for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, bj));
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        long q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        long q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < m; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition: pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t jj = t; jj < n; ++jj) a(t, jj) += a(i, jj);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(std::labs(a(t, t)));
  }
  return out;
}

namespace {

// Column-reduces A in place to lower echelon form, accumulating the unimodular
// column transform in U. Returns, per row, the pivot column (or -1).
std::vector<long> column_echelon(IntMatrix& a, IntMatrix& u) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  u = IntMatrix::identity(n);
  std::vector<long> pivot_of_row(m, -1);
  std::size_t p = 0;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < m; ++i) std::swap(a(i, x), a(i, y));
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, x), u(i, y));
  };
  auto sub_col = [&](std::size_t dst, std::size_t src, long q) {
    for (std::size_t i = 0; i < m; ++i) a(i, dst) -= q * a(i, src);
    for (std::size_t i = 0; i < n; ++i) u(i, dst) -= q * u(i, src);
  };
  for (std::size_t row = 0; row < m && p < n; ++row) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = p; j < n; ++j)
        if (a(row, j) != 0 && (best == n || std::labs(a(row, j)) < std::labs(a(row, best)))) best = j;
      if (best == n) break;
      swap_cols(p, best);
      bool done = true;
      for (std::size_t j = p + 1; j < n; ++j) {
        if (a(row, j) == 0) continue;
        sub_col(j, p, a(row, j) / a(row, p));
        if (a(row, j) != 0) done = false;
      }
      if (done) {
        pivot_of_row[row] = static_cast<long>(p);
        ++p;
        break;
      }
    }
  }
  return pivot_of_row;
}

}  // namespace

std::vector<Weight> integer_kernel(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u;
  auto pivots = column_echelon(a, u);
  std::size_t used = 0;
  for (long p : pivots)
    if (p >= 0) ++used;
  std::vector<Weight> basis;
  for (std::size_t j = used; j < a.cols(); ++j) {
    Weight v(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) v[i] = static_cast<int>(u(i, j));
    basis.push_back(v);
  }
  return basis;
}

std::optional<Weight> integer_solve(const IntMatrix& input, const std::vector<long>& b) {
  IntMatrix a = input;
  IntMatrix u;
  auto pivots = column_echelon(a, u);
  const std::size_t n = a.cols();
  std::vector<long> y(n, 0);
  for (std::size_t row = 0; row < a.rows(); ++row) {
    long acc = b[row];
    long pc = pivots[row];
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<long>(j) != pc) acc -= a(row, j) * y[j];
    if (pc < 0) {
      if (acc != 0) return std::nullopt;
      continue;
    }
    if (acc % a(row, pc) != 0) return std::nullopt;
    y[pc] = acc / a(row, pc);
  }
  Weight x(n);
  for (std::size_t i = 0; i < n; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < n; ++j) s += u(i, j) * y[j];
    x[i] = static_cast<int>(s);
  }
  return x;
}

}  // namespace eqk
