#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "eqk/errors.hpp"

namespace eqk {

inline constexpr std::size_t kMaxRank = 8;

// Stream output for every value type with a canonical str().
template <class T>
  requires requires(const T& t) {
    { t.str() } -> std::convertible_to<std::string>;
  }
std::ostream& operator<<(std::ostream& out, const T& v) {
  return out << v.str();
}

/// Integer vector of length <= kMaxRank. Used for characters, cocharacters and
/// exponent vectors alike; stored inline so it is cheap as a map key.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : n_(check(n)) {}
  Weight(std::initializer_list<int> xs) : n_(check(xs.size())) {
    std::copy(xs.begin(), xs.end(), c_.begin());
  }
  explicit Weight(const std::vector<int>& xs) : n_(check(xs.size())) {
    std::copy(xs.begin(), xs.end(), c_.begin());
  }

  std::size_t size() const { return n_; }
  int& operator[](std::size_t i) { return c_[i]; }
  int operator[](std::size_t i) const { return c_[i]; }
  const int* begin() const { return c_.data(); }
  const int* end() const { return c_.data() + n_; }
  int* begin() { return c_.data(); }
  int* end() { return c_.data() + n_; }

  bool is_zero() const {
    return std::all_of(begin(), end(), [](int v) { return v == 0; });
  }
  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.c_ <=> b.c_;
  }

  Weight operator-() const {
    Weight r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.c_[i] = -c_[i];
    return r;
  }
  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(int s) {
    for (std::size_t i = 0; i < n_; ++i) c_[i] *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int s, Weight a) { return a *= s; }

  /// Sum of absolute values of the coordinates.
  int height() const {
    int h = 0;
    for (int v : *this) h += v < 0 ? -v : v;
    return h;
  }

  std::string str() const;

 private:
  static std::uint8_t check(std::size_t n) {
    if (n > kMaxRank) throw PreconditionError("rank exceeds supported maximum of 8");
    return static_cast<std::uint8_t>(n);
  }
  std::array<int, kMaxRank> c_{};
  std::uint8_t n_ = 0;
};

/// Standard pairing on Z^r.
inline long pairing(const Weight& a, const Weight& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

/// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  Weight apply(const Weight& v) const;
  long determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) { return a.a_ <=> b.a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long> a_;
};

}  // namespace eqk
