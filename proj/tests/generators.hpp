#pragma once

#include <random>
#include <vector>

#include "eqk/cyclotomic.hpp"
#include "eqk/laurent.hpp"
#include "eqk/rep_theory.hpp"
#include "eqk/torsion.hpp"

namespace eqk::testing {

// Small seeded generators for property tests. Every test constructs its own
// Gen with a fixed seed so failures reproduce.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 5) {
    int den = uniform(1, 4);
    return ratio(uniform(-span, span), den);
  }

  Cyclotomic cyclotomic(bool allow_zero = true) {
    static const unsigned conductors[] = {1, 3, 4, 5, 8, 12};
    for (;;) {
      unsigned n = conductors[uniform(0, 5)];
      Cyclotomic c;
      int terms = uniform(1, 3);
      for (int i = 0; i < terms; ++i)
        c += Cyclotomic::root_of_unity(n, uniform(0, static_cast<int>(n) - 1)) * Cyclotomic(rational());
      if (allow_zero || !c.is_zero()) return c;
    }
  }

  Weight weight(std::size_t rank, int span = 3) {
    Weight w(rank);
    for (std::size_t i = 0; i < rank; ++i) w[i] = uniform(-span, span);
    return w;
  }

  LaurentPoly laurent(std::size_t rank, int max_terms = 4, int span = 3, bool cyclotomic_coeffs = true) {
    LaurentPoly p(rank);
    int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i)
      p.add_term(weight(rank, span), cyclotomic_coeffs ? cyclotomic() : Cyclotomic(rational()));
    return p;
  }

  LaurentPoly nonzero_laurent(std::size_t rank, int max_terms = 4, int span = 3) {
    for (;;) {
      LaurentPoly p = laurent(rank, max_terms, span);
      if (!p.is_zero()) return p;
    }
  }

  TorsionPoint torsion(std::size_t rank, long max_order = 6) {
    long n = uniform(1, static_cast<int>(max_order));
    std::vector<long> num(rank);
    for (auto& v : num) v = uniform(0, static_cast<int>(n) - 1);
    return TorsionPoint(num, n);
  }

  // W-symmetrization of a random polynomial: invariant by construction.
  LaurentPoly invariant(const WeylGroup& w, std::size_t rank, int max_terms = 2, int span = 2) {
    LaurentPoly seed = laurent(rank, max_terms, span, false);
    LaurentPoly out(rank);
    for (const auto& g : w) out += act(g.matrix, seed);
    return out;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace eqk::testing
