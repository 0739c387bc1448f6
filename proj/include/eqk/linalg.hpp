#pragma once

#include <optional>
#include <vector>

#include "eqk/cyclotomic.hpp"
#include "eqk/weight.hpp"

namespace eqk {

/// Rows of a dense matrix over the cyclotomic field.
using CycMatrix = std::vector<std::vector<Cyclotomic>>;

/// Rank by fraction-free (Bareiss) elimination with first-nonzero pivoting in
/// row order; deterministic for a given input.
std::size_t matrix_rank(CycMatrix rows);

/// Solution of sum_j x_j * cols[j] = rhs over Q, or nullopt if inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> solve_rational(const std::vector<std::vector<Rational>>& cols,
                                                    const std::vector<Rational>& rhs);

/// Invariant factors of an integer matrix (nonzero diagonal of its Smith form).
std::vector<long> smith_invariants(const IntMatrix& a);

/// Z-basis of { v in Z^n : A v = 0 } for an m x n matrix A.
std::vector<Weight> integer_kernel(const IntMatrix& a);

/// Some v in Z^n with A v = b, or nullopt if no integral solution exists.
std::optional<Weight> integer_solve(const IntMatrix& a, const std::vector<long>& b);

}  // namespace eqk
