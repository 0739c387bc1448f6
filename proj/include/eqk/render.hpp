#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eqk/cyclotomic.hpp"
#include "eqk/weight.hpp"

namespace eqk {

/// Renders "c1*m1 + c2*m2 - ..." in the given order. Monomials use `var` for
/// rank 1 and var1..varr otherwise; multi-term coefficients are parenthesised.
std::string render_terms(const std::vector<std::pair<Weight, Cyclotomic>>& terms,
                         const std::string& rank_one_name, char var);

}  // namespace eqk
