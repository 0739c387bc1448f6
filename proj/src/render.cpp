#include "eqk/render.hpp"

#include <sstream>

namespace eqk {

std::string monomial_str(const Weight& e, char var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << var;
    if (e.size() > 1) out << (i + 1);
    if (e[i] != 1) out << '^' << e[i];
  }
  return first ? std::string("1") : out.str();
}

namespace {

// Splits a coefficient into (negative, magnitude text). Single-term values carry
// their sign outside; multi-term values are parenthesised and never negated.
std::pair<bool, std::string> coefficient_text(const Cyclotomic& c, bool standalone) {
  const Cyclotomic v = c.normalized();
  std::size_t nonzero = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < v.coeffs().size(); ++i)
    if (v.coeffs()[i] != 0) {
      ++nonzero;
      at = i;
    }
  if (nonzero == 1) {
    bool neg = v.coeffs()[at] < 0;
    std::string text = (neg ? -v : v).str();
    if (!standalone && text == "1") text.clear();
    return {neg, text};
  }
  return {false, "(" + v.str() + ")"};
}

}  // namespace

std::string render_terms(const std::vector<std::pair<Weight, Cyclotomic>>& terms,
                         const std::string& rank_one_name, char var) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool constant = e.is_zero();
    auto [neg, coef] = coefficient_text(c, constant);
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    if (constant) {
      out << coef;
      continue;
    }
    std::string mono = monomial_str(e, var);
    if (e.size() == 1 && !rank_one_name.empty()) {
      mono = rank_one_name;
      if (e[0] != 1) mono += "^" + std::to_string(e[0]);
    }
    if (!coef.empty()) out << coef << '*';
    out << mono;
  }
  return out.str();
}

}  // namespace eqk
