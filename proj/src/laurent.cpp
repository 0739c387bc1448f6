#include "eqk/laurent.hpp"

#include <cctype>
#include <sstream>

#include "eqk/errors.hpp"
#include "eqk/render.hpp"

namespace eqk {

LaurentPoly::LaurentPoly(std::size_t rank, const Cyclotomic& c) : rank_(rank) {
  add_term(Weight(rank), c);
}

LaurentPoly LaurentPoly::monomial(const Weight& lambda, const Cyclotomic& c) {
  LaurentPoly p(lambda.size());
  p.add_term(lambda, c);
  return p;
}

Cyclotomic LaurentPoly::coefficient(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void LaurentPoly::add_term(const Weight& lambda, const Cyclotomic& c) {
  if (lambda.size() != rank_) throw PreconditionError("exponent rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
  if (o.rank_ != rank_) throw PreconditionError("Laurent polynomial rank mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b);
  LaurentPoly r(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(rank_, Cyclotomic(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string LaurentPoly::str() const {
  std::vector<std::pair<Weight, Cyclotomic>> ts(terms_.rbegin(), terms_.rend());
  return render_terms(ts, rank_ == 1 ? std::string("x") : std::string(), 'x');
}

namespace {

Weight min_exponent(const LaurentPoly& a) {
  Weight m = a.terms().begin()->first;
  for (const auto& [e, c] : a.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

LaurentPoly shift(const LaurentPoly& a, const Weight& by) {
  LaurentPoly r(a.rank());
  for (const auto& [e, c] : a.terms()) r.add_term(e + by, c);
  return r;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) throw PreconditionError("Laurent polynomial rank mismatch");
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.rank());
  const Weight min_a = min_exponent(a);
  const Weight min_b = min_exponent(b);
  // Both shifted into the polynomial ring; lexicographic long division there.
  LaurentPoly p = shift(a, -min_a);
  const LaurentPoly divisor = shift(b, -min_b);
  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
  const Cyclotomic lead_inv = lead_c.inverse();
  LaurentPoly quotient(a.rank());
  LaurentPoly remainder(a.rank());
  while (!p.is_zero()) {
    const auto [e, c] = *p.terms().rbegin();
    Weight d = e - lead_e;
    bool divisible = std::all_of(d.begin(), d.end(), [](int v) { return v >= 0; });
    if (!divisible) {
      remainder.add_term(e, c);
      p.add_term(e, -c);
      continue;
    }
    const Cyclotomic f = c * lead_inv;
    quotient.add_term(d, f);
    for (const auto& [eb, cb] : divisor.terms()) p.add_term(eb + d, -(f * cb));
  }
  if (!remainder.is_zero())
    throw DivisibilityError("inexact Laurent division", shift(remainder, min_a));
  return shift(quotient, min_a - min_b);
}

LaurentPoly act(const IntMatrix& m, const LaurentPoly& a) {
  if (m.cols() != a.rank()) throw PreconditionError("matrix size does not match rank");
  LaurentPoly r(a.rank());
  for (const auto& [e, c] : a.terms()) r.add_term(m.apply(e), c);
  return r;
}

LaurentPoly dual(const LaurentPoly& a) {
  LaurentPoly r(a.rank());
  for (const auto& [e, c] : a.terms()) r.add_term(-e, c);
  return r;
}

Cyclotomic constant_term(const LaurentPoly& a) { return a.coefficient(Weight(a.rank())); }

Cyclotomic constant_term_of_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) throw PreconditionError("Laurent polynomial rank mismatch");
  Cyclotomic s;
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& large = a.size() <= b.size() ? b : a;
  for (const auto& [e, c] : small.terms()) {
    auto it = large.terms().find(-e);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

Cyclotomic evaluate_at_torsion(const LaurentPoly& a, const TorsionPoint& q) {
  if (q.rank() != a.rank()) throw PreconditionError("torsion point rank mismatch");
  Cyclotomic s;
  if (q.is_identity()) {
    for (const auto& [e, c] : a.terms()) s += c;
    return s;
  }
  for (const auto& [e, c] : a.terms()) s += c * q.character_value(e);
  return s;
}

RationalFn::RationalFn(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  num = num * o.den + o.num * den;
  den = den * o.den;
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num = num * o.num;
  den = den * o.den;
  return *this;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, std::size_t rank, char var) : s_(s), rank_(rank), var_(var) {}

  LaurentPoly run() {
    LaurentPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected integer");
    if (pos_ - b > 12) fail("integer literal too long");
    return std::stol(s_.substr(b, pos_ - b));
  }

  LaurentPoly expr() {
    LaurentPoly v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  LaurentPoly term() {
    LaurentPoly v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        LaurentPoly d = unary();
        v = v * invert_monomial(d);
      } else {
        return v;
      }
    }
  }

  LaurentPoly invert_monomial(const LaurentPoly& d) {
    if (d.size() != 1) fail("can only divide by a single term");
    const auto& [e, c] = *d.terms().begin();
    return LaurentPoly::monomial(-e, c.inverse());
  }

  LaurentPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    long e = integer();
    if (neg) {
      base = invert_monomial(base);
    }
    return base.pow(static_cast<unsigned>(e));
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly(rank_, Cyclotomic(integer()));
    if (c == 'z') {
      ++pos_;
      long n = integer();
      if (n <= 0) fail("root of unity needs a positive conductor");
      return LaurentPoly(rank_, Cyclotomic::root_of_unity(static_cast<unsigned>(n), 1));
    }
    if (c == var_) {
      ++pos_;
      std::size_t index = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        index = static_cast<std::size_t>(integer());
      } else if (rank_ != 1) {
        fail("variable index required for rank " + std::to_string(rank_));
      }
      if (index < 1 || index > rank_) fail("variable index out of range");
      Weight e(rank_);
      e[index - 1] = 1;
      return LaurentPoly::monomial(e);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t rank_;
  char var_;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, std::size_t rank, char var) {
  return ExprParser(text, rank, var).run();
}

Cyclotomic parse_cyclotomic(const std::string& text) {
  LaurentPoly p = ExprParser(text, 0, 'x').run();
  return constant_term(p);
}

}  // namespace eqk
