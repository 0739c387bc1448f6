#include <gtest/gtest.h>

#include "eqk/cyclotomic.hpp"
#include "eqk/errors.hpp"
#include "eqk/laurent.hpp"
#include "eqk/root_datum.hpp"
#include "eqk/torsion.hpp"
#include "generators.hpp"

using namespace eqk;
using eqk::testing::Gen;

namespace {

LaurentPoly P(const std::string& s, std::size_t rank = 1) { return parse_laurent(s, rank); }
Cyclotomic z(unsigned n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

// Convolution written out directly over the term maps.
LaurentPoly convolve(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Weight, Cyclotomic> acc;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) acc[ea + eb] += ca * cb;
  LaurentPoly out(a.rank());
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

}  // namespace

TEST(Cyclotomic, DefiningRelations) {
  EXPECT_EQ(z(4) * z(4), Cyclotomic(-1));
  EXPECT_TRUE((Cyclotomic(1) + z(3) + z(3, 2)).is_zero());
  EXPECT_EQ(z(8).inverse(), z(8, 7));
  EXPECT_EQ(z(5).conjugate(), z(5, 4));
  EXPECT_THROW(Cyclotomic(0).inverse(), ArithmeticError);
}

TEST(Cyclotomic, MixedConductorsAgree) {
  EXPECT_EQ(z(4) * z(3), z(12, 7));
  EXPECT_EQ(z(6, 3), Cyclotomic(-1));
  EXPECT_EQ((z(12, 3)).normalized().conductor(), 4u);
  EXPECT_EQ(z(2), Cyclotomic(-1));
  EXPECT_EQ((z(8) + z(8, 7)) * (z(8) + z(8, 7)), Cyclotomic(2));
}

TEST(Cyclotomic, Rendering) {
  EXPECT_EQ(z(4).str(), "z4");
  EXPECT_EQ((Cyclotomic(ratio(1, 3)) * z(4)).str(), "1/3*z4");
  EXPECT_EQ(Cyclotomic(ratio(-7, 2)).str(), "-7/2");
  EXPECT_EQ(parse_cyclotomic((Cyclotomic(1) + z(3)).str()), Cyclotomic(1) + z(3));
}

TEST(Cyclotomic, FieldAxiomsOnRandomSamples) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    Cyclotomic a = g.cyclotomic(), b = g.cyclotomic(), c = g.cyclotomic();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ(parse_cyclotomic(a.str()), a);
  }
}

TEST(Laurent, ExactDivision) {
  EXPECT_EQ(exact_div(P("x^2 - x^-2"), P("x - x^-1")), P("x + x^-1"));
  EXPECT_EQ(P("x + x^-1") * P("x + x^-1"), P("x^2 + 2 + x^-2"));
  try {
    exact_div(P("x + 1"), P("x - 1"));
    FAIL() << "expected a divisibility error";
  } catch (const DivisibilityError& e) {
    EXPECT_FALSE(e.remainder().is_zero());
  }
}

TEST(Laurent, ProductMatchesConvolution) {
  Gen g(12);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = static_cast<std::size_t>(g.uniform(1, 3));
    LaurentPoly a = g.laurent(r), b = g.laurent(r);
    EXPECT_EQ(a * b, convolve(a, b));
  }
}

TEST(Laurent, ExactDivisionInvertsMultiplication) {
  Gen g(13);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = static_cast<std::size_t>(g.uniform(1, 3));
    LaurentPoly a = g.laurent(r), b = g.nonzero_laurent(r);
    EXPECT_EQ(exact_div(a * b, b), a) << a.str() << " / " << b.str();
  }
}

TEST(Laurent, WeylActionIsRingHomAndGroupAction) {
  const RootDatum d = datum_from_preset("A2");
  const WeylGroup w = weyl_elements(d);
  EXPECT_EQ(act(w[1].matrix, act(w[1].matrix, P("x1^2*x2 + 3", 2))), P("x1^2*x2 + 3", 2));
  Gen g(14);
  for (int i = 0; i < 60; ++i) {
    const auto& u = w[static_cast<std::size_t>(g.uniform(0, 5))];
    const auto& v = w[static_cast<std::size_t>(g.uniform(0, 5))];
    LaurentPoly a = g.laurent(2), b = g.laurent(2);
    EXPECT_EQ(act(u.matrix, a * b), act(u.matrix, a) * act(u.matrix, b));
    EXPECT_EQ(act((u * v).matrix, a), act(u.matrix, act(v.matrix, a)));
    EXPECT_EQ(constant_term(act(u.matrix, a)), constant_term(a));
  }
}

TEST(Laurent, ReflectionAndDual) {
  const RootDatum sl2 = datum_from_preset("SL2");
  const WeylElement s = sl2.reflection(0);
  EXPECT_EQ(act(s.matrix, P("x")), P("x^-1"));
  EXPECT_EQ(act(s.matrix, P("x^2 + 3")), P("x^-2 + 3"));
  EXPECT_EQ(dual(P("2*x - x^3")), P("2*x^-1 - x^-3"));
  EXPECT_EQ(dual(P("1")), P("1"));
  Gen g(15);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly a = g.laurent(2);
    EXPECT_EQ(dual(dual(a)), a);
  }
}

TEST(Laurent, ConstantTerm) {
  EXPECT_EQ(constant_term(P("x + x^-1").pow(2)), Cyclotomic(2));
  EXPECT_EQ(constant_term(P("x^5")), Cyclotomic(0));
  EXPECT_EQ(constant_term(P("7")), Cyclotomic(7));
  Gen g(16);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly a = g.laurent(2), b = g.laurent(2);
    EXPECT_EQ(constant_term_of_product(a, b), constant_term(a * b));
  }
}

TEST(Laurent, EvaluateAtTorsion) {
  EXPECT_EQ(evaluate_at_torsion(P("x"), TorsionPoint::parse("1/4")), z(4));
  EXPECT_TRUE(evaluate_at_torsion(P("x + x^-1"), TorsionPoint::parse("1/4")).is_zero());
  EXPECT_EQ(evaluate_at_torsion(P("3*x^2 - 5*x + z3"), TorsionPoint(1)), Cyclotomic(-2) + z(3));
}

TEST(Laurent, EvaluationIsEquivariantRingHom) {
  const RootDatum d = datum_from_preset("B2");
  const WeylGroup w = weyl_elements(d);
  Gen g(17);
  for (int i = 0; i < 60; ++i) {
    LaurentPoly a = g.laurent(2), b = g.laurent(2);
    TorsionPoint q = g.torsion(2);
    const auto& u = w[static_cast<std::size_t>(g.uniform(0, 7))];
    EXPECT_EQ(evaluate_at_torsion(a * b, q), evaluate_at_torsion(a, q) * evaluate_at_torsion(b, q));
    EXPECT_EQ(evaluate_at_torsion(a + b, q), evaluate_at_torsion(a, q) + evaluate_at_torsion(b, q));
    EXPECT_EQ(evaluate_at_torsion(act(u.matrix, a), q), evaluate_at_torsion(a, u.inv().apply(q)));
  }
}

TEST(Laurent, TextRoundTrip) {
  Gen g(18);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = static_cast<std::size_t>(g.uniform(1, 3));
    LaurentPoly a = g.laurent(r);
    EXPECT_EQ(parse_laurent(a.str(), r), a) << a.str();
  }
  EXPECT_EQ(P("x^2 + 2 + x^-2").str(), "x^2 + 2 + x^-2");
  EXPECT_EQ(P("x1*x2^-1 - x2", 2).str(), "x1*x2^-1 - x2");
  EXPECT_THROW(parse_laurent("x1 +", 2), ParseError);
}

TEST(RationalFn, SumsWithoutReduction) {
  RationalFn f(P("x"), P("1 - x^-2"));
  f += RationalFn(P("x^-1"), P("1 - x^2"));
  EXPECT_EQ(f.to_polynomial(), P("x + x^-1"));
}
