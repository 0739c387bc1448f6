#include <gtest/gtest.h>

#include "eqk/errors.hpp"
#include "eqk/induction.hpp"
#include "generators.hpp"

using namespace eqk;
using eqk::testing::Gen;

namespace {

LaurentPoly P(const std::string& s, std::size_t rank = 1) { return parse_laurent(s, rank); }

// Orbit sum written without coset representatives: sum over all of W divided by |W1|.
LaurentPoly orbit_average_induction(const SubDatum& sub, const LaurentPoly& a) {
  LaurentPoly s(a.rank());
  for (const auto& w : weyl_elements(sub.parent)) s += act(w.matrix, a);
  return s * Cyclotomic(ratio(1, static_cast<long>(sub.weyl.size())));
}

}  // namespace

TEST(Restrict, Examples) {
  RootDatum sl2 = datum_from_preset("SL2");
  auto g = std::make_shared<const SubDatum>(full_subdatum(sl2));
  auto t = std::make_shared<const SubDatum>(torus_subdatum(sl2));
  EXPECT_EQ(restrict(VirtualCharacter(P("x + x^-1"), g), t).poly, P("x + x^-1"));
  EXPECT_EQ(restrict(VirtualCharacter(P("1"), g), t).poly, P("1"));
  EXPECT_EQ(restrict(VirtualCharacter(weyl_character(sl2, Weight{2}), g), t).poly, P("x^2 + 1 + x^-2"));
  EXPECT_THROW(restrict(VirtualCharacter(P("x"), t), g), StructuralError);
}

TEST(Induce, Examples) {
  RootDatum sl2 = datum_from_preset("SL2");
  SubDatum t = torus_subdatum(sl2);
  EXPECT_EQ(induce(t, P("1")), P("2"));
  EXPECT_EQ(induce(t, P("x")), P("x + x^-1"));
  EXPECT_EQ(induce(t, P("x^2")), P("x^2 + x^-2"));
  RootDatum a2 = datum_from_preset("A2");
  EXPECT_THROW(induce(levi_subdatum(a2, {0}), P("x1", 2)), PreconditionError);
}

TEST(Induce, MatchesOrbitAverage) {
  Gen gen(41);
  for (const char* label : {"SL2", "A2", "B2", "G2", "GL2", "GL3"}) {
    RootDatum d = datum_from_preset(label);
    std::vector<SubDatum> subs = {torus_subdatum(d), levi_subdatum(d, {0}), full_subdatum(d)};
    for (const auto& sub : subs)
      for (int i = 0; i < 6; ++i) {
        LaurentPoly a = gen.invariant(sub.weyl, d.rank());
        EXPECT_EQ(induce(sub, a), orbit_average_induction(sub, a)) << label << " " << a.str();
      }
  }
}

TEST(Induce, RestrictionOfInducedInvariant) {
  Gen gen(42);
  for (const char* label : {"SL2", "A2", "B2"}) {
    RootDatum d = datum_from_preset(label);
    WeylGroup w = weyl_elements(d);
    SubDatum t = torus_subdatum(d);
    for (int i = 0; i < 5; ++i) {
      LaurentPoly a = gen.invariant(w, d.rank());
      EXPECT_EQ(induce(t, a), a * Cyclotomic(static_cast<long>(w.size())));
    }
  }
}

TEST(Pushforward, Examples) {
  RootDatum sl2 = datum_from_preset("SL2");
  SubDatum t = torus_subdatum(sl2);
  EXPECT_EQ(pushforward_fixed_points(t, P("1")), P("1"));
  EXPECT_EQ(pushforward_fixed_points(t, P("x")), P("x + x^-1"));
  EXPECT_TRUE(pushforward_fixed_points(t, P("x^-1")).is_zero());
}

TEST(Pushforward, BorelLineBundlesGiveWeylCharacters) {
  for (const char* label : {"SL2", "A2", "B2", "G2", "GL2", "GL3"}) {
    RootDatum d = datum_from_preset(label);
    SubDatum t = torus_subdatum(d);
    for (const auto& lam : dominant_weights(d, 3)) {
      EXPECT_EQ(pushforward_fixed_points(t, LaurentPoly::monomial(lam)), weyl_character(d, lam))
          << label << " " << lam.str();
    }
    EXPECT_EQ(pushforward_fixed_points(t, LaurentPoly(d.rank(), Cyclotomic(1))),
              LaurentPoly(d.rank(), Cyclotomic(1)));
  }
}

TEST(AlternateInduction, Examples) {
  RootDatum sl2 = datum_from_preset("SL2");
  SubDatum t = torus_subdatum(sl2);
  std::vector<LaurentPoly> samples;
  for (int m = -3; m <= 3; ++m) samples.push_back(LaurentPoly::monomial(Weight{m}));
  auto rep = verify_alternate_induction(t, samples);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.cases.size(), 7u);
  EXPECT_EQ(rep.cases[3].lhs, "2");
  EXPECT_EQ(rep.cases[3].rhs, "2");

  RootDatum a2 = datum_from_preset("A2");
  SubDatum levi = levi_subdatum(a2, {0});
  Gen gen(43);
  std::vector<LaurentPoly> sym;
  for (int i = 0; i < 8; ++i) sym.push_back(gen.invariant(levi.weyl, 2, 2, 3));
  EXPECT_TRUE(verify_alternate_induction(levi, sym).passed());
}

TEST(Reciprocity, Examples) {
  RootDatum sl2 = datum_from_preset("SL2");
  SubDatum g = full_subdatum(sl2);
  SubDatum t = torus_subdatum(sl2);
  CaseRecord c = check_reciprocity(g, t, P("x"), P("x + x^-1"));
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.lhs, "1");
  CaseRecord one = check_reciprocity(g, t, P("1"), P("1"));
  EXPECT_TRUE(one.pass);
  EXPECT_EQ(one.lhs, "2");
  CaseRecord same = check_reciprocity(g, g, P("x + x^-1"), P("x + x^-1"));
  EXPECT_TRUE(same.pass);
  EXPECT_EQ(same.lhs, "1");
}

TEST(Reciprocity, RandomSamples) {
  Gen gen(44);
  for (const char* label : {"SL2", "A2", "B2"}) {
    RootDatum d = datum_from_preset(label);
    WeylGroup w = weyl_elements(d);
    for (const auto& sub : {torus_subdatum(d), levi_subdatum(d, {0}), levi_subdatum(d, {d.semisimple_rank() - 1})}) {
      std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs;
      for (int i = 0; i < 6; ++i)
        pairs.emplace_back(gen.invariant(sub.weyl, d.rank()), gen.invariant(w, d.rank()));
      auto rep = check_reciprocity(sub, pairs);
      EXPECT_TRUE(rep.passed()) << label;
    }
  }
}

TEST(InductionAxioms, Chains) {
  Gen gen(45);
  for (const char* label : {"SL2", "A2", "B2", "G2"}) {
    RootDatum d = datum_from_preset(label);
    InductionChain chain{full_subdatum(d), levi_subdatum(d, {0}), torus_subdatum(d)};
    std::vector<LaurentPoly> trans;
    std::vector<std::pair<LaurentPoly, LaurentPoly>> proj;
    for (int i = 0; i < 6; ++i) {
      trans.push_back(gen.laurent(d.rank(), 3, 3, true));
      proj.emplace_back(gen.invariant(chain.h.weyl, d.rank()), gen.invariant(chain.g.weyl, d.rank()));
    }
    auto rep = verify_induction_axioms(chain, trans, proj);
    EXPECT_TRUE(rep.passed()) << label;
    EXPECT_EQ(rep.cases.size(), 12u);
  }
  RootDatum sl2 = datum_from_preset("SL2");
  InductionChain degenerate{full_subdatum(sl2), torus_subdatum(sl2), torus_subdatum(sl2)};
  auto rep = verify_induction_axioms(degenerate, {P("x^3")}, {{P("x"), P("x + x^-1")}});
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.cases[1].lhs, "x^2 + 2 + x^-2");
}
