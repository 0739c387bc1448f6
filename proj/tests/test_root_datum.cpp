#include <gtest/gtest.h>

#include <set>

#include "eqk/errors.hpp"
#include "eqk/root_datum.hpp"
#include "generators.hpp"

using namespace eqk;
using eqk::testing::Gen;

namespace {

// Brute-force closure under pairwise products, used as an oracle for the
// breadth-first enumeration.
std::set<IntMatrix> closure(const std::vector<IntMatrix>& gens, std::size_t rank) {
  std::set<IntMatrix> all{IntMatrix::identity(rank)};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<IntMatrix> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& b : gens) grew |= all.insert(a * b).second;
  }
  return all;
}

}  // namespace

TEST(RootDatum, PresetsSatisfyAxioms) {
  for (const auto& label : preset_labels()) {
    RootDatum d = datum_from_preset(label);
    EXPECT_TRUE(RootDatum::check_axioms(d.rank(), d.roots(), d.coroots(), d.simple_indices()).empty())
        << label;
    if (label.rfind("GL", 0) != 0) EXPECT_TRUE(d.simply_connected_commutator()) << label;
  }
  RootDatum sl2 = datum_from_preset("SL2");
  EXPECT_EQ(sl2.rank(), 1u);
  EXPECT_EQ(sl2.roots(), (std::vector<Weight>{{2}, {-2}}));
  RootDatum gl2 = datum_from_preset("GL2");
  EXPECT_EQ(gl2.roots(), (std::vector<Weight>{{1, -1}, {-1, 1}}));
  EXPECT_EQ(gl2.coroots(), gl2.roots());
  EXPECT_TRUE(gl2.simply_connected_commutator());
  RootDatum a1a1 = datum_from_preset("A1xA1");
  EXPECT_EQ(a1a1.roots().size(), 4u);
  EXPECT_THROW(datum_from_preset("E8"), PreconditionError);
}

TEST(RootDatum, RejectsBrokenData) {
  // Adjoint-style root with the wrong coroot length.
  EXPECT_THROW(RootDatum("bad", 1, {{2}, {-2}}, {{2}, {-2}}, {0}), PreconditionError);
  // Missing negative root.
  EXPECT_THROW(RootDatum("bad", 1, {{2}}, {{1}}, {0}), PreconditionError);
  // Non-reduced.
  EXPECT_THROW(RootDatum("bad", 1, {{1}, {-1}, {2}, {-2}}, {{2}, {-2}, {1}, {-1}}, {0}),
               PreconditionError);
  try {
    RootDatum("bad", 1, {{2}, {-2}}, {{2}, {-2}}, {0});
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("pairing"), std::string::npos);
  }
  // PGL2 is a valid datum whose commutator is not simply connected.
  RootDatum pgl2("PGL2", 1, {{1}, {-1}}, {{2}, {-2}}, {0});
  EXPECT_FALSE(pgl2.simply_connected_commutator());
}

TEST(Weyl, GroupOrders) {
  const std::pair<const char*, std::size_t> expected[] = {
      {"SL2", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A1xA1", 4}, {"GL2", 2}, {"GL3", 6}, {"Sp4", 8}};
  for (const auto& [label, order] : expected) {
    RootDatum d = datum_from_preset(label);
    WeylGroup w = weyl_elements(d);
    EXPECT_EQ(w.size(), order) << label;
    EXPECT_TRUE(w.front().is_identity());
    std::vector<IntMatrix> gens;
    for (std::size_t s : d.simple_indices()) gens.push_back(d.reflection(s).matrix);
    std::set<IntMatrix> oracle = closure(gens, d.rank());
    std::set<IntMatrix> got;
    for (const auto& g : w) got.insert(g.matrix);
    EXPECT_EQ(got, oracle) << label;
    for (const auto& a : w)
      for (const auto& b : w) EXPECT_TRUE(contains(w, a * b));
  }
  EXPECT_THROW(weyl_elements(datum_from_preset("G2"), 5), ResourceError);
}

TEST(Weyl, ElementsPermuteRoots) {
  for (const auto& label : preset_labels()) {
    RootDatum d = datum_from_preset(label);
    for (const auto& w : weyl_elements(d)) {
      std::set<Weight> image;
      for (const auto& a : d.roots()) {
        EXPECT_TRUE(d.find_root(w.apply(a)).has_value());
        image.insert(w.apply(a));
      }
      EXPECT_EQ(image.size(), d.roots().size());
      EXPECT_EQ(w.matrix * w.inverse, IntMatrix::identity(d.rank()));
    }
  }
}

TEST(Centralizer, Examples) {
  RootDatum gl2 = datum_from_preset("GL2");
  SubDatum z = centralizer_subdatum(gl2, TorsionPoint::parse("1/2,0"));
  EXPECT_TRUE(z.roots.empty());
  EXPECT_EQ(z.weyl.size(), 1u);
  RootDatum sl2 = datum_from_preset("SL2");
  EXPECT_EQ(centralizer_subdatum(sl2, TorsionPoint::parse("1/2")).roots.size(), 2u);
  for (const auto& label : preset_labels()) {
    RootDatum d = datum_from_preset(label);
    SubDatum full = centralizer_subdatum(d, TorsionPoint(d.rank()));
    EXPECT_EQ(full.roots.size(), d.roots().size());
    EXPECT_EQ(full.weyl.size(), weyl_elements(d).size());
  }
}

TEST(Orbit, Examples) {
  RootDatum sl2 = datum_from_preset("SL2");
  auto third = orbit_and_stabilizer(sl2, TorsionPoint::parse("1/3"));
  EXPECT_EQ(third.orbit, (std::vector<TorsionPoint>{TorsionPoint::parse("1/3"), TorsionPoint::parse("2/3")}));
  EXPECT_EQ(third.stabilizer.size(), 1u);
  EXPECT_EQ(orbit_and_stabilizer(sl2, TorsionPoint(1)).stabilizer.size(), 2u);
  auto half = orbit_and_stabilizer(sl2, TorsionPoint::parse("1/2"));
  EXPECT_EQ(half.orbit.size(), 1u);
  EXPECT_EQ(half.stabilizer.size(), 2u);
}

TEST(Orbit, CountingAndStabilizerLemma) {
  Gen g(21);
  for (const auto& label : preset_labels()) {
    RootDatum d = datum_from_preset(label);
    const std::size_t order = weyl_elements(d).size();
    for (int i = 0; i < 12; ++i) {
      TorsionPoint q = g.torsion(d.rank(), 6);
      auto os = orbit_and_stabilizer(d, q);
      EXPECT_EQ(os.orbit.size() * os.stabilizer.size(), order) << label << " " << q.str();
      EXPECT_TRUE(os.lemma_applies);
      EXPECT_TRUE(os.stabilizer_is_reflection_group) << label << " " << q.str();
    }
  }
  // In PGL2 the point 1/4 has stabilizer {1, s} but no root vanishes on it.
  RootDatum pgl2("PGL2", 1, {{1}, {-1}}, {{2}, {-2}}, {0});
  auto os = orbit_and_stabilizer(pgl2, TorsionPoint::parse("1/2"));
  EXPECT_FALSE(os.lemma_applies);
  EXPECT_EQ(os.stabilizer.size(), 2u);
  EXPECT_FALSE(os.stabilizer_is_reflection_group);
}

TEST(Cosets, ExamplesAndPartition) {
  RootDatum a1 = datum_from_preset("A1");
  EXPECT_EQ(coset_representatives(weyl_elements(a1), weyl_elements(a1)).size(), 1u);
  RootDatum a2 = datum_from_preset("A2");
  SubDatum levi = levi_subdatum(a2, {0});
  WeylGroup w = weyl_elements(a2);
  WeylGroup reps = coset_representatives(w, levi.weyl);
  EXPECT_EQ(reps.size(), 3u);
  EXPECT_TRUE(reps.front().is_identity());
  std::multiset<IntMatrix> products;
  for (const auto& r : reps)
    for (const auto& h : levi.weyl) products.insert((r * h).matrix);
  std::multiset<IntMatrix> all;
  for (const auto& g : w) all.insert(g.matrix);
  EXPECT_EQ(products, all);
  RootDatum b2 = datum_from_preset("B2");
  EXPECT_EQ(coset_representatives(weyl_elements(b2), torus_subdatum(b2).weyl).size(), 8u);
  EXPECT_THROW(coset_representatives(weyl_elements(a1), weyl_elements(b2)), StructuralError);
}

TEST(Levi, SimplyConnectedCommutatorIsInherited) {
  for (const auto& label : preset_labels()) {
    RootDatum d = datum_from_preset(label);
    if (!d.simply_connected_commutator()) continue;
    const std::size_t s = d.semisimple_rank();
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      std::vector<std::size_t> pos;
      for (std::size_t i = 0; i < s; ++i)
        if (mask & (1u << i)) pos.push_back(i);
      SubDatum l = levi_subdatum(d, pos);
      EXPECT_TRUE(l.simply_connected_commutator) << label << " mask " << mask;
      for (std::size_t a : l.roots)
        for (std::size_t b : l.roots)
          EXPECT_TRUE(l.contains_root(*d.find_root(d.reflection(a).apply(d.roots()[b]))));
    }
  }
}

TEST(RootDatum, IntegralData) {
  RootDatum gl3 = datum_from_preset("GL3");
  auto central = gl3.central_characters();
  ASSERT_EQ(central.size(), 1u);
  EXPECT_TRUE(central[0] == Weight({1, 1, 1}) || central[0] == Weight({-1, -1, -1}));
  RootDatum g2 = datum_from_preset("G2");
  auto fw = g2.fundamental_weights();
  ASSERT_TRUE(fw.has_value());
  EXPECT_EQ((*fw)[0], Weight({1, 0}));
  EXPECT_EQ(g2.max_root_height(), 5);
  EXPECT_EQ(datum_from_preset("SL2").integral_rho(), Weight({1}));
  SubDatum sub = centralizer_subdatum(datum_from_preset("B2"), TorsionPoint::parse("1/2,0"));
  RootDatum as = sub.as_datum();
  EXPECT_EQ(as.roots().size(), 4u);
  EXPECT_EQ(as.semisimple_rank(), 2u);
  EXPECT_FALSE(sub.is_standard_levi());
}
