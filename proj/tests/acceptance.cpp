// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eqk/completion.hpp"
#include "eqk/root_datum.hpp"
#include "eqk/suites.hpp"

using namespace eqk;

namespace {

const std::vector<std::string> kAllPresets = {"SL2", "A2", "B2", "G2", "GL2", "GL3"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail << " [" << what << "]";
  }
};

std::size_t count_label(const VerificationReport& r, const std::string& needle) {
  std::size_t n = 0;
  for (const auto& c : r.cases)
    if (c.label.find(needle) != std::string::npos) ++n;
  return n;
}

// Runs a suite and folds its failures into the outcome.
SuiteResult run(Outcome& out, const std::string& suite, const std::string& preset, SuiteOptions opts = {}) {
  SuiteResult res = run_suite(suite, datum_from_preset(preset), opts);
  const auto failures = res.report.failures();
  std::string first;
  for (const auto& c : res.report.cases)
    if (!c.pass) {
      first = ", first: " + c.label + " lhs " + c.lhs + " rhs " + c.rhs;
      break;
    }
  out.require(failures == 0, preset + ": " + std::to_string(failures) + " failing cases" + first);
  out.require(!res.report.inconclusive, preset + ": inconclusive");
  out.detail << ' ' << preset << ':' << res.report.cases.size();
  return res;
}

TorsionPoint point(const std::string& s) { return TorsionPoint::parse(s); }

Outcome criterion1() {
  Outcome o;
  for (const auto& p : kAllPresets) {
    SuiteOptions opts;
    opts.samples = 20;
    const auto res = run(o, "induction_axioms", p, opts);
    o.require(count_label(res.report, "projection") >= 20, p + ": fewer than 20 projection samples");
    if (p == "A2" || p == "B2")
      o.require(count_label(res.report, "transitivity") > 0, p + ": no transitivity cases");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& p : kAllPresets) {
    const auto res = run(o, "reciprocity", p);
    o.require(res.report.cases.size() >= 30, p + ": fewer than 30 cases");
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& p : kAllPresets) {
    const auto res = run(o, "weyl_integration", p);
    o.require(res.report.cases.size() >= 25, p + ": fewer than 25 cases");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const std::string p : {"SL2", "SL3", "B2"}) {
    const auto res = run(o, "alternate_induction", p);
    o.require(count_label(res.report, "Borel") + count_label(res.report, "torus") > 0, p + ": no Borel cases");
    o.require(count_label(res.report, "G/B") == 1, p + ": no flag variety Euler characteristic");
    if (p == "SL3") o.require(count_label(res.report, "levi") > 0, p + ": no Levi cases");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& p : kAllPresets) run(o, "twist", p);
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& p : kAllPresets) run(o, "central_invertibility", p);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"SL2", "1/3"}, {"GL2", "1/2,0"}, {"SL3", regular_point(datum_from_preset("SL3")).str()}};
  for (const auto& [p, q] : cases) {
    SuiteOptions opts;
    opts.jet_order = 3;
    opts.points = {point(q)};
    const auto res = run(o, "crt", p, opts);
    o.require(count_label(res.report, "k=2 surjectivity") == 1 && count_label(res.report, "k=3 surjectivity") == 1,
              p + ": missing surjectivity certificate");
    o.require(count_label(res.report, "containment") > 0, p + ": missing containment cases");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"SL2", {"1/3", "1/4"}}, {"GL2", {"1/2,0"}}, {"SL3", {regular_point(datum_from_preset("SL3")).str()}}};
  for (const auto& [p, qs] : cases) {
    SuiteOptions opts;
    opts.jet_order = 3;
    for (const auto& q : qs) opts.points.push_back(point(q));
    const auto res = run(o, "indres", p, opts);
    o.require(count_label(res.report, "res_h ind_h") > 0, p + ": no res/ind cases");
    if (p == "GL2") {
      const ResidueFiber f = residue_fiber(datum_from_preset("GL2"), point("1/2,0"));
      o.require(f.dimension() == 2, "GL2 residue fiber dimension " + std::to_string(f.dimension()) + " != 2");
      o.detail << " GL2 residue fiber dim " << f.dimension();
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto sl3 = datum_from_preset("SL3");
  const auto central = central_point(sl3);
  o.require(central && central->order() == 3, "SL3 has no order-3 central point");
  std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"SL2", {"0", "1/4", "1/2"}}, {"GL2", {"1/2,0"}}, {"SL3", {"0,0"}}};
  if (central) cases.back().second.push_back(central->str());
  for (const auto& [p, qs] : cases) {
    SuiteOptions opts;
    opts.order = 4;
    for (const auto& q : qs) opts.points.push_back(point(q));
    const auto res = run(o, "graded_iso", p, opts);
    for (const auto& g : res.graded) {
      o.require(g.certified(), p + " q=" + g.point + " not certified");
      o.require(g.degrees.size() >= 5 && g.degrees.back().degree == 4, p + " q=" + g.point + ": degrees missing");
    }
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const auto& p : std::vector<std::string>{"A1", "A2", "B2", "G2", "GL2", "GL3"}) {
    const auto res = run(o, "infrastructure", p);
    o.require(count_label(res.report, "pi_1") == 1, p + ": no pi_1 flag");
    const bool semisimple = p != "GL2" && p != "GL3";
    if (semisimple) o.require(count_label(res.report, "Weyl group order") == 1, p + ": no Weyl order check");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"induction axioms", criterion1},       {"reciprocity", criterion2},
      {"weyl integration", criterion3},       {"fixed-point localization", criterion4},
      {"twisting", criterion5},               {"central invertibility", criterion6},
      {"crt of completions", criterion7},     {"ind/res at a point", criterion8},
      {"graded isomorphism", criterion9},     {"infrastructure", criterion10}};
  int failed = 0;
  double total = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu (%s):%s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  const bool in_budget = total < 120.0;
  std::printf("%s runtime budget: %.2fs of 120s\n", in_budget ? "PASS" : "FAIL", total);
  return failed == 0 && in_budget ? 0 : 1;
}
