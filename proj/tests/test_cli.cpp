#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "eqk/cli.hpp"
#include "eqk/errors.hpp"

using namespace eqk;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("eqk_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string value(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.values)
    if (k == key) return v;
  return "<missing>";
}

const char* kGL3 = R"({
  "name": "GL3file",
  "rank": 3,
  "roots":   [[1,-1,0],[0,1,-1],[1,0,-1],[-1,1,0],[0,-1,1],[-1,0,1]],
  "coroots": [[1,-1,0],[0,1,-1],[1,0,-1],[-1,1,0],[0,-1,1],[-1,0,1]],
  "simple_indices": [0, 1]
})";

const char* kPGL2 = R"({"name": "PGL2", "rank": 1, "roots": [[1],[-1]], "coroots": [[2],[-2]], "simple_indices": [0]})";

}  // namespace

TEST(Cli, TauAtQuarterPoint) {
  const auto res = run_command({"tau", "--preset", "SL2", "--q", "1/4", "--weight", "1", "--order", "3"});
  EXPECT_EQ(res.status, 0);
  EXPECT_EQ(value(res.report, "tau"), "2*z4*t + 1/3*z4*t^3");
}

TEST(Cli, TrivialCharacter) {
  const auto res = run_command({"char", "--preset", "SL2", "--weight", "0"});
  EXPECT_EQ(res.status, 0);
  EXPECT_EQ(value(res.report, "character"), "1");
  EXPECT_EQ(value(res.report, "dimension"), "1");
}

TEST(Cli, CharacterOfSl3Adjoint) {
  const auto res = run_command({"char", "--preset", "SL3", "--weight", "1,1"});
  EXPECT_EQ(res.status, 0);
  EXPECT_EQ(value(res.report, "dimension"), "8");
}

TEST(Cli, ReciprocitySuitePasses) {
  const auto res = run_command({"verify", "--preset", "SL2", "--suite", "reciprocity", "--height", "3"});
  EXPECT_EQ(res.status, 0);
  ASSERT_TRUE(res.report.verification);
  EXPECT_GE(res.report.verification->cases.size(), 30u);
  EXPECT_NE(emit_report(res.report, ReportFormat::text).find("cases, PASS"), std::string::npos);
}

TEST(Cli, InductionAndPushforward) {
  auto ind = run_command({"ind", "--preset", "SL2", "--char", "x^2"});
  EXPECT_EQ(ind.status, 0);
  EXPECT_EQ(value(ind.report, "induced"), "x^2 + x^-2");
  auto push = run_command({"push", "--preset", "SL2", "--char", "x^2"});
  EXPECT_EQ(push.status, 0);
  EXPECT_EQ(value(push.report, "decomposition"), "V(2)");
  auto res = run_command({"res", "--preset", "SL3", "--weight", "1,0", "--sub", "levi:0"});
  EXPECT_EQ(res.status, 0);
  EXPECT_EQ(value(res.report, "restricted"), value(run_command({"char", "--preset", "SL3", "--weight", "1,0"}).report,
                                                    "character"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_command({}).status, 2);
  EXPECT_EQ(run_command({"char", "--weight", "0"}).status, 2);
  EXPECT_EQ(run_command({"char", "--preset", "SL2", "--bogus"}).status, 2);
  EXPECT_EQ(run_command({"char", "--preset", "XX9", "--weight", "0"}).status, 2);
  EXPECT_EQ(run_command({"char", "--preset", "SL2", "--weight", "a"}).status, 2);
  EXPECT_EQ(run_command({"char", "--preset", "SL2", "--weight", "-1"}).status, 2);
  EXPECT_EQ(run_command({"verify", "--preset", "SL2", "--suite", "nope"}).status, 2);
  EXPECT_EQ(run_command({"tau", "--preset", "SL2", "--weight", "1"}).status, 2);
  EXPECT_EQ(run_command({"ind", "--preset", "SL3", "--char", "x1", "--sub", "levi:0"}).status, 2);
  const auto r = run_command({"char", "--preset", "SL2", "--format", "yaml"});
  EXPECT_EQ(r.status, 2);
  EXPECT_FALSE(r.report.diagnostics.empty());
}

TEST(Cli, HelpIsNotAnError) {
  const auto res = run_command({"--help"});
  EXPECT_EQ(res.status, 0);
  ASSERT_TRUE(res.help);
  EXPECT_NE(res.help->find("verify"), std::string::npos);
}

TEST(Cli, WeylCapExitsThree) {
  ::setenv("EQK_WEYL_CAP", "4", 1);
  const auto res = run_command({"info", "--preset", "G2"});
  ::unsetenv("EQK_WEYL_CAP");
  EXPECT_EQ(res.status, 3);
  EXPECT_EQ(run_command({"info", "--preset", "G2"}).status, 0);
}

TEST(Cli, InconclusiveExitsThree) {
  const auto path = temp_file("pgl2.json", kPGL2);
  const auto res = run_command({"verify", "--datum-file", path, "--suite", "graded_iso"});
  EXPECT_EQ(res.status, 3);
  ASSERT_FALSE(res.report.graded.empty());
  EXPECT_TRUE(res.report.graded.front().warning_not_simply_connected);
}

TEST(Cli, EmptySuiteIsVacuousPass) {
  const auto res = run_command({"verify", "--preset", "SL2", "--suite", "weyl_integration", "--height", "-1"});
  EXPECT_EQ(res.status, 0);
  EXPECT_NE(emit_report(res.report, ReportFormat::text).find("0 cases, PASS (vacuous)"), std::string::npos);
  Report empty;
  empty.verification = VerificationReport{};
  EXPECT_NE(emit_report(empty, ReportFormat::text).find("0 cases, PASS (vacuous)"), std::string::npos);
}

TEST(Cli, FailingCaseShowsBothSides) {
  Report r;
  VerificationReport v;
  v.suite = "demo";
  v.add({"identity", {{"a", "x"}}, "x + 1", "x", false});
  r.verification = v;
  for (auto f : {ReportFormat::text, ReportFormat::json}) {
    const std::string out = emit_report(r, f);
    EXPECT_NE(out.find("x + 1"), std::string::npos);
    EXPECT_NE(out.find("FAIL"), std::string::npos);
  }
}

TEST(Cli, JsonIsDeterministicAndRoundTrips) {
  const std::vector<std::string> argv = {"verify", "--preset", "GL2", "--suite", "graded_iso", "--format", "json"};
  const auto a = run_command(argv);
  const auto b = run_command(argv);
  const std::string ja = emit_report(a.report, ReportFormat::json);
  EXPECT_EQ(ja, emit_report(b.report, ReportFormat::json));
  EXPECT_EQ(ja.find("duration_seconds"), std::string::npos);
  EXPECT_NE(ja.find("\"schema\": 1"), std::string::npos);
  EXPECT_EQ(emit_report(report_from_json(ja), ReportFormat::json), ja);
  EXPECT_EQ(emit_report(report_from_json(ja), ReportFormat::text), emit_report(a.report, ReportFormat::text));

  auto timed = argv;
  timed.push_back("--timing");
  EXPECT_NE(emit_report(run_command(timed).report, ReportFormat::json).find("duration_seconds"), std::string::npos);
}

TEST(Cli, TextAndJsonAgreeOnVerdict) {
  const auto res = run_command({"verify", "--preset", "SL2", "--suite", "crt"});
  const std::string text = emit_report(res.report, ReportFormat::text);
  const std::string js = emit_report(res.report, ReportFormat::json);
  EXPECT_NE(text.find("4 cases, PASS"), std::string::npos);
  EXPECT_NE(js.find("\"verdict\": \"PASS\""), std::string::npos);
}

TEST(DatumFile, RoundTrip) {
  for (const auto& label : {"SL2", "B2", "GL3"}) {
    const RootDatum d = datum_from_preset(label);
    EXPECT_EQ(parse_datum_text(datum_to_text(d)), d) << label;
  }
}

TEST(DatumFile, Gl3Accepted) {
  const RootDatum d = parse_datum_file(temp_file("gl3.json", kGL3));
  EXPECT_EQ(d.rank(), 3u);
  EXPECT_TRUE(d.simply_connected_commutator());
  const auto res = run_command({"info", "--datum-file", temp_file("gl3.json", kGL3)});
  EXPECT_EQ(res.status, 0);
  EXPECT_EQ(res.report.datum[4].second, "6");
}

TEST(DatumFile, PairingViolationNamed) {
  const std::string bad = R"({"name": "bad", "rank": 1, "roots": [[1],[-1]], "coroots": [[3],[-3]], "simple_indices": [0]})";
  try {
    parse_datum_text(bad);
    FAIL() << "accepted a datum with pairing 3";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("pairing"), std::string::npos);
  }
  const auto res = run_command({"info", "--datum-file", temp_file("bad.json", bad)});
  EXPECT_EQ(res.status, 2);
}

TEST(DatumFile, MalformedInputsNameLineOrField) {
  try {
    parse_datum_text("{\n  \"name\": \"x\",\n  \"rank\": 1,\n  \"roots\": [[1],\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
  try {
    parse_datum_text(R"({"name": "x", "rank": 1, "roots": [[1],[-1]], "simple_indices": [0]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'coroots'"), std::string::npos);
  }
  try {
    parse_datum_text(R"({"name": "x", "rank": 1, "roots": [[1],[-1.5]], "coroots": [[2],[-2]], "simple_indices": [0]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("roots[1][0]"), std::string::npos);
  }
  EXPECT_EQ(run_command({"info", "--datum-file", "/nonexistent/eqk.json"}).status, 2);
}
