#include "eqk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "eqk/completion.hpp"
#include "eqk/errors.hpp"
#include "eqk/induction.hpp"
#include "eqk/rep_theory.hpp"
#include "eqk/suites.hpp"

namespace eqk {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string preset;
  std::string datum_file;
  std::string weight;
  std::string chr;
  std::string sub = "T";
  std::vector<std::string> q;
  unsigned order = 4;
  std::string suite;
  int height = 3;
  unsigned seed = 1;
  int box = -1;
  unsigned jet_order = 3;
  int samples = 20;
  std::string format = "text";
  bool timing = false;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

template <class T>
std::string list_text(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(x.str());
  return "[" + join(parts, ", ") + "]";
}

Weight parse_weight(const std::string& text, std::size_t rank) {
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') cleaned += c;
  std::vector<int> xs;
  std::stringstream in(cleaned);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw ParseError("--weight: '" + part + "' is not an integer");
    xs.push_back(v);
  }
  if (xs.size() != rank)
    throw ParseError("--weight: expected " + std::to_string(rank) + " coordinates, got " +
                     std::to_string(xs.size()));
  return Weight(xs);
}

TorsionPoint parse_point(const std::string& text, std::size_t rank) {
  TorsionPoint q = TorsionPoint::parse(text);
  if (q.rank() != rank)
    throw ParseError("--q: expected " + std::to_string(rank) + " coordinates in '" + text + "'");
  return q;
}

// T, G, levi:i,j (positions of simple roots) or Z (centralizer of the single --q).
SubDatum parse_sub(const std::string& text, const RootDatum& d, const std::vector<TorsionPoint>& points) {
  if (text == "T" || text == "torus") return torus_subdatum(d);
  if (text == "G" || text == "full") return full_subdatum(d);
  if (text == "Z" || text == "centralizer") {
    if (points.size() != 1) throw ParseError("--sub Z needs exactly one --q");
    return centralizer_subdatum(d, points[0]);
  }
  if (text.rfind("levi:", 0) == 0) {
    std::vector<std::size_t> pos;
    std::stringstream in(text.substr(5));
    std::string part;
    while (std::getline(in, part, ',')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
        throw ParseError("--sub: '" + part + "' is not a simple root position");
      pos.push_back(std::stoul(part));
      if (pos.back() >= d.semisimple_rank())
        throw ParseError("--sub: simple root position " + part + " out of range");
    }
    return levi_subdatum(d, pos);
  }
  throw ParseError("--sub: expected T, G, Z or levi:i,j, got '" + text + "'");
}

std::string decomposition_text(const std::vector<std::pair<Weight, Cyclotomic>>& parts) {
  if (parts.empty()) return "0";
  std::vector<std::string> out;
  for (const auto& [lam, m] : parts) out.push_back((m.is_one() ? "" : m.str() + "*") + "V" + lam.str());
  return join(out, " + ");
}

std::vector<std::pair<std::string, std::string>> datum_summary(const RootDatum& d) {
  const WeylGroup w = weyl_elements(d);
  return {{"name", d.name()},
          {"rank", std::to_string(d.rank())},
          {"semisimple rank", std::to_string(d.semisimple_rank())},
          {"roots", std::to_string(d.roots().size())},
          {"weyl order", std::to_string(w.size())},
          {"pi_1 torsion-free", d.simply_connected_commutator() ? "true" : "false"}};
}

// Character from --weight (irreducible) or --char (explicit polynomial).
LaurentPoly input_character(const Options& o, const RootDatum& d) {
  if (!o.chr.empty() && !o.weight.empty()) throw ParseError("give only one of --weight and --char");
  if (!o.chr.empty()) return parse_laurent(o.chr, d.rank());
  if (!o.weight.empty()) return weyl_character(d, parse_weight(o.weight, d.rank()));
  throw ParseError("this command needs --weight or --char");
}

void run_verb(const std::string& verb, const Options& o, const RootDatum& d, Report& r) {
  std::vector<TorsionPoint> points;
  for (const auto& s : o.q) points.push_back(parse_point(s, d.rank()));
  auto set = [&](std::string k, std::string v) { r.values.emplace_back(std::move(k), std::move(v)); };

  if (verb == "info") {
    std::vector<Weight> simple, positive;
    for (std::size_t i : d.simple_indices()) simple.push_back(d.roots()[i]);
    for (std::size_t i : d.positive_roots()) positive.push_back(d.roots()[i]);
    set("simple roots", list_text(simple));
    set("positive roots", list_text(positive));
    set("coroots", list_text(d.coroots()));
    const auto fw = d.fundamental_weights();
    set("fundamental weights", fw ? list_text(*fw) : "none (not integral)");
    set("central characters", list_text(d.central_characters()));
    for (const auto& q : points) {
      const OrbitStabilizer os = orbit_and_stabilizer(d, q);
      const SubDatum z = centralizer_subdatum(d, q);
      set("point", q.str());
      set("order", std::to_string(q.order()));
      set("centralizer", z.describe());
      set("orbit size", std::to_string(os.orbit.size()));
      set("stabilizer order", std::to_string(os.stabilizer.size()));
    }
    return;
  }
  if (verb == "char") {
    if (o.weight.empty()) throw ParseError("char needs --weight");
    const Weight lam = parse_weight(o.weight, d.rank());
    const LaurentPoly chi = weyl_character(d, lam);
    set("character", chi.str());
    set("dimension", rational_str(weyl_dimension(d, lam)));
    for (const auto& q : points) set("value at " + q.str(), evaluate_at_torsion(chi, q).str());
    return;
  }
  if (verb == "ind") {
    if (o.chr.empty()) throw ParseError("ind needs --char");
    const SubDatum h = parse_sub(o.sub, d, points);
    const LaurentPoly a = parse_laurent(o.chr, d.rank());
    const LaurentPoly b = induce(h, a);
    set("from", h.describe());
    set("induced", b.str());
    set("decomposition", decomposition_text(decompose_irreducibles(d, b)));
    return;
  }
  if (verb == "res") {
    auto g = std::make_shared<const SubDatum>(full_subdatum(d));
    auto h = std::make_shared<const SubDatum>(parse_sub(o.sub, d, points));
    const VirtualCharacter a(input_character(o, d), g);
    set("to", h->describe());
    set("restricted", restrict(a, h).poly.str());
    return;
  }
  if (verb == "push") {
    if (o.chr.empty()) throw ParseError("push needs --char");
    const SubDatum l = parse_sub(o.sub, d, points);
    const LaurentPoly b = pushforward_fixed_points(l, parse_laurent(o.chr, d.rank()));
    set("over", "G/P for " + l.describe());
    set("pushforward", b.str());
    set("decomposition", decomposition_text(decompose_irreducibles(d, b)));
    return;
  }
  if (verb == "tau") {
    if (points.size() != 1) throw ParseError("tau needs exactly one --q");
    const TruncatedSeries s = tau_point(d, points[0], input_character(o, d), o.order);
    set("point", points[0].str());
    set("tau", s.str());
    return;
  }
  if (verb == "verify") {
    if (o.suite.empty()) throw ParseError("verify needs --suite (one of " + join(suite_names(), ", ") + ")");
    SuiteOptions so;
    so.height = o.height;
    so.seed = o.seed;
    so.order = o.order;
    so.jet_order = o.jet_order;
    if (o.box >= 0) so.box = o.box;
    so.points = points;
    so.samples = o.samples;
    SuiteResult res = run_suite(o.suite, d, so);
    set("seed", std::to_string(o.seed));
    r.verification = std::move(res.report);
    r.graded = std::move(res.graded);
    return;
  }
  throw ParseError("unknown verb '" + verb + "'");
}

int status_of(const Report& r) {
  if (!r.verification) return 0;
  if (r.verification->failures() > 0) return static_cast<int>(ExitStatus::verification_failed);
  if (r.verification->inconclusive) return static_cast<int>(ExitStatus::resource_or_inconclusive);
  return 0;
}

std::string verdict(const VerificationReport& v) {
  if (v.failures() > 0) return "FAIL";
  if (v.inconclusive) return "INCONCLUSIVE";
  return v.cases.empty() ? "PASS (vacuous)" : "PASS";
}

std::string inputs_text(const std::vector<std::pair<std::string, std::string>>& inputs) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : inputs) parts.push_back(k + "=" + v);
  return join(parts, "; ");
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

json to_json(const Report& r) {
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", "eqk"}, {"version", r.tool_version}};
  j["command"] = r.command;
  j["verb"] = r.verb;
  json datum = json::object();
  for (const auto& [k, v] : r.datum) datum[k] = v;
  j["datum"] = datum;
  json values = json::array();
  for (const auto& [k, v] : r.values) values.push_back({{"name", k}, {"value", v}});
  j["values"] = values;
  if (r.verification) {
    const auto& v = *r.verification;
    json cases = json::array();
    for (const auto& c : v.cases) {
      json inputs = json::object();
      for (const auto& [k, val] : c.inputs) inputs[k] = val;
      cases.push_back({{"label", c.label}, {"inputs", inputs}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    }
    j["verification"] = {{"suite", v.suite},
                         {"cases", cases},
                         {"notes", v.notes},
                         {"inconclusive", v.inconclusive},
                         {"summary", {{"cases", v.cases.size()}, {"failed", v.failures()}, {"verdict", verdict(v)}}}};
  } else {
    j["verification"] = nullptr;
  }
  json graded = json::array();
  for (const auto& g : r.graded) {
    json degrees = json::array();
    for (const auto& d : g.degrees)
      degrees.push_back({{"degree", d.degree},
                         {"source_rank", d.source_rank},
                         {"target_dim", d.target_dim},
                         {"brute_force_dim", d.brute_force_dim},
                         {"injective", d.injective},
                         {"surjective", d.surjective}});
    graded.push_back({{"parent", g.parent},
                      {"point", g.point},
                      {"centralizer", g.centralizer},
                      {"degrees", degrees},
                      {"warning_not_simply_connected", g.warning_not_simply_connected},
                      {"inconclusive", g.inconclusive},
                      {"notes", g.notes},
                      {"certified", g.certified()}});
  }
  j["graded"] = graded;
  j["diagnostics"] = r.diagnostics;
  j["exit_status"] = r.exit_status;
  if (r.duration_seconds) j["duration_seconds"] = *r.duration_seconds;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "eqk " << r.tool_version << "\n";
  out << "command: " << join(r.command, " ") << "\n";
  if (!r.datum.empty()) {
    std::vector<std::string> parts;
    for (const auto& [k, v] : r.datum) parts.push_back(k + "=" + v);
    out << "datum: " << join(parts, ", ") << "\n";
  }
  std::size_t kw = 0;
  for (const auto& [k, v] : r.values) kw = std::max(kw, k.size());
  for (const auto& [k, v] : r.values) out << pad(k + ":", kw + 2) << v << "\n";
  if (r.verification) {
    const auto& v = *r.verification;
    out << "suite: " << v.suite << "\n";
    std::size_t lw = 5, iw = 6;
    for (const auto& c : v.cases) {
      lw = std::max(lw, c.label.size());
      iw = std::max(iw, inputs_text(c.inputs).size());
    }
    if (!v.cases.empty()) {
      out << "  result  " << pad("label", lw) << "  " << pad("inputs", iw) << "  lhs | rhs\n";
      for (const auto& c : v.cases)
        out << "  " << (c.pass ? "PASS    " : "FAIL    ") << pad(c.label, lw) << "  " << pad(inputs_text(c.inputs), iw)
            << "  " << c.lhs << " | " << c.rhs << "\n";
    }
    for (const auto& n : v.notes) out << "note: " << n << "\n";
  }
  for (const auto& g : r.graded) {
    out << "graded: " << g.parent << " q=" << g.point << ", centralizer " << g.centralizer << "\n";
    out << "  degree  source_rank  target_dim  brute_force_dim  injective  surjective\n";
    for (const auto& d : g.degrees)
      out << "  " << pad(std::to_string(d.degree), 6) << "  " << pad(std::to_string(d.source_rank), 11) << "  "
          << pad(std::to_string(d.target_dim), 10) << "  " << pad(std::to_string(d.brute_force_dim), 15) << "  "
          << pad(d.injective ? "yes" : "no", 9) << "  " << (d.surjective ? "yes" : "no") << "\n";
    if (g.warning_not_simply_connected) out << "  warning: commutator not simply connected\n";
    for (const auto& n : g.notes) out << "  note: " << n << "\n";
    out << "  " << (g.certified() ? "certified" : g.inconclusive ? "inconclusive" : "not certified") << "\n";
  }
  for (const auto& d : r.diagnostics) out << "error: " << d << "\n";
  if (r.verification) {
    const auto& v = *r.verification;
    out << v.cases.size() << " cases";
    if (v.failures() > 0) out << ", " << v.failures() << " failed";
    out << ", " << verdict(v) << "\n";
  }
  if (r.duration_seconds) out << "duration: " << *r.duration_seconds << " s\n";
  return out.str();
}

std::vector<std::pair<std::string, std::string>> pairs_from(const json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : j.items()) out.emplace_back(k, v.get<std::string>());
  return out;
}

const json& field(const json& j, const std::string& name) {
  if (!j.contains(name)) throw ParseError("datum file: field '" + name + "' is missing");
  return j.at(name);
}

std::vector<Weight> vectors(const json& j, const std::string& name, std::size_t rank) {
  const json& arr = field(j, name);
  if (!arr.is_array()) throw ParseError("datum file: field '" + name + "' must be a list of integer vectors");
  std::vector<Weight> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = name + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != rank)
      throw ParseError("datum file: field '" + where + "' must be a list of " + std::to_string(rank) + " integers");
    std::vector<int> xs;
    for (std::size_t k = 0; k < rank; ++k) {
      if (!arr[i][k].is_number_integer())
        throw ParseError("datum file: field '" + where + "[" + std::to_string(k) + "]' must be an integer");
      xs.push_back(arr[i][k].get<int>());
    }
    out.emplace_back(xs);
  }
  return out;
}

}  // namespace

RootDatum parse_datum_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("datum file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("datum file: top level must be an object");
  const json& name = field(j, "name");
  if (!name.is_string()) throw ParseError("datum file: field 'name' must be a string");
  const json& rank = field(j, "rank");
  if (!rank.is_number_integer() || rank.get<long>() < 1 || rank.get<long>() > static_cast<long>(kMaxRank))
    throw ParseError("datum file: field 'rank' must be an integer between 1 and " + std::to_string(kMaxRank));
  const auto r = rank.get<std::size_t>();
  std::vector<Weight> roots = vectors(j, "roots", r);
  std::vector<Weight> coroots = vectors(j, "coroots", r);
  const json& simple = field(j, "simple_indices");
  if (!simple.is_array()) throw ParseError("datum file: field 'simple_indices' must be a list of indices");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    if (!simple[i].is_number_integer() || simple[i].get<long>() < 0)
      throw ParseError("datum file: field 'simple_indices[" + std::to_string(i) + "]' must be a non-negative integer");
    idx.push_back(simple[i].get<std::size_t>());
  }
  return RootDatum(name.get<std::string>(), r, std::move(roots), std::move(coroots), std::move(idx));
}

RootDatum parse_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("datum file: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_datum_text(buf.str());
}

std::string datum_to_text(const RootDatum& d) {
  json j;
  j["name"] = d.name();
  j["rank"] = d.rank();
  auto vecs = [](const std::vector<Weight>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(w.to_vector());
    return a;
  };
  j["roots"] = vecs(d.roots());
  j["coroots"] = vecs(d.coroots());
  j["simple_indices"] = d.simple_indices();
  return j.dump(2) + "\n";
}

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::json ? to_json(report).dump(2) + "\n" : to_text(report);
}

Report report_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema").get<int>() != kReportSchema) throw ParseError("unsupported report schema");
  Report r;
  r.tool_version = j.at("tool").at("version").get<std::string>();
  r.command = j.at("command").get<std::vector<std::string>>();
  r.verb = j.at("verb").get<std::string>();
  r.datum = pairs_from(j.at("datum"));
  for (const auto& v : j.at("values")) r.values.emplace_back(v.at("name").get<std::string>(), v.at("value").get<std::string>());
  if (!j.at("verification").is_null()) {
    const json& v = j.at("verification");
    VerificationReport rep;
    rep.suite = v.at("suite").get<std::string>();
    for (const auto& c : v.at("cases"))
      rep.add({c.at("label").get<std::string>(), pairs_from(c.at("inputs")), c.at("lhs").get<std::string>(),
               c.at("rhs").get<std::string>(), c.at("pass").get<bool>()});
    rep.notes = v.at("notes").get<std::vector<std::string>>();
    rep.inconclusive = v.at("inconclusive").get<bool>();
    r.verification = std::move(rep);
  }
  for (const auto& g : j.at("graded")) {
    GradedReport gr;
    gr.parent = g.at("parent").get<std::string>();
    gr.point = g.at("point").get<std::string>();
    gr.centralizer = g.at("centralizer").get<std::string>();
    for (const auto& d : g.at("degrees"))
      gr.degrees.push_back({d.at("degree").get<unsigned>(), d.at("source_rank").get<std::size_t>(),
                            d.at("target_dim").get<std::size_t>(), d.at("brute_force_dim").get<std::size_t>(),
                            d.at("injective").get<bool>(), d.at("surjective").get<bool>()});
    gr.warning_not_simply_connected = g.at("warning_not_simply_connected").get<bool>();
    gr.inconclusive = g.at("inconclusive").get<bool>();
    gr.notes = g.at("notes").get<std::vector<std::string>>();
    r.graded.push_back(std::move(gr));
  }
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  r.exit_status = j.at("exit_status").get<int>();
  if (j.contains("duration_seconds")) r.duration_seconds = j.at("duration_seconds").get<double>();
  return r;
}

CommandResult run_command(const std::vector<std::string>& argv) {
  CommandResult result;
  Report& r = result.report;
  r.command = argv;
  const auto start = std::chrono::steady_clock::now();
  auto fail = [&](ExitStatus s, const std::string& msg) {
    r.diagnostics.push_back(msg);
    r.exit_status = result.status = static_cast<int>(s);
    return result;
  };

  Options o;
  CLI::App app{"Exact equivariant K-theory computations for reductive groups", "eqk"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--preset", o.preset, "Preset datum: " + join(preset_labels(), ", "));
  app.add_option("--datum-file", o.datum_file, "JSON root datum with name, rank, roots, coroots, simple_indices");
  app.add_option("--weight", o.weight, "Weight, comma separated, e.g. 1,0");
  app.add_option("--char", o.chr, "Laurent polynomial, e.g. \"x1 + x2 + x1^-1*x2^-1\"");
  app.add_option("--sub", o.sub, "Subgroup: T, G, Z (centralizer of --q) or levi:i,j")->capture_default_str();
  app.add_option("--q", o.q, "Torsion point, e.g. 1/2,0 (repeatable)");
  app.add_option("--order", o.order, "Truncation order N")->capture_default_str();
  app.add_option("--suite", o.suite, "Suite: " + join(suite_names(), ", "));
  app.add_option("--height", o.height, "Weight height bound")->capture_default_str();
  app.add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  app.add_option("--box", o.box, "Monomial box bound for jet rank computations");
  app.add_option("--jet-order", o.jet_order, "Jet order k")->capture_default_str();
  app.add_option("--samples", o.samples, "Seeded samples for the projection formula")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--timing", o.timing, "Include wall-clock duration in the report");
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"info", "Summarize the root datum (and torsion points given by --q)"},
      {"char", "Irreducible character of highest weight --weight"},
      {"ind", "Induce --char from --sub to G"},
      {"res", "Restrict a character of G to --sub"},
      {"push", "Fixed-point pushforward of --char over G/P for the Levi --sub"},
      {"tau", "Twisted Chern character at --q, truncated at --order"},
      {"verify", "Run the verification suite --suite"}};
  for (const auto& [name, help] : verbs) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    result.help = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    return fail(ExitStatus::usage, e.what());
  }
  r.verb = app.get_subcommands().front()->get_name();
  result.format = o.format == "json" ? ReportFormat::json : ReportFormat::text;

  try {
    set_default_weyl_cap(kDefaultWeylCap);
    if (const char* cap = std::getenv("EQK_WEYL_CAP")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(cap, &end, 10);
      if (end == cap || *end != '\0' || v == 0) throw ParseError("EQK_WEYL_CAP must be a positive integer");
      set_default_weyl_cap(v);
    }
    if (o.preset.empty() == o.datum_file.empty()) throw ParseError("give exactly one of --preset and --datum-file");
    const RootDatum d = o.preset.empty() ? parse_datum_file(o.datum_file) : datum_from_preset(o.preset);
    r.datum = datum_summary(d);
    run_verb(r.verb, o, d, r);
    r.exit_status = result.status = status_of(r);
  } catch (const ParseError& e) {
    fail(ExitStatus::usage, e.what());
  } catch (const PreconditionError& e) {
    fail(ExitStatus::usage, e.what());
  } catch (const ResourceError& e) {
    fail(ExitStatus::resource_or_inconclusive, e.what());
  } catch (const std::exception& e) {
    fail(ExitStatus::verification_failed, e.what());
  }
  if (o.timing)
    r.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace eqk
