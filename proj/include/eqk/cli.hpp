#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqk/report.hpp"
#include "eqk/root_datum.hpp"

namespace eqk {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum class ExitStatus : int { ok = 0, verification_failed = 1, usage = 2, resource_or_inconclusive = 3 };

/// Everything a command produced. Values are canonical text.
struct Report {
  std::string tool_version = kToolVersion;
  std::vector<std::string> command;
  std::string verb;
  std::vector<std::pair<std::string, std::string>> datum;
  std::vector<std::pair<std::string, std::string>> values;
  std::optional<VerificationReport> verification;
  std::vector<GradedReport> graded;
  std::vector<std::string> diagnostics;
  int exit_status = 0;
  /// Wall-clock seconds; emitted only when requested, so reports stay byte-identical otherwise.
  std::optional<double> duration_seconds;
};

enum class ReportFormat { text, json };

struct CommandResult {
  int status = 0;
  Report report;
  ReportFormat format = ReportFormat::text;
  /// Set for --help; nothing else was run.
  std::optional<std::string> help;
};

/// Parses argv (without the program name) and runs the command. Never throws:
/// failures become diagnostics with the matching exit status.
CommandResult run_command(const std::vector<std::string>& argv);

std::string emit_report(const Report& report, ReportFormat format);
/// Inverse of the json rendering.
Report report_from_json(const std::string& text);

/// JSON document with fields name, rank, roots, coroots, simple_indices.
/// Throws ParseError naming the line or field, PreconditionError listing violated axioms.
RootDatum parse_datum_file(const std::string& path);
RootDatum parse_datum_text(const std::string& text);
std::string datum_to_text(const RootDatum& datum);

}  // namespace eqk
