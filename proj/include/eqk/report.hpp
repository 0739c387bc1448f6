#pragma once

#include <string>
#include <utility>
#include <vector>

namespace eqk {

/// One checked identity: inputs and both sides in canonical text.
struct CaseRecord {
  std::string label;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Pass/fail record of an identity suite. Failing cases keep both sides as witnesses.
struct VerificationReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  std::vector<std::string> notes;
  /// The check could not be certified either way (e.g. a box bound too small).
  bool inconclusive = false;

  void add(CaseRecord c) { cases.push_back(std::move(c)); }
  void note(std::string s) { notes.push_back(std::move(s)); }
  /// Appends the other report's cases and notes; inconclusive is sticky.
  void merge(const VerificationReport& o);
  std::size_t failures() const;
  bool passed() const { return failures() == 0 && !inconclusive; }
};

struct GradedDegree {
  unsigned degree = 0;
  /// dim gr^d of the image.
  std::size_t source_rank = 0;
  /// dim Sym^d(X ⊗ Q)^{W_Z} by the Molien average.
  std::size_t target_dim = 0;
  /// The same dimension by direct linear algebra on Sym^d.
  std::size_t brute_force_dim = 0;
  bool injective = false;
  bool surjective = false;
};

struct GradedReport {
  std::string parent;
  std::string point;
  std::string centralizer;
  std::vector<GradedDegree> degrees;
  /// Parent commutator not simply connected: connectedness of Z is not guaranteed.
  bool warning_not_simply_connected = false;
  bool inconclusive = false;
  std::vector<std::string> notes;

  bool certified() const;
};

}  // namespace eqk
