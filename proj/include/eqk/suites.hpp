#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqk/report.hpp"
#include "eqk/root_datum.hpp"

namespace eqk {

struct SuiteOptions {
  /// Weight/monomial height bound (l1 norm of the exponent vector).
  int height = 3;
  unsigned seed = 1;
  /// Truncation order N for graded checks.
  unsigned order = 4;
  /// Jet order k for completion checks.
  unsigned jet_order = 3;
  std::optional<int> box;
  /// Torsion points to use; the suite picks defaults when empty.
  std::vector<TorsionPoint> points;
  /// Number of seeded samples for the projection formula.
  int samples = 20;
};

struct SuiteResult {
  VerificationReport report;
  std::vector<GradedReport> graded;
};

/// Suites invocable by name: induction_axioms, reciprocity, weyl_integration,
/// alternate_induction, twist, central_invertibility, crt, indres, graded_iso,
/// infrastructure.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const RootDatum& datum, const SuiteOptions& opts);

/// A torsion point no root vanishes on, of the smallest possible order.
TorsionPoint regular_point(const RootDatum& datum);
/// A non-identity point of the center (every root vanishes on it), if any of order <= 12.
std::optional<TorsionPoint> central_point(const RootDatum& datum);
/// Representatives of the W-orbits on points with coordinates in (1/n)Z.
std::vector<TorsionPoint> orbit_representatives(const RootDatum& datum, long n);

}  // namespace eqk
