#include "eqk/report.hpp"

#include <algorithm>

namespace eqk {

void VerificationReport::merge(const VerificationReport& o) {
  cases.insert(cases.end(), o.cases.begin(), o.cases.end());
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  inconclusive = inconclusive || o.inconclusive;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.pass; }));
}

bool GradedReport::certified() const {
  if (inconclusive || degrees.empty()) return false;
  return std::all_of(degrees.begin(), degrees.end(), [](const GradedDegree& d) {
    return d.injective && d.surjective && d.target_dim == d.brute_force_dim;
  });
}

}  // namespace eqk
