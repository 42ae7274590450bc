// Acceptance suites over the three reference inputs and the randomized
// property checks.

#ifndef TROPMIRROR_CORE_ACCEPTANCE_HPP
#define TROPMIRROR_CORE_ACCEPTANCE_HPP

#include "core/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tropmirror {

/// The K3 surface as a quadric and a cubic in P4, the quintic threefold
/// and the plane cubic, each with the product ideal of its nef partition.
Problem k3_problem();
Problem quintic_problem();
Problem elliptic_problem();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;

  bool passed() const;
};

inline constexpr std::uint64_t default_seed = 20261019;

/// k3, quintic, elliptic, properties, all.
const std::vector<std::string>& suite_names();
/// Throws Schema for an unknown suite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = default_seed);

/// One line per criterion, then a summary line.
std::string format_report(const SuiteReport& r);
Json report_to_json(const SuiteReport& r);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_ACCEPTANCE_HPP
