#pragma once
// Acceptance suite: ten checks printed one line each, shared by the test
// binary and the CLI selftest command.

#include <cstdint>
#include <iosfwd>

#include "gentle/presentation.hpp"

namespace gentle {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SelfCheckReport {
  std::vector<CriterionResult> results;
  bool all_pass() const {
    for (auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

SelfCheckReport run_acceptance(std::ostream& out, std::uint64_t seed = 1);

// Shared fixtures (canonical .gp text).
std::string fixture_gp(const std::string& name);  // kronecker, a2, a3_linear,
                                                  // a3_sink, a3_source,
                                                  // dual_numbers, bad_loop
// All 2^(n-1) orientations of the A_n line quiver, no relations.
std::vector<GentlePresentation> an_orientations(int n);

}  // namespace gentle
