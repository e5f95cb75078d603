#pragma once

#include "mdsrel/oracle/code.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mdsrel::verify {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first mismatch, or a short summary on success
  double seconds = 0;
};

/// The four small codes every oracle comparison runs on:
/// [3,1]_2 (b = 1), [4,2]_5, [6,2]_7, [7,3]_8 (b = 3).
std::vector<oracle::SystematicCode> reference_codes();

SuiteResult identities(int bound = 20);
SuiteResult f_grids();
SuiteResult irwe_agreement();
SuiteResult weight_distributions();
SuiteResult spheres();
SuiteResult event_census(int workers = 1);

struct MonteCarloCheck {
  double p = 0.02;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 20240607;
  double sigmas = 4;
  int workers = 1;
};
SuiteResult monte_carlo(const MonteCarloCheck& check = {});

struct Suite {
  std::string name;
  std::function<SuiteResult()> run;
};

/// The seven verification suites in their fixed order.
std::vector<Suite> default_suites(int workers, const MonteCarloCheck& mc);

/// Runs suites in order, printing one line each. Stops at the first failure
/// unless keep_going. Returns true when every executed suite passed.
bool run_suites(const std::vector<Suite>& suites, std::ostream& os, bool keep_going);

}  // namespace mdsrel::verify
