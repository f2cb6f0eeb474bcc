// The acceptance suite: twelve checks pinning the computed invariants to
// their independently known values, each with its own tolerance/time budget.
#pragma once

#include <string>
#include <vector>

namespace todatop {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string expected;
  std::string measured;
  double seconds = 0;
};

// Seconds allowed for the heavy exceptional-group computations; read from
// TODATOP_TIME_BUDGET, default 120.
double env_time_budget();

// Runs criteria 1..12 in order (or a single one when `only` is 1..12).
std::vector<CriterionResult> run_acceptance(double time_budget, int only = 0);

// "C07 PASS <name> | expected: ... | measured: ... | 0.42s"
std::string format_criterion(const CriterionResult& r);

}  // namespace todatop
