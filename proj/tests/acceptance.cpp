// Acceptance gate: prints one PASS/FAIL line per published criterion with the
// expected and measured values, exits 2 when any criterion fails.
#include <cstdio>
#include <cstdlib>

#include "todatop/verify.hpp"

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const double budget = todatop::env_time_budget();
  bool all = true;
  auto run_one = [&](int id) {
    for (const auto& r : todatop::run_acceptance(budget, id)) {
      std::printf("%s\n", todatop::format_criterion(r).c_str());
      std::fflush(stdout);
      all = all && r.pass;
    }
  };
  if (only)
    run_one(only);
  else
    for (int id = 1; id <= 12; ++id) run_one(id);
  return all ? 0 : 2;
}
