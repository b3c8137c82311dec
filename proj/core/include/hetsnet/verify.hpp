#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hetsnet/exact.hpp"
#include "hetsnet/sinr.hpp"

namespace hetsnet::verify {

// Independent oracles backing the `verify` CLI command and the test
// suites. Everything here is written from first principles on purpose:
// no code is shared with the implementation paths being checked.

// Visits every partial one-to-one matching, including the empty one.
void for_each_matching(int num_su, int num_sbs,
                       const std::function<void(const Association&)>& visit);

// Matching count by direct enumeration (excludes the empty matching, so it
// is comparable with count_combinations).
BigInt count_matchings_by_enumeration(int num_su, int num_sbs);

// Feasibility decided by naive per-pair arithmetic straight from the SINR
// definitions, quadratic and unclever.
bool feasible_by_direct_arithmetic(const Scenario& scn,
                                   const Association& assoc);

// Exhaustive optimum with the same tie-breaking contract as the solvers,
// built on the two oracles above.
SolveResult best_by_enumeration(const Scenario& scn,
                                std::span<const double> weights = {});

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

CheckResult check_combination_counts(int max_su, int max_sbs);
CheckResult check_matrix_equivalence(int scenarios, std::uint64_t seed);
CheckResult check_exact_solvers_agree(int instances, std::uint64_t seed);
CheckResult check_weight_window(int slots, std::uint64_t seed);

// The suite behind `verify`; runs every check above at a size that
// finishes in seconds.
std::vector<CheckResult> run_all(std::uint64_t seed);

}  // namespace hetsnet::verify
