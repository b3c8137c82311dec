#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hetsnet/sinr.hpp"

namespace hetsnet {

using BigInt = boost::multiprecision::cpp_int;

enum class Solver {
  kBruteForce,
  kBranchAndBound,
  kUmrcg,
  kWmrcg,
  kMaxSinr,
  kMinInterference,
};

// Canonical tag used in experiment records and CLI arguments.
const char* solver_name(Solver solver);

struct SolveResult {
  Association association;
  double objective = 0.0;  // pair count, or weight sum when weights are given
  std::uint64_t nodes_explored = 0;
  Solver solver = Solver::kBruteForce;
};

// Number of non-empty partial one-to-one matchings between num_su users
// and num_sbs base stations, exact in integer arithmetic.
BigInt count_combinations(int num_su, int num_sbs);

class EnumerationCapError : public std::runtime_error {
public:
  EnumerationCapError(int num_su, int num_sbs, BigInt count,
                      std::uint64_t cap);

  const BigInt& combination_count() const { return count_; }

private:
  BigInt count_;
};

struct ExactOptions {
  // Refuse brute force above this many matchings.
  std::uint64_t enumeration_cap = 10'000'000;
  // Debug aid: skip the optimistic-bound test in branch and bound. The
  // returned objective must not change, only the node count.
  bool disable_bound_pruning = false;
};

// Objective of an association under the optional pair-weight vector
// (length num_su*num_sbs, pair (k, n) at index k*num_sbs + n). Summation
// runs in ascending column order so equal associations always produce
// bit-identical objectives, whichever solver computed them.
double association_objective(const Association& assoc,
                             std::span<const double> weights);

// Strict lexicographic order on the binary pair-indicator vectors; used to
// break ties between equal-objective optima deterministically.
bool lex_precedes(const Association& lhs, const Association& rhs);

// Exhaustive search over all partial matchings (plus the empty one). Keeps
// the feasible association of maximum objective; ties go to the
// lexicographically smallest indicator vector. A scenario whose macro user
// fails its threshold outright yields the empty association and objective 0.
SolveResult solve_bf(const Scenario& scn, std::span<const double> weights = {},
                     const ExactOptions& options = {});

// Depth-first search over base stations, branching on "idle" or "serve SU
// k" for each individually feasible pair, pruning on an optimistic bound.
// Returns the same objective as solve_bf on every instance both can solve.
SolveResult solve_bnb(const Scenario& scn,
                      std::span<const double> weights = {},
                      const ExactOptions& options = {});

}  // namespace hetsnet
