#include "hetsnet/exact.hpp"

#include <algorithm>
#include <vector>

namespace hetsnet {

const char* solver_name(Solver solver) {
  switch (solver) {
    case Solver::kBruteForce: return "bf";
    case Solver::kBranchAndBound: return "bnb";
    case Solver::kUmrcg: return "umrcg";
    case Solver::kWmrcg: return "wmrcg";
    case Solver::kMaxSinr: return "max_sinr";
    case Solver::kMinInterference: return "min_interf";
  }
  return "unknown";
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

}  // namespace

BigInt count_combinations(int num_su, int num_sbs) {
  if (num_su < 1 || num_sbs < 1) {
    throw std::invalid_argument("counts must be at least 1");
  }
  const int lo = std::min(num_su, num_sbs);
  const int hi = std::max(num_su, num_sbs);
  BigInt total = 0;
  for (int n = 1; n <= lo; ++n) {
    total += factorial(n) * binomial(lo, n) * binomial(hi, n);
  }
  return total;
}

EnumerationCapError::EnumerationCapError(int num_su, int num_sbs, BigInt count,
                                         std::uint64_t cap)
    : std::runtime_error("brute force refused: " + count.str() +
                         " matchings for " + std::to_string(num_su) +
                         " users x " + std::to_string(num_sbs) +
                         " stations exceeds cap " + std::to_string(cap)),
      count_(std::move(count)) {}

double association_objective(const Association& assoc,
                             std::span<const double> weights) {
  if (weights.empty()) return assoc.associated_count();
  auto pairs = assoc.pairs();
  const int num_sbs = assoc.num_sbs();
  std::sort(pairs.begin(), pairs.end());  // ascending (su, sbs) = column order
  double total = 0.0;
  for (const auto& [su, sbs] : pairs) total += weights[su * num_sbs + sbs];
  return total;
}

bool lex_precedes(const Association& lhs, const Association& rhs) {
  auto lp = lhs.pairs();
  auto rp = rhs.pairs();
  std::sort(lp.begin(), lp.end());
  std::sort(rp.begin(), rp.end());
  const int num_sbs = lhs.num_sbs();
  const std::size_t common = std::min(lp.size(), rp.size());
  for (std::size_t i = 0; i < common; ++i) {
    const int lc = lp[i].first * num_sbs + lp[i].second;
    const int rc = rp[i].first * num_sbs + rp[i].second;
    // The vector whose next set bit sits later carries a 0 where the other
    // carries a 1, which makes it the lexicographically smaller one.
    if (lc != rc) return lc > rc;
  }
  return lp.size() < rp.size();
}

namespace {

void check_weights(std::span<const double> weights, int num_su, int num_sbs) {
  if (!weights.empty() &&
      weights.size() != static_cast<std::size_t>(num_su) * num_sbs) {
    throw std::invalid_argument("weight vector must have num_su*num_sbs entries");
  }
}

// Incumbent tracking shared by both solvers: maximize the objective, break
// ties toward the lexicographically smallest indicator vector.
struct Incumbent {
  Association association;
  double objective = 0.0;

  explicit Incumbent(int num_sbs) : association(num_sbs) {}

  void offer(const Association& candidate, double value) {
    if (value > objective ||
        (value == objective && lex_precedes(candidate, association))) {
      association = candidate;
      objective = value;
    }
  }
};

struct BruteForceSearch {
  const Scenario& scn;
  std::span<const double> weights;
  Association current;
  std::vector<char> used_sbs;
  Incumbent best;
  std::uint64_t tested = 0;

  BruteForceSearch(const Scenario& s, std::span<const double> w)
      : scn(s),
        weights(w),
        current(s.num_sbs()),
        used_sbs(s.num_sbs(), 0),
        best(s.num_sbs()) {}

  void run(int su) {
    if (su == scn.num_su()) {
      ++tested;
      if (is_feasible(scn, current)) {
        best.offer(current, association_objective(current, weights));
      }
      return;
    }
    run(su + 1);  // leave this user out
    for (int n = 0; n < scn.num_sbs(); ++n) {
      if (used_sbs[n]) continue;
      used_sbs[n] = 1;
      current.assignment[n] = su;
      run(su + 1);
      current.assignment[n] = std::nullopt;
      used_sbs[n] = 0;
    }
  }
};

}  // namespace

SolveResult solve_bf(const Scenario& scn, std::span<const double> weights,
                     const ExactOptions& options) {
  check_weights(weights, scn.num_su(), scn.num_sbs());
  BigInt combinations = count_combinations(scn.num_su(), scn.num_sbs());
  if (combinations > options.enumeration_cap) {
    throw EnumerationCapError(scn.num_su(), scn.num_sbs(),
                              std::move(combinations),
                              options.enumeration_cap);
  }

  BruteForceSearch search(scn, weights);
  search.run(0);
  return {search.best.association, search.best.objective, search.tested,
          Solver::kBruteForce};
}

namespace {

struct BranchAndBoundSearch {
  const Scenario& scn;
  std::span<const double> weights;
  bool use_bound;
  Association current;
  std::vector<char> used_su;
  std::vector<char> singleton_ok;  // pair feasible on an otherwise empty map
  Incumbent best;
  std::uint64_t nodes = 0;

  // Slack under which a subtree is considered unable to beat the incumbent.
  // Ties are deliberately kept alive so the lexicographic tie-break sees
  // every optimal association.
  static constexpr double kPruneSlack = 1e-9;

  BranchAndBoundSearch(const Scenario& s, std::span<const double> w,
                       bool bound)
      : scn(s),
        weights(w),
        use_bound(bound),
        current(s.num_sbs()),
        used_su(s.num_su(), 0),
        singleton_ok(static_cast<std::size_t>(s.num_su()) * s.num_sbs(), 0),
        best(s.num_sbs()) {
    Association probe(s.num_sbs());
    for (int n = 0; n < s.num_sbs(); ++n) {
      for (int k = 0; k < s.num_su(); ++k) {
        probe.assignment[n] = k;
        singleton_ok[k * s.num_sbs() + n] = is_feasible(s, probe);
      }
      probe.assignment[n] = std::nullopt;
    }
  }

  double pair_value(int su, int sbs) const {
    return weights.empty() ? 1.0 : weights[su * scn.num_sbs() + sbs];
  }

  // Optimistic completion value over stations station..N-1: each one
  // contributes its best singleton-feasible pair with a still-unmatched
  // user. Individually infeasible pairs can never enter a feasible
  // completion, so this never undercounts.
  double optimistic_gain(int station) const {
    double gain = 0.0;
    for (int n = station; n < scn.num_sbs(); ++n) {
      double best_pair = 0.0;
      for (int k = 0; k < scn.num_su(); ++k) {
        if (used_su[k] || !singleton_ok[k * scn.num_sbs() + n]) continue;
        best_pair = std::max(best_pair, pair_value(k, n));
        if (weights.empty()) break;  // any candidate counts as 1
      }
      gain += best_pair;
    }
    return gain;
  }

  void run(int station, double value_so_far) {
    ++nodes;
    if (station == scn.num_sbs()) {
      if (is_feasible(scn, current)) {
        best.offer(current, association_objective(current, weights));
      }
      return;
    }
    if (use_bound &&
        value_so_far + optimistic_gain(station) <
            best.objective - kPruneSlack) {
      return;
    }

    // Strong candidates first so good incumbents appear early; order is
    // deterministic (gain descending, then user index).
    std::vector<int> candidates;
    for (int k = 0; k < scn.num_su(); ++k) {
      if (!used_su[k] && singleton_ok[k * scn.num_sbs() + station]) {
        candidates.push_back(k);
      }
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      const double ga = scn.gain_su_sbs(a, station);
      const double gb = scn.gain_su_sbs(b, station);
      if (ga != gb) return ga > gb;
      return a < b;
    });

    for (int k : candidates) {
      current.assignment[station] = k;
      // A partial association that already violates a threshold can never
      // recover: adding pairs only adds interference.
      if (is_feasible(scn, current)) {
        used_su[k] = 1;
        run(station + 1, value_so_far + pair_value(k, station));
        used_su[k] = 0;
      }
      current.assignment[station] = std::nullopt;
    }
    run(station + 1, value_so_far);  // station stays idle
  }
};

}  // namespace

SolveResult solve_bnb(const Scenario& scn, std::span<const double> weights,
                      const ExactOptions& options) {
  check_weights(weights, scn.num_su(), scn.num_sbs());
  BranchAndBoundSearch search(scn, weights, !options.disable_bound_pruning);
  search.run(0, 0.0);
  return {search.best.association, search.best.objective, search.nodes,
          Solver::kBranchAndBound};
}

}  // namespace hetsnet
