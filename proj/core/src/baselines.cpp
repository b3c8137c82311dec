#include "hetsnet/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace hetsnet {

SolveResult solve_max_sinr(const Scenario& scn) {
  const int num_su = scn.num_su();
  const int num_sbs = scn.num_sbs();

  // Users in descending order of their strongest gain, each taking one
  // shot at its best still-free station.
  std::vector<double> best_gain(num_su, 0.0);
  for (int k = 0; k < num_su; ++k) {
    for (int n = 0; n < num_sbs; ++n) {
      best_gain[k] = std::max(best_gain[k], scn.gain_su_sbs(k, n));
    }
  }
  std::vector<int> order(num_su);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (best_gain[a] != best_gain[b]) return best_gain[a] > best_gain[b];
    return a < b;
  });

  Association assoc(num_sbs);
  std::vector<char> used_sbs(num_sbs, 0);
  std::uint64_t attempts = 0;
  for (int k : order) {
    int target = -1;
    for (int n = 0; n < num_sbs; ++n) {
      if (used_sbs[n]) continue;
      if (target < 0 || scn.gain_su_sbs(k, n) > scn.gain_su_sbs(k, target)) {
        target = n;
      }
    }
    if (target < 0) break;  // every station taken
    assoc.assignment[target] = k;
    ++attempts;
    if (is_feasible(scn, assoc)) {
      used_sbs[target] = 1;
    } else {
      assoc.assignment[target] = std::nullopt;
    }
  }
  return {assoc, static_cast<double>(assoc.associated_count()), attempts,
          Solver::kMaxSinr};
}

SolveResult solve_min_interference(const Scenario& scn) {
  const int num_su = scn.num_su();
  const int num_sbs = scn.num_sbs();

  // All pairs ranked by the gain the user would collect from every other
  // station, i.e. its interference if all of them were to transmit.
  std::vector<double> row_sum(num_su, 0.0);
  for (int k = 0; k < num_su; ++k) {
    for (int n = 0; n < num_sbs; ++n) row_sum[k] += scn.gain_su_sbs(k, n);
  }
  struct Candidate {
    double predicted_interference;
    int sbs;
    int su;
  };
  std::vector<Candidate> ranked;
  ranked.reserve(static_cast<std::size_t>(num_su) * num_sbs);
  for (int n = 0; n < num_sbs; ++n) {
    for (int k = 0; k < num_su; ++k) {
      ranked.push_back({row_sum[k] - scn.gain_su_sbs(k, n), n, k});
    }
  }
  std::sort(ranked.begin(), ranked.end(), [](const Candidate& a,
                                             const Candidate& b) {
    if (a.predicted_interference != b.predicted_interference) {
      return a.predicted_interference < b.predicted_interference;
    }
    if (a.sbs != b.sbs) return a.sbs < b.sbs;
    return a.su < b.su;
  });

  // Same one-tentative-per-user skeleton as max-SINR: walking the ranked
  // list, each user's first reachable pair is its only shot.
  Association assoc(num_sbs);
  std::vector<char> tried_su(num_su, 0), used_sbs(num_sbs, 0);
  std::uint64_t attempts = 0;
  for (const Candidate& c : ranked) {
    if (tried_su[c.su] || used_sbs[c.sbs]) continue;
    tried_su[c.su] = 1;
    assoc.assignment[c.sbs] = c.su;
    ++attempts;
    if (is_feasible(scn, assoc)) {
      used_sbs[c.sbs] = 1;
    } else {
      assoc.assignment[c.sbs] = std::nullopt;
    }
  }
  return {assoc, static_cast<double>(assoc.associated_count()), attempts,
          Solver::kMinInterference};
}

}  // namespace hetsnet
