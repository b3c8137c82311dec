#include "hetsnet/greedy.hpp"

#include <limits>
#include <stdexcept>

namespace hetsnet {

PriorityMatrix build_priority(const Scenario& scn,
                              std::span<const double> weights) {
  const int num_su = scn.num_su();
  const int num_sbs = scn.num_sbs();
  if (!weights.empty() &&
      weights.size() != static_cast<std::size_t>(num_su) * num_sbs) {
    throw std::invalid_argument("weight vector must have num_su*num_sbs entries");
  }

  PriorityMatrix pm;
  pm.ratio = Matrix(num_su, num_sbs);
  pm.dead_cell.assign(static_cast<std::size_t>(num_su) * num_sbs, 0);
  pm.eliminated_row.assign(num_su, 0);
  pm.eliminated_col.assign(num_sbs, 0);

  for (int n = 0; n < num_sbs; ++n) {
    double column_sum = 0.0;
    for (int k = 0; k < num_su; ++k) column_sum += scn.gain_su_sbs(k, n);
    for (int k = 0; k < num_su; ++k) {
      const double own = scn.gain_su_sbs(k, n);
      const double others = column_sum - own;
      const double scale = weights.empty() ? 1.0 : weights[k * num_sbs + n];
      if (others > 0.0) {
        pm.ratio(k, n) = scale * own / others;
      } else {
        pm.ratio(k, n) = std::numeric_limits<double>::infinity();
        // A single user has no competitors and just ranks at the extreme;
        // several users with a zero competitor sum means the column is
        // degenerate and the cell is unusable.
        if (num_su > 1) pm.dead_cell[k * num_sbs + n] = 1;
      }
    }
  }
  return pm;
}

namespace {

SolveResult greedy_pass(const Scenario& scn, std::span<const double> weights,
                        SelectionOrder order, Solver tag, GreedyStats* stats) {
  const int num_su = scn.num_su();
  const int num_sbs = scn.num_sbs();
  PriorityMatrix pm = build_priority(scn, weights);

  Association assoc(num_sbs);
  std::vector<char> visited(static_cast<std::size_t>(num_su) * num_sbs, 0);
  GreedyStats local;
  GreedyStats& st = stats ? *stats : local;
  st = {};

  const bool smallest = order == SelectionOrder::kSmallestFirst;
  for (int step = 0; step < num_su * num_sbs; ++step) {
    // Extreme remaining cell; ties resolve in column-major order (station,
    // then user), matching a column-major arg-extremum scan.
    int best_k = -1;
    int best_n = -1;
    double best_value = 0.0;
    for (int n = 0; n < num_sbs; ++n) {
      if (pm.eliminated_col[n]) continue;
      for (int k = 0; k < num_su; ++k) {
        const std::size_t cell = static_cast<std::size_t>(k) * num_sbs + n;
        if (pm.eliminated_row[k] || visited[cell] || pm.dead_cell[cell]) {
          continue;
        }
        ++st.cells_scanned;
        const double value = pm.ratio(k, n);
        const bool better =
            best_k < 0 || (smallest ? value < best_value : value > best_value);
        if (better) {
          best_k = k;
          best_n = n;
          best_value = value;
        }
      }
    }
    if (best_k < 0) break;  // every cell visited or retired

    ++st.iterations;
    visited[static_cast<std::size_t>(best_k) * num_sbs + best_n] = 1;
    assoc.assignment[best_n] = best_k;
    ++st.sinr_evaluations;
    if (evaluate(scn, assoc).feasible) {
      pm.eliminated_row[best_k] = 1;
      pm.eliminated_col[best_n] = 1;
    } else {
      assoc.assignment[best_n] = std::nullopt;
    }
  }

  return {assoc, association_objective(assoc, weights), st.iterations, tag};
}

}  // namespace

SolveResult solve_umrcg(const Scenario& scn, SelectionOrder order,
                        GreedyStats* stats) {
  return greedy_pass(scn, {}, order, Solver::kUmrcg, stats);
}

SolveResult solve_wmrcg(const Scenario& scn, std::span<const double> weights,
                        SelectionOrder order, GreedyStats* stats) {
  if (weights.empty()) {
    throw std::invalid_argument("weighted greedy requires a weight vector");
  }
  return greedy_pass(scn, weights, order, Solver::kWmrcg, stats);
}

}  // namespace hetsnet
