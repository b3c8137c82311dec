#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hetsnet/exact.hpp"
#include "hetsnet/sinr.hpp"

namespace hetsnet {

// Which end of the priority range the greedy pass consumes first. The
// relative-gain ratio reads as an inverse price, so both orders are
// plausible; smallest-first is the default and the sweep harness can
// report both.
enum class SelectionOrder {
  kSmallestFirst,
  kLargestFirst,
};

// Relative channel gain ratios: ratio(k, n) is SU k's gain at SBS n divided
// by the sum of the other users' gains at that SBS, optionally scaled by a
// fairness weight. Entries with an empty competitor sum are +infinity:
// with a single user they simply rank last (or first, largest-first) and
// stay selectable; a zero competitor sum with several users means a
// degenerate all-zero column and the cell is dropped from selection.
struct PriorityMatrix {
  Matrix ratio;                        // num_su x num_sbs
  std::vector<char> dead_cell;         // row-major, excluded from selection
  std::vector<char> eliminated_row;    // per SU
  std::vector<char> eliminated_col;    // per SBS
};

// Work counters for the greedy passes; cells_scanned grows by one per
// priority-cell comparison and sinr_evaluations by one per tentative
// association check.
struct GreedyStats {
  std::uint64_t iterations = 0;
  std::uint64_t cells_scanned = 0;
  std::uint64_t sinr_evaluations = 0;
};

// Per-column sums make this O(num_su * num_sbs). The optional weight
// vector has length num_su*num_sbs and scales each cell's numerator.
PriorityMatrix build_priority(const Scenario& scn,
                              std::span<const double> weights = {});

// Greedy pass over the relative-gain matrix: repeatedly select the extreme
// remaining cell, tentatively associate it, keep the pair only if every
// associated SU and the macro user still meet their thresholds, and then
// retire the pair's row and column. Visits every cell once.
SolveResult solve_umrcg(const Scenario& scn,
                        SelectionOrder order = SelectionOrder::kSmallestFirst,
                        GreedyStats* stats = nullptr);

// Same control flow over the weight-scaled matrix; the objective is the
// weight sum of the matched pairs. Weight upkeep across time slots belongs
// to the caller.
SolveResult solve_wmrcg(const Scenario& scn, std::span<const double> weights,
                        SelectionOrder order = SelectionOrder::kSmallestFirst,
                        GreedyStats* stats = nullptr);

}  // namespace hetsnet
