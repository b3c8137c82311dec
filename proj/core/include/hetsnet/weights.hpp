#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "hetsnet/sinr.hpp"

namespace hetsnet {

enum class WeightMode {
  kPerSu,   // fairness between users
  kPerSbs,  // load balance between base stations
};

const char* weight_mode_name(WeightMode mode);

// Sliding-window association history and the fairness weights it induces.
// An entity associated in c of the buffered slots carries weight 1/(1+c),
// so untouched entities sit at weight 1 and busy ones decay toward 1/(T+1).
// The exported vector has one entry per (su, sbs) pair: in per-SU mode each
// user's weight is repeated across its base stations, in per-SBS mode the
// station weights repeat across users.
class WeightState {
public:
  WeightState(int window, WeightMode mode, int num_su, int num_sbs);

  // Successor state with the association pushed into the window. Pure; the
  // receiver is unchanged.
  [[nodiscard]] WeightState updated(const Association& assoc) const;

  std::span<const double> weight_vector() const { return weights_; }
  double pair_weight(int su, int sbs) const {
    return weights_[su * num_sbs_ + sbs];
  }

  int window() const { return window_; }
  WeightMode mode() const { return mode_; }
  int num_su() const { return num_su_; }
  int num_sbs() const { return num_sbs_; }
  int entity_count(int entity) const { return counts_[entity]; }
  const std::deque<Association>& history() const { return history_; }

private:
  int window_;
  WeightMode mode_;
  int num_su_;
  int num_sbs_;
  std::deque<Association> history_;  // at most window_ entries
  std::vector<int> counts_;          // per entity, from the buffer
  std::vector<double> weights_;      // num_su * num_sbs layout
};

// Jain fairness index (sum c)^2 / (m * sum c^2) over per-entity counts;
// 1 means perfectly even, 1/m maximally skewed. Empty or all-zero input
// carries no information and yields nullopt.
std::optional<double> jain_index(std::span<const std::int64_t> counts);

}  // namespace hetsnet
