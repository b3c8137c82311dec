#include "hetsnet/weights.hpp"

#include <stdexcept>

namespace hetsnet {

const char* weight_mode_name(WeightMode mode) {
  return mode == WeightMode::kPerSu ? "per_su" : "per_sbs";
}

WeightState::WeightState(int window, WeightMode mode, int num_su, int num_sbs)
    : window_(window),
      mode_(mode),
      num_su_(num_su),
      num_sbs_(num_sbs),
      counts_(mode == WeightMode::kPerSu ? num_su : num_sbs, 0),
      weights_(static_cast<std::size_t>(num_su) * num_sbs, 1.0) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  if (num_su < 1 || num_sbs < 1) {
    throw std::invalid_argument("entity counts must be at least 1");
  }
}

WeightState WeightState::updated(const Association& assoc) const {
  if (assoc.num_sbs() != num_sbs_) {
    throw std::invalid_argument("association size does not match state");
  }
  WeightState next(*this);
  next.history_.push_back(assoc);
  if (static_cast<int>(next.history_.size()) > window_) {
    next.history_.pop_front();
  }

  std::fill(next.counts_.begin(), next.counts_.end(), 0);
  for (const Association& slot : next.history_) {
    for (int n = 0; n < num_sbs_; ++n) {
      if (!slot.assignment[n]) continue;
      ++next.counts_[mode_ == WeightMode::kPerSu ? *slot.assignment[n] : n];
    }
  }

  for (int k = 0; k < num_su_; ++k) {
    for (int n = 0; n < num_sbs_; ++n) {
      const int count = next.counts_[mode_ == WeightMode::kPerSu ? k : n];
      next.weights_[static_cast<std::size_t>(k) * num_sbs_ + n] =
          1.0 / (1.0 + count);
    }
  }
  return next;
}

std::optional<double> jain_index(std::span<const std::int64_t> counts) {
  if (counts.empty()) return std::nullopt;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::int64_t c : counts) {
    sum += static_cast<double>(c);
    sum_sq += static_cast<double>(c) * static_cast<double>(c);
  }
  if (sum_sq == 0.0) return std::nullopt;  // no associations at all
  return (sum * sum) / (static_cast<double>(counts.size()) * sum_sq);
}

}  // namespace hetsnet
