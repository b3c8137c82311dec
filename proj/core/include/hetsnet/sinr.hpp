#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hetsnet/channel.hpp"

namespace hetsnet {

// Partial one-to-one matching between SUs and SBSs. assignment[n] holds
// the SU served by SBS n, or nullopt for an idle SBS. No SU may appear in
// more than one slot.
struct Association {
  std::vector<std::optional<int>> assignment;

  Association() = default;
  explicit Association(int num_sbs) : assignment(num_sbs) {}

  int num_sbs() const { return static_cast<int>(assignment.size()); }

  int associated_count() const {
    int count = 0;
    for (const auto& su : assignment) count += su.has_value();
    return count;
  }

  bool empty() const { return associated_count() == 0; }

  // (su, sbs) pairs in ascending SBS order.
  std::vector<std::pair<int, int>> pairs() const;

  bool one_to_one(int num_su) const;

  bool operator==(const Association&) const = default;
};

struct SinrEntry {
  int su = 0;
  int sbs = 0;
  double sinr = 0.0;  // linear
};

struct SinrReport {
  std::vector<SinrEntry> su_sinr;  // one entry per associated pair, ascending SBS
  double mu_sinr = 0.0;            // linear
  bool feasible = false;
};

// Per-link SINRs for a candidate association, and whether every associated
// SU meets the SU threshold while the macro user meets its own. Threshold
// comparisons use >= with no slack; ties count as feasible. Throws
// std::invalid_argument when the association is malformed.
SinrReport evaluate(const Scenario& scn, const Association& assoc);

bool is_feasible(const Scenario& scn, const Association& assoc);

}  // namespace hetsnet
