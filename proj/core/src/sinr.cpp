#include "hetsnet/sinr.hpp"

#include <stdexcept>

namespace hetsnet {

std::vector<std::pair<int, int>> Association::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(assignment.size());
  for (int n = 0; n < num_sbs(); ++n) {
    if (assignment[n]) out.emplace_back(*assignment[n], n);
  }
  return out;
}

bool Association::one_to_one(int num_su) const {
  std::vector<char> seen(num_su, 0);
  for (const auto& su : assignment) {
    if (!su) continue;
    if (*su < 0 || *su >= num_su) return false;
    if (seen[*su]) return false;
    seen[*su] = 1;
  }
  return true;
}

SinrReport evaluate(const Scenario& scn, const Association& assoc) {
  const int num_su = scn.num_su();
  const int num_sbs = scn.num_sbs();
  if (assoc.num_sbs() != num_sbs) {
    throw std::invalid_argument("association size does not match scenario");
  }
  if (!assoc.one_to_one(num_su)) {
    throw std::invalid_argument("association is not one-to-one");
  }

  // Total SBS power seen by each receiver (row 0 = macro user); each pair's
  // own signal is subtracted back out below.
  std::vector<double> active_power(num_su + 1, 0.0);
  for (int n = 0; n < num_sbs; ++n) {
    if (!assoc.assignment[n]) continue;
    for (int row = 0; row <= num_su; ++row) {
      active_power[row] += scn.sbs_snr * scn.gains(row, n + 1);
    }
  }

  SinrReport report;
  report.mu_sinr =
      scn.mbs_snr * scn.gain_mu_mbs() / (1.0 + active_power[0]);
  bool feasible = report.mu_sinr >= scn.mu_threshold;

  for (int n = 0; n < num_sbs; ++n) {
    if (!assoc.assignment[n]) continue;
    const int k = *assoc.assignment[n];
    const double own = scn.sbs_snr * scn.gain_su_sbs(k, n);
    const double denom = 1.0 + scn.mbs_snr * scn.gain_su_mbs(k) +
                         (active_power[k + 1] - own);
    const double sinr = own / denom;
    report.su_sinr.push_back({k, n, sinr});
    feasible = feasible && sinr >= scn.su_threshold;
  }
  report.feasible = feasible;
  return report;
}

bool is_feasible(const Scenario& scn, const Association& assoc) {
  return evaluate(scn, assoc).feasible;
}

}  // namespace hetsnet
