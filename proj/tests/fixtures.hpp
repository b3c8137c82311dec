#pragma once

#include <cmath>
#include <vector>

#include "hetsnet/channel.hpp"
#include "hetsnet/exact.hpp"
#include "hetsnet/rng.hpp"
#include "hetsnet/sinr.hpp"

namespace hetsnet::test {

// Builds a scenario directly from linear parameters and a row-major gain
// table (row 0 = macro user, column 0 = macro BS). Positions are synthetic;
// the solvers only ever look at the gain matrix.
inline Scenario make_scenario(int num_su, int num_sbs,
                              const std::vector<double>& gains,
                              double sbs_snr, double mbs_snr,
                              double su_threshold, double mu_threshold) {
  Scenario scn;
  scn.config.num_su = num_su;
  scn.config.num_sbs = num_sbs;
  scn.config.sbs_snr_db = linear_to_db(sbs_snr);
  scn.config.mbs_snr_db = linear_to_db(mbs_snr);
  scn.config.su_threshold_db = linear_to_db(su_threshold);
  scn.config.mu_threshold_db = linear_to_db(mu_threshold);
  scn.mu_pos = {1.0, 0.0};
  scn.sbs_pos.assign(num_sbs, {2.0, 0.0});
  scn.su_pos.assign(num_su, {3.0, 0.0});
  scn.gains = Matrix(num_su + 1, num_sbs + 1);
  for (int r = 0; r <= num_su; ++r) {
    for (int c = 0; c <= num_sbs; ++c) {
      scn.gains(r, c) = gains[r * (num_sbs + 1) + c];
    }
  }
  scn.sbs_snr = sbs_snr;
  scn.mbs_snr = mbs_snr;
  scn.su_threshold = su_threshold;
  scn.mu_threshold = mu_threshold;
  return scn;
}

// Two users, two stations. With the full diagonal matching:
//   SU0 on SBS0: 10*0.8 / (1 + 5*0.1 + 10*0.3) = 8/4.5  = 16/9
//   SU1 on SBS1: 10*0.6 / (1 + 5*0.2 + 10*0.4) = 6/6    = 1
//   MU:          5*1.0  / (1 + 10*(0.2+0.1))   = 5/4    = 1.25
// so the diagonal matching is feasible (thresholds 1 and 0.5) while the
// crossed matching fails on SU0 (3/9.5) and SU1 (4/8).
inline Scenario fixture_two_by_two() {
  return make_scenario(2, 2,
                       {1.0, 0.2, 0.1,    //
                        0.1, 0.8, 0.3,    //
                        0.2, 0.4, 0.6},
                       /*sbs_snr=*/10.0, /*mbs_snr=*/5.0,
                       /*su_threshold=*/1.0, /*mu_threshold=*/0.5);
}

// Three users, three stations; used for exhaustive checks (34 matchings).
inline Scenario fixture_three_by_three() {
  return make_scenario(3, 3,
                       {1.0, 0.15, 0.05, 0.1,    //
                        0.05, 0.9, 0.2, 0.1,     //
                        0.1, 0.3, 0.7, 0.25,     //
                        0.02, 0.1, 0.15, 0.5},
                       /*sbs_snr=*/10.0, /*mbs_snr=*/4.0,
                       /*su_threshold=*/1.2, /*mu_threshold=*/0.8);
}

inline Scenario random_scenario(std::uint64_t seed, int max_su, int max_sbs) {
  Rng rng = Rng::substream(seed, 0x5ce11a37ULL);
  NetworkConfig cfg;
  cfg.num_su = 1 + static_cast<int>(rng.next_u64() % max_su);
  cfg.num_sbs = 1 + static_cast<int>(rng.next_u64() % max_sbs);
  cfg.seed = seed;
  return sample_scenario(cfg, rng);
}

// A solver's answer is either feasible outright, or the scenario is
// macro-infeasible (even the idle network fails the MU threshold) and the
// answer is the flagged empty association.
inline bool result_ok(const Scenario& scn, const SolveResult& r) {
  if (is_feasible(scn, r.association)) return true;
  return r.association.empty() &&
         !is_feasible(scn, Association(scn.num_sbs()));
}

// Per-user weights of the form 1/(1+c) laid out across stations, the shape
// the weighted solvers consume.
inline std::vector<double> per_su_weights(const std::vector<double>& user_w,
                                          int num_sbs) {
  std::vector<double> w;
  w.reserve(user_w.size() * num_sbs);
  for (double value : user_w) {
    for (int n = 0; n < num_sbs; ++n) w.push_back(value);
  }
  return w;
}

}  // namespace hetsnet::test
