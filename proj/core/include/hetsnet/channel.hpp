#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hetsnet/matrix.hpp"
#include "hetsnet/rng.hpp"

namespace hetsnet {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Vec2&) const = default;
};

inline double db_to_linear(double value_db) {
  return std::pow(10.0, value_db / 10.0);
}

inline double linear_to_db(double value) { return 10.0 * std::log10(value); }

// Network-level parameters for one cell. Transmit powers are SNRs already
// normalized by the receiver noise power, so no absolute wattage appears
// anywhere in the model.
struct NetworkConfig {
  int num_su = 10;               // small-cell users (K)
  int num_sbs = 10;              // small-cell base stations (N)
  double cell_radius_m = 20.0;   // placement disk radius
  double path_loss_exp = 4.0;
  double ref_distance_m = 1.0;   // far-field reference distance
  double sbs_snr_db = 20.0;      // per-SBS transmit SNR
  double mbs_snr_db = 40.0;      // macro BS transmit SNR
  double su_threshold_db = 1.0;  // SINR floor for an associated SU
  double mu_threshold_db = 0.0;  // SINR floor for the macro user
  std::uint64_t seed = 1;

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;

  bool operator==(const NetworkConfig&) const = default;
};

// One sampled network realization. The gain matrix has num_su+1 rows and
// num_sbs+1 columns: row 0 is the macro user, column 0 the macro BS, so
// gains(k+1, n+1) is the link gain between SU k and SBS n with path loss
// and Rayleigh fading applied. All gains are linear power ratios.
struct Scenario {
  NetworkConfig config;
  Vec2 mbs_pos;                // always the origin
  Vec2 mu_pos;
  std::vector<Vec2> sbs_pos;
  std::vector<Vec2> su_pos;
  Matrix gains;
  double sbs_snr = 0.0;        // linear
  double mbs_snr = 0.0;        // linear
  double su_threshold = 0.0;   // linear
  double mu_threshold = 0.0;   // linear

  int num_su() const { return static_cast<int>(su_pos.size()); }
  int num_sbs() const { return static_cast<int>(sbs_pos.size()); }

  double gain_su_sbs(int su, int sbs) const { return gains(su + 1, sbs + 1); }
  double gain_su_mbs(int su) const { return gains(su + 1, 0); }
  double gain_mu_sbs(int sbs) const { return gains(0, sbs + 1); }
  double gain_mu_mbs() const { return gains(0, 0); }

  // FNV-1a over the matrix dimensions and raw gain bits. Lets paired
  // experiment records prove they saw the same realization.
  std::uint64_t gain_hash() const;

  bool operator==(const Scenario&) const = default;
};

// Distance-based gain factor (ref/d)^alpha, with d clamped below by ref:
// the far-field model is not valid closer than the reference distance.
double path_gain(double distance, double ref_distance, double exponent);

// Area-uniform points on the disk of the given radius centered on origin.
std::vector<Vec2> sample_disk_points(int count, double radius, Rng& rng);

// SBS placement only; lets a caller hold base stations fixed while users
// and fading are redrawn.
std::vector<Vec2> sample_sbs_positions(const NetworkConfig& cfg, Rng& rng);

// Full realization: SBS positions, then user positions, then fading.
Scenario sample_scenario(const NetworkConfig& cfg, Rng& rng);

// Same draw sequence as sample_scenario minus the SBS placement.
Scenario sample_scenario_with_sbs(const NetworkConfig& cfg,
                                  std::vector<Vec2> sbs_pos, Rng& rng);

// JSON fixture form: config echoed, positions as [x, y] pairs, gains as a
// row-major array of linear values.
std::string scenario_to_json(const Scenario& scn);
Scenario scenario_from_json(const std::string& text);

}  // namespace hetsnet
