#include "hetsnet/channel.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace hetsnet {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

void NetworkConfig::validate() const {
  require(num_su >= 1, "num_su must be at least 1");
  require(num_sbs >= 1, "num_sbs must be at least 1");
  require(cell_radius_m > 0.0, "cell_radius_m must be positive");
  require(path_loss_exp > 0.0, "path_loss_exp must be positive");
  require(ref_distance_m > 0.0, "ref_distance_m must be positive");
  for (double db : {sbs_snr_db, mbs_snr_db, su_threshold_db, mu_threshold_db}) {
    require(std::isfinite(db), "dB parameters must be finite");
  }
}

double path_gain(double distance, double ref_distance, double exponent) {
  const double d = std::max(distance, ref_distance);
  return std::pow(ref_distance / d, exponent);
}

std::vector<Vec2> sample_disk_points(int count, double radius, Rng& rng) {
  std::vector<Vec2> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) {
    // radius = R*sqrt(u) gives area-uniform density without rejection.
    const double r = radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi_v<double> * rng.uniform();
    points.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return points;
}

std::vector<Vec2> sample_sbs_positions(const NetworkConfig& cfg, Rng& rng) {
  cfg.validate();
  return sample_disk_points(cfg.num_sbs, cfg.cell_radius_m, rng);
}

namespace {

double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

Scenario sample_scenario_with_sbs(const NetworkConfig& cfg,
                                  std::vector<Vec2> sbs_pos, Rng& rng) {
  cfg.validate();
  if (static_cast<int>(sbs_pos.size()) != cfg.num_sbs) {
    throw std::invalid_argument("sbs position count does not match config");
  }

  Scenario scn;
  scn.config = cfg;
  scn.mbs_pos = {0.0, 0.0};
  scn.sbs_pos = std::move(sbs_pos);
  scn.mu_pos = sample_disk_points(1, cfg.cell_radius_m, rng).front();
  scn.su_pos = sample_disk_points(cfg.num_su, cfg.cell_radius_m, rng);

  scn.sbs_snr = db_to_linear(cfg.sbs_snr_db);
  scn.mbs_snr = db_to_linear(cfg.mbs_snr_db);
  scn.su_threshold = db_to_linear(cfg.su_threshold_db);
  scn.mu_threshold = db_to_linear(cfg.mu_threshold_db);

  // Row 0 is the macro user, column 0 the macro BS; fading is drawn
  // row-major so the draw sequence is pinned down by the seed alone.
  const int rows = cfg.num_su + 1;
  const int cols = cfg.num_sbs + 1;
  scn.gains = Matrix(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Vec2 rx = (r == 0) ? scn.mu_pos : scn.su_pos[r - 1];
    for (int c = 0; c < cols; ++c) {
      const Vec2 tx = (c == 0) ? scn.mbs_pos : scn.sbs_pos[c - 1];
      const auto [re, im] = rng.normal_pair();
      const double fading_power = 0.5 * (re * re + im * im);
      scn.gains(r, c) =
          fading_power *
          path_gain(distance(rx, tx), cfg.ref_distance_m, cfg.path_loss_exp);
    }
  }
  return scn;
}

Scenario sample_scenario(const NetworkConfig& cfg, Rng& rng) {
  return sample_scenario_with_sbs(cfg, sample_sbs_positions(cfg, rng), rng);
}

std::uint64_t Scenario::gain_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(gains.rows());
  mix(gains.cols());
  for (double g : gains.data()) mix(std::bit_cast<std::uint64_t>(g));
  return h;
}

namespace {

nlohmann::json vec2_json(const Vec2& v) {
  return nlohmann::json::array({v.x, v.y});
}

Vec2 vec2_from(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

std::string scenario_to_json(const Scenario& scn) {
  nlohmann::json j;
  j["config"] = {
      {"num_su", scn.config.num_su},
      {"num_sbs", scn.config.num_sbs},
      {"cell_radius_m", scn.config.cell_radius_m},
      {"path_loss_exp", scn.config.path_loss_exp},
      {"ref_distance_m", scn.config.ref_distance_m},
      {"sbs_snr_db", scn.config.sbs_snr_db},
      {"mbs_snr_db", scn.config.mbs_snr_db},
      {"su_threshold_db", scn.config.su_threshold_db},
      {"mu_threshold_db", scn.config.mu_threshold_db},
      {"seed", scn.config.seed},
  };
  j["positions"]["mbs"] = vec2_json(scn.mbs_pos);
  j["positions"]["mu"] = vec2_json(scn.mu_pos);
  auto& sbs = j["positions"]["sbs"] = nlohmann::json::array();
  for (const Vec2& p : scn.sbs_pos) sbs.push_back(vec2_json(p));
  auto& su = j["positions"]["su"] = nlohmann::json::array();
  for (const Vec2& p : scn.su_pos) su.push_back(vec2_json(p));
  j["gains"] = scn.gains.data();  // row-major, (num_su+1) x (num_sbs+1)
  j["sbs_snr"] = scn.sbs_snr;
  j["mbs_snr"] = scn.mbs_snr;
  j["su_threshold"] = scn.su_threshold;
  j["mu_threshold"] = scn.mu_threshold;
  return j.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Scenario scn;
  const auto& c = j.at("config");
  scn.config.num_su = c.at("num_su").get<int>();
  scn.config.num_sbs = c.at("num_sbs").get<int>();
  scn.config.cell_radius_m = c.at("cell_radius_m").get<double>();
  scn.config.path_loss_exp = c.at("path_loss_exp").get<double>();
  scn.config.ref_distance_m = c.at("ref_distance_m").get<double>();
  scn.config.sbs_snr_db = c.at("sbs_snr_db").get<double>();
  scn.config.mbs_snr_db = c.at("mbs_snr_db").get<double>();
  scn.config.su_threshold_db = c.at("su_threshold_db").get<double>();
  scn.config.mu_threshold_db = c.at("mu_threshold_db").get<double>();
  scn.config.seed = c.at("seed").get<std::uint64_t>();
  scn.config.validate();

  const auto& pos = j.at("positions");
  scn.mbs_pos = vec2_from(pos.at("mbs"));
  scn.mu_pos = vec2_from(pos.at("mu"));
  for (const auto& p : pos.at("sbs")) scn.sbs_pos.push_back(vec2_from(p));
  for (const auto& p : pos.at("su")) scn.su_pos.push_back(vec2_from(p));

  const auto gains = j.at("gains").get<std::vector<double>>();
  const std::size_t rows = scn.su_pos.size() + 1;
  const std::size_t cols = scn.sbs_pos.size() + 1;
  if (gains.size() != rows * cols) {
    throw std::invalid_argument("gain array size does not match positions");
  }
  scn.gains = Matrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
      scn.gains(r, cidx) = gains[r * cols + cidx];
    }
  }
  scn.sbs_snr = j.at("sbs_snr").get<double>();
  scn.mbs_snr = j.at("mbs_snr").get<double>();
  scn.su_threshold = j.at("su_threshold").get<double>();
  scn.mu_threshold = j.at("mu_threshold").get<double>();
  return scn;
}

}  // namespace hetsnet
