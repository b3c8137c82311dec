#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hetsnet/channel.hpp"

using namespace hetsnet;

TEST_SUITE_BEGIN("channel");

TEST_CASE("db_to_linear definition") {
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
  CHECK(db_to_linear(20.0) == doctest::Approx(100.0));
  CHECK(db_to_linear(40.0) == doctest::Approx(10000.0));
  CHECK(db_to_linear(-10.0) == doctest::Approx(0.1));
}

TEST_CASE("config validation rejects bad fields") {
  NetworkConfig cfg;
  cfg.validate();  // defaults are fine

  NetworkConfig bad = cfg;
  bad.num_su = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.cell_radius_m = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.path_loss_exp = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.sbs_snr_db = std::nan("");
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("path gain clamps below reference distance and decays") {
  CHECK(path_gain(0.0, 1.0, 4.0) == 1.0);
  CHECK(path_gain(1.0, 1.0, 4.0) == 1.0);
  CHECK(path_gain(2.0, 1.0, 4.0) == doctest::Approx(1.0 / 16.0));
  double previous = path_gain(1.0, 1.0, 4.0);
  for (double d = 1.5; d < 30.0; d += 0.5) {
    const double g = path_gain(d, 1.0, 4.0);
    CHECK(g < previous);
    previous = g;
  }
}

TEST_CASE("sampled scenario has the advertised shape") {
  NetworkConfig cfg;
  cfg.num_su = 10;
  cfg.num_sbs = 10;
  cfg.cell_radius_m = 20.0;
  cfg.path_loss_exp = 4.0;
  cfg.seed = 7;
  Rng rng(cfg.seed);
  const Scenario scn = sample_scenario(cfg, rng);

  CHECK(scn.num_su() == 10);
  CHECK(scn.num_sbs() == 10);
  CHECK(scn.gains.rows() == 11);
  CHECK(scn.gains.cols() == 11);
  CHECK(scn.mbs_pos == Vec2{0.0, 0.0});

  auto within = [&](const Vec2& p) {
    return std::hypot(p.x, p.y) <= cfg.cell_radius_m + 1e-12;
  };
  CHECK(within(scn.mu_pos));
  for (const Vec2& p : scn.sbs_pos) CHECK(within(p));
  for (const Vec2& p : scn.su_pos) CHECK(within(p));
  for (double g : scn.gains.data()) {
    CHECK(std::isfinite(g));
    CHECK(g >= 0.0);
  }
}

TEST_CASE("same config and seed reproduce the scenario bit for bit") {
  NetworkConfig cfg;
  cfg.num_su = 6;
  cfg.num_sbs = 4;
  cfg.seed = 1234;
  Rng a(cfg.seed);
  Rng b(cfg.seed);
  CHECK(sample_scenario(cfg, a) == sample_scenario(cfg, b));
}

TEST_CASE("co-located link with unit fading has unit gain") {
  // gain = |h|^2 * (d0/max(d, d0))^alpha, so at or below the clamp with
  // unit fading the gain is exactly 1
  CHECK(1.0 * path_gain(0.0, 1.0, 4.0) == 1.0);
  CHECK(1.0 * path_gain(0.3, 1.0, 4.0) == 1.0);
  CHECK(1.0 * path_gain(1.0, 1.0, 4.0) == 1.0);
}

TEST_CASE("disk sampling is area uniform") {
  Rng rng(99);
  const int samples = 20000;
  const double radius = 20.0;
  const auto points = sample_disk_points(samples, radius, rng);
  int inside = 0;
  for (const Vec2& p : points) {
    if (std::hypot(p.x, p.y) <= radius / std::sqrt(2.0)) ++inside;
  }
  const double fraction = static_cast<double>(inside) / samples;
  CHECK(fraction == doctest::Approx(0.5).epsilon(0.04));
  CHECK(std::abs(fraction - 0.5) <= 0.02);
}

TEST_CASE("fading power has unit mean") {
  Rng rng(42);
  const int draws = 20000;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) {
    const auto [re, im] = rng.normal_pair();
    sum += 0.5 * (re * re + im * im);
  }
  CHECK(std::abs(sum / draws - 1.0) <= 0.05);
}

TEST_CASE("fading mean holds inside a sampled gain matrix") {
  NetworkConfig cfg;
  cfg.num_su = 99;
  cfg.num_sbs = 99;
  cfg.seed = 11;
  Rng rng(cfg.seed);
  const Scenario scn = sample_scenario(cfg, rng);

  auto node = [&](int row) { return row == 0 ? scn.mu_pos : scn.su_pos[row - 1]; };
  auto station = [&](int col) {
    return col == 0 ? scn.mbs_pos : scn.sbs_pos[col - 1];
  };
  double sum = 0.0;
  for (int r = 0; r <= cfg.num_su; ++r) {
    for (int c = 0; c <= cfg.num_sbs; ++c) {
      const Vec2 a = node(r);
      const Vec2 b = station(c);
      const double pl = path_gain(std::hypot(a.x - b.x, a.y - b.y),
                                  cfg.ref_distance_m, cfg.path_loss_exp);
      sum += scn.gains(r, c) / pl;
    }
  }
  const double mean = sum / (100.0 * 100.0);
  CHECK(std::abs(mean - 1.0) <= 0.05);
}

TEST_CASE("json round trip is exact") {
  NetworkConfig cfg;
  cfg.num_su = 3;
  cfg.num_sbs = 5;
  cfg.seed = 77;
  Rng rng(cfg.seed);
  const Scenario scn = sample_scenario(cfg, rng);
  const Scenario back = scenario_from_json(scenario_to_json(scn));
  CHECK(scn == back);
}

TEST_CASE("committed fixture file still parses to the same scenario") {
  std::ifstream in(std::string(HETSNET_TEST_DATA_DIR) + "/scenario_2x2.json");
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Scenario scn = scenario_from_json(buffer.str());
  CHECK(scn.num_su() == 2);
  CHECK(scn.num_sbs() == 2);
  CHECK(scn.gain_su_sbs(0, 0) == 0.8);
  CHECK(scn.gain_mu_mbs() == 1.0);
  CHECK(scn.mbs_snr == 5.0);
  CHECK(scn.mu_threshold == 0.5);
}

TEST_CASE("substreams differ from each other") {
  Rng a = Rng::substream(5, 0);
  Rng b = Rng::substream(5, 1);
  bool any_diff = false;
  for (int i = 0; i < 8; ++i) any_diff |= a.next_u64() != b.next_u64();
  CHECK(any_diff);
}

TEST_SUITE_END();
