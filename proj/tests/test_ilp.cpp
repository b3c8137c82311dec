#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "hetsnet/ilp.hpp"
#include "hetsnet/verify.hpp"

using namespace hetsnet;
using test::make_scenario;

TEST_SUITE_BEGIN("ilp");

namespace {

// Right side of the deactivation bound for pair (k, n) under the binary
// assignment encoded in `bits`: threshold + macro leakage + cross
// interference from every selected other-user/other-station pair.
double bound_rhs(const Scenario& scn, int k, int n, unsigned bits) {
  const int num_sbs = scn.num_sbs();
  double value = scn.su_threshold +
                 scn.su_threshold * scn.mbs_snr * scn.gain_su_mbs(k);
  for (int k2 = 0; k2 < scn.num_su(); ++k2) {
    if (k2 == k) continue;
    for (int n2 = 0; n2 < num_sbs; ++n2) {
      if (n2 == n) continue;
      if (bits & (1u << (k2 * num_sbs + n2))) {
        value += scn.su_threshold * scn.sbs_snr * scn.gain_su_sbs(k, n2);
      }
    }
  }
  return value;
}

}  // namespace

TEST_CASE("big-M closed form equals the exhaustive bound maximum") {
  const Scenario scn = test::fixture_three_by_three();
  const double closed = compute_big_m(scn);

  double exhaustive = 0.0;
  for (int k = 0; k < 3; ++k) {
    for (int n = 0; n < 3; ++n) {
      for (unsigned bits = 0; bits < (1u << 9); ++bits) {
        exhaustive = std::max(exhaustive, bound_rhs(scn, k, n, bits));
      }
    }
  }
  CHECK(closed == doctest::Approx(exhaustive).epsilon(1e-12));

  // sufficiency: no pair and assignment ever needs more than the closed form
  for (int k = 0; k < 3; ++k) {
    for (int n = 0; n < 3; ++n) {
      for (unsigned bits = 0; bits < (1u << 9); ++bits) {
        CHECK(bound_rhs(scn, k, n, bits) <= closed * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("big-M degenerate forms") {
  // single user: no co-channel term survives
  const Scenario lone = make_scenario(1, 2, {1.0, 0.1, 0.2, 0.4, 0.5, 0.3},
                                      10.0, 5.0, 2.0, 0.5);
  CHECK(compute_big_m(lone) ==
        doctest::Approx(2.0 * (1.0 + 5.0 * lone.gain_su_mbs(0))));

  // zero SU threshold scales every term to zero
  Scenario zero_beta = test::fixture_three_by_three();
  zero_beta.su_threshold = 0.0;
  CHECK(compute_big_m(zero_beta) == 0.0);
}

TEST_CASE("instance dimensions") {
  const Scenario sized = make_scenario(
      2, 3, std::vector<double>(3 * 4, 0.25), 10.0, 5.0, 1.0, 0.5);
  const IlpInstance inst = build_instance(sized);
  CHECK(inst.num_rows() == 2 + 3 + 6 + 1);  // K + N + K*N + 1
  CHECK(inst.num_cols() == 6);
  CHECK(inst.column(1, 2) == 5);
  CHECK(inst.pair_of(5) == std::pair<int, int>{1, 2});
}

TEST_CASE("exactly the matching rows are 0/1 valued") {
  const Scenario scn = test::fixture_three_by_three();
  const IlpInstance inst = build_instance(scn);
  int binary_rows = 0;
  for (int row = 0; row < inst.num_rows(); ++row) {
    bool all01 = true;
    for (int col = 0; col < inst.num_cols(); ++col) {
      const double v = inst.a(row, col);
      all01 = all01 && (v == 0.0 || v == 1.0);
    }
    binary_rows += all01;
  }
  CHECK(binary_rows == 3 + 3);
}

TEST_CASE("vanishing thresholds make every matching matrix-feasible") {
  Scenario scn = test::fixture_three_by_three();
  scn.su_threshold = 0.0;
  scn.mu_threshold = 0.0;
  const IlpInstance inst = build_instance(scn);

  // SINR rows collapse to own-column markers and the macro row to zero
  for (int col = 0; col < inst.num_cols(); ++col) {
    const int row = 3 + 3 + col;
    for (int c2 = 0; c2 < inst.num_cols(); ++c2) {
      CHECK(inst.a(row, c2) == (c2 == col ? 1.0 : 0.0));
    }
    CHECK(inst.a(inst.num_rows() - 1, col) == 0.0);
  }
  verify::for_each_matching(3, 3, [&](const Association& a) {
    CHECK(matrix_feasible(inst, a));
  });
}

TEST_CASE("macro-infeasible scenario refuses to build") {
  Scenario scn = test::fixture_two_by_two();
  scn.mu_threshold = 100.0;  // above mbs_snr * g00 = 5
  try {
    build_instance(scn);
    FAIL("expected MuInfeasibleError");
  } catch (const MuInfeasibleError& err) {
    CHECK(err.mu_link_snr() == doctest::Approx(5.0));
    CHECK(err.mu_threshold() == doctest::Approx(100.0));
  }
}

TEST_CASE("matrix check equals direct arithmetic on the 3x3 fixture") {
  const Scenario scn = test::fixture_three_by_three();
  const IlpInstance inst = build_instance(scn);
  int matchings = 0;
  verify::for_each_matching(3, 3, [&](const Association& a) {
    CHECK(matrix_feasible(inst, a) == is_feasible(scn, a));
    ++matchings;
  });
  CHECK(matchings == 34);
  CHECK(matrix_feasible(inst, Association(3)));  // empty always passes
}

TEST_CASE("matrix check equals direct arithmetic on random scenarios") {
  // exhaustive over every matching for small random scenarios
  int scenarios_used = 0;
  for (std::uint64_t seed = 1; scenarios_used < 25 && seed < 200; ++seed) {
    const Scenario scn = test::random_scenario(seed, 4, 4);
    if (!(scn.mbs_snr * scn.gain_mu_mbs() > scn.mu_threshold)) continue;
    ++scenarios_used;
    const IlpInstance inst = build_instance(scn);
    verify::for_each_matching(scn.num_su(), scn.num_sbs(),
                              [&](const Association& a) {
                                CHECK(matrix_feasible(inst, a) ==
                                      is_feasible(scn, a));
                              });
  }
  CHECK(scenarios_used == 25);

  // and spot checks on larger random (scenario, association) pairs
  int pairs_checked = 0;
  for (std::uint64_t seed = 300; pairs_checked < 1200; ++seed) {
    const Scenario scn = test::random_scenario(seed, 6, 6);
    if (!(scn.mbs_snr * scn.gain_mu_mbs() > scn.mu_threshold)) continue;
    const IlpInstance inst = build_instance(scn);
    Rng rng = Rng::substream(seed, 0xa550c);
    for (int i = 0; i < 20; ++i) {
      Association a(scn.num_sbs());
      std::vector<char> used(scn.num_su(), 0);
      for (int n = 0; n < scn.num_sbs(); ++n) {
        const int pick =
            static_cast<int>(rng.next_u64() % (2 * scn.num_su()));
        if (pick < scn.num_su() && !used[pick]) {
          a.assignment[n] = pick;
          used[pick] = 1;
        }
      }
      CHECK(matrix_feasible(inst, a) == is_feasible(scn, a));
      ++pairs_checked;
    }
  }
  CHECK(pairs_checked >= 1200);
}

TEST_CASE("degenerate sizes keep the equivalence") {
  // one user and one station leave no cross terms to normalize by
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng = Rng::substream(seed, 0xde9eULL);
    NetworkConfig cfg;
    cfg.num_su = (seed % 2) ? 1 : 3;
    cfg.num_sbs = (seed % 2) ? 3 : 1;
    cfg.seed = seed;
    const Scenario scn = sample_scenario(cfg, rng);
    if (!(scn.mbs_snr * scn.gain_mu_mbs() > scn.mu_threshold)) continue;
    const IlpInstance inst = build_instance(scn);
    verify::for_each_matching(cfg.num_su, cfg.num_sbs,
                              [&](const Association& a) {
                                CHECK(matrix_feasible(inst, a) ==
                                      is_feasible(scn, a));
                              });
  }
}

TEST_CASE("lp export carries the whole system") {
  const Scenario scn = test::fixture_two_by_two();
  const IlpInstance inst = build_instance(scn);
  std::ostringstream out;
  write_lp(inst, out);
  const std::string text = out.str();
  CHECK(text.find("Maximize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("sbs_1:") != std::string::npos);
  CHECK(text.find("su_1:") != std::string::npos);
  CHECK(text.find("sinr_1_1:") != std::string::npos);
  CHECK(text.find("mu:") != std::string::npos);
  CHECK(text.find("Binaries") != std::string::npos);
  CHECK(text.find("x_1_1") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
}

TEST_SUITE_END();
