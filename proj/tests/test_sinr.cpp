#include <doctest.h>

#include "fixtures.hpp"
#include "hetsnet/sinr.hpp"
#include "hetsnet/verify.hpp"

using namespace hetsnet;
using test::make_scenario;

TEST_SUITE_BEGIN("sinr");

TEST_CASE("single link with silent macro") {
  // one pair, no macro power, no co-channel interference
  const Scenario scn = make_scenario(1, 1, {1.0, 0.0, 0.7, 0.5},
                                     /*sbs_snr=*/100.0, /*mbs_snr=*/0.0,
                                     /*su_threshold=*/1.0,
                                     /*mu_threshold=*/0.0);
  Association a(1);
  a.assignment[0] = 0;
  const SinrReport report = evaluate(scn, a);
  REQUIRE(report.su_sinr.size() == 1);
  CHECK(report.su_sinr[0].sinr == doctest::Approx(50.0));
  CHECK(report.feasible);
}

TEST_CASE("empty association leaves only the macro link") {
  const Scenario scn = make_scenario(1, 1, {1.0, 0.3, 0.7, 0.5},
                                     /*sbs_snr=*/10.0, /*mbs_snr=*/2.0,
                                     /*su_threshold=*/1.0,
                                     /*mu_threshold=*/1.0);
  const SinrReport report = evaluate(scn, Association(1));
  CHECK(report.mu_sinr == doctest::Approx(2.0));
  CHECK(report.su_sinr.empty());
  CHECK(report.feasible);  // 2 >= 1

  Scenario strict = scn;
  strict.mu_threshold = 2.5;
  CHECK_FALSE(is_feasible(strict, Association(1)));
}

TEST_CASE("hand-computed table on the 2x2 fixture") {
  const Scenario scn = test::fixture_two_by_two();

  Association diagonal(2);
  diagonal.assignment[0] = 0;
  diagonal.assignment[1] = 1;
  const SinrReport report = evaluate(scn, diagonal);
  REQUIRE(report.su_sinr.size() == 2);
  CHECK(report.su_sinr[0].su == 0);
  CHECK(report.su_sinr[0].sbs == 0);
  CHECK(report.su_sinr[0].sinr == doctest::Approx(16.0 / 9.0));
  CHECK(report.su_sinr[1].su == 1);
  CHECK(report.su_sinr[1].sbs == 1);
  CHECK(report.su_sinr[1].sinr == doctest::Approx(1.0));
  CHECK(report.mu_sinr == doctest::Approx(1.25));
  CHECK(report.feasible);  // the SU1 tie at exactly the threshold counts

  Association crossed(2);
  crossed.assignment[0] = 1;
  crossed.assignment[1] = 0;
  const SinrReport crossed_report = evaluate(scn, crossed);
  CHECK(crossed_report.su_sinr[0].sinr == doctest::Approx(4.0 / 8.0));
  CHECK(crossed_report.su_sinr[1].sinr == doctest::Approx(3.0 / 9.5));
  CHECK_FALSE(crossed_report.feasible);
}

TEST_CASE("malformed associations are rejected") {
  const Scenario scn = test::fixture_two_by_two();
  Association duplicate(2);
  duplicate.assignment[0] = 0;
  duplicate.assignment[1] = 0;
  CHECK_THROWS_AS(evaluate(scn, duplicate), std::invalid_argument);

  Association out_of_range(2);
  out_of_range.assignment[0] = 7;
  CHECK_THROWS_AS(evaluate(scn, out_of_range), std::invalid_argument);

  CHECK_THROWS_AS(evaluate(scn, Association(3)), std::invalid_argument);
}

TEST_CASE("predicate agrees with first-principles arithmetic everywhere") {
  const Scenario scn = test::fixture_three_by_three();
  int checked = 0;
  verify::for_each_matching(3, 3, [&](const Association& a) {
    CHECK(is_feasible(scn, a) == verify::feasible_by_direct_arithmetic(scn, a));
    ++checked;
  });
  CHECK(checked == 34);
}

TEST_CASE("adding a pair never helps anyone already served") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Scenario scn = test::random_scenario(seed, 5, 5);
    Rng rng = Rng::substream(seed, 0xadd);

    Association a(scn.num_sbs());
    std::vector<char> used(scn.num_su(), 0);
    // grow a random association one pair at a time
    for (int n = 0; n < scn.num_sbs(); ++n) {
      const int pick = static_cast<int>(rng.next_u64() % (scn.num_su() + 1));
      if (pick >= scn.num_su() || used[pick]) continue;

      const SinrReport before = evaluate(scn, a);
      a.assignment[n] = pick;
      used[pick] = 1;
      const SinrReport after = evaluate(scn, a);

      CHECK(after.mu_sinr <= before.mu_sinr);
      for (const SinrEntry& prev : before.su_sinr) {
        for (const SinrEntry& cur : after.su_sinr) {
          if (cur.su == prev.su && cur.sbs == prev.sbs) {
            CHECK(cur.sinr <= prev.sinr);
          }
        }
      }
    }
  }
}

TEST_CASE("doubling macro power doubles the idle-cell macro SINR exactly") {
  Scenario scn = test::fixture_two_by_two();
  const double base = evaluate(scn, Association(2)).mu_sinr;
  scn.mbs_snr *= 2.0;
  CHECK(evaluate(scn, Association(2)).mu_sinr == 2.0 * base);
}

TEST_SUITE_END();
