#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "hetsnet/verify.hpp"
#include "hetsnet/weights.hpp"

using namespace hetsnet;

TEST_SUITE_BEGIN("weights");

namespace {

Association single_pair(int num_sbs, int su, int sbs) {
  Association a(num_sbs);
  a.assignment[sbs] = su;
  return a;
}

}  // namespace

TEST_CASE("fresh state carries unit weights") {
  const WeightState state(50, WeightMode::kPerSu, 3, 2);
  for (double w : state.weight_vector()) CHECK(w == 1.0);
}

TEST_CASE("per-user weight is the reciprocal of one plus the count") {
  WeightState state(10, WeightMode::kPerSu, 3, 2);
  // user 0 associated in three slots, user 1 in one, user 2 never
  state = state.updated(single_pair(2, 0, 0));
  state = state.updated(single_pair(2, 0, 1));
  Association both(2);
  both.assignment[0] = 1;
  both.assignment[1] = 0;
  state = state.updated(both);

  CHECK(state.pair_weight(0, 0) == 0.25);
  CHECK(state.pair_weight(0, 1) == 0.25);  // repeated across stations
  CHECK(state.pair_weight(1, 0) == 0.5);
  CHECK(state.pair_weight(2, 0) == 1.0);
}

TEST_CASE("per-station mode counts stations instead") {
  WeightState state(10, WeightMode::kPerSbs, 3, 2);
  state = state.updated(single_pair(2, 0, 1));
  state = state.updated(single_pair(2, 1, 1));
  CHECK(state.pair_weight(0, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(state.pair_weight(2, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(state.pair_weight(0, 0) == 1.0);
}

TEST_CASE("an always-busy entity bottoms out at 1/(window+1)") {
  const int window = 50;
  WeightState state(window, WeightMode::kPerSu, 2, 2);
  for (int t = 0; t < 80; ++t) state = state.updated(single_pair(2, 0, 0));
  CHECK(state.pair_weight(0, 0) == 1.0 / 51.0);
  CHECK(state.pair_weight(1, 0) == 1.0);
}

TEST_CASE("evicted slots stop counting") {
  WeightState state(2, WeightMode::kPerSu, 2, 2);
  state = state.updated(single_pair(2, 0, 0));
  CHECK(state.pair_weight(0, 0) == 0.5);
  state = state.updated(Association(2));
  state = state.updated(Association(2));  // the association ages out
  CHECK(state.pair_weight(0, 0) == 1.0);
}

TEST_CASE("busy entities never gain weight while the window is warm") {
  WeightState state(5, WeightMode::kPerSu, 2, 2);
  double previous = state.pair_weight(0, 0);
  for (int t = 0; t < 5; ++t) {
    state = state.updated(single_pair(2, 0, 0));
    const double current = state.pair_weight(0, 0);
    CHECK(current <= previous);
    previous = current;
  }
}

TEST_CASE("window bookkeeping matches a naive recount") {
  const auto result = verify::check_weight_window(300, 17);
  CHECK_MESSAGE(result.passed, result.detail);
}

TEST_CASE("pure update leaves the input state alone") {
  const WeightState state(4, WeightMode::kPerSu, 2, 2);
  const WeightState next = state.updated(single_pair(2, 0, 0));
  CHECK(state.pair_weight(0, 0) == 1.0);
  CHECK(next.pair_weight(0, 0) == 0.5);
  CHECK(state.history().empty());
  CHECK(next.history().size() == 1);
}

TEST_CASE("jain index values") {
  const std::vector<std::int64_t> equal = {5, 5, 5, 5};
  CHECK(*jain_index(equal) == doctest::Approx(1.0));

  const std::vector<std::int64_t> halved = {1, 0};
  CHECK(*jain_index(halved) == doctest::Approx(0.5));

  const std::vector<std::int64_t> skewed = {3, 1};
  CHECK(*jain_index(skewed) == doctest::Approx(0.8));

  const std::vector<std::int64_t> silent = {0, 0, 0};
  CHECK_FALSE(jain_index(silent).has_value());
  CHECK_FALSE(jain_index({}).has_value());
}

TEST_CASE("jain index stays within its bounds") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng.next_u64() % 8);
    std::vector<std::int64_t> counts(m);
    for (auto& c : counts) c = static_cast<std::int64_t>(rng.next_u64() % 20);
    const auto index = jain_index(counts);
    if (!index) continue;
    CHECK(*index >= 1.0 / m - 1e-12);
    CHECK(*index <= 1.0 + 1e-12);
  }
}

TEST_CASE("bad construction is rejected") {
  CHECK_THROWS_AS(WeightState(0, WeightMode::kPerSu, 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightState(5, WeightMode::kPerSu, 0, 2),
                  std::invalid_argument);
}

TEST_SUITE_END();
