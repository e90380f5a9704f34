#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "remon/capacity.hpp"
#include "remon/info.hpp"
#include "test_util.hpp"

using namespace remon;
using test::q;

namespace {

// Grid-search oracle over binary input distributions.
double grid_search_c0(const std::vector<Channel>& channels, double step) {
  double best = 0.0;
  for (double p = 0.0; p <= 1.0 + 1e-12; p += step) {
    const Distribution input(
        channels.front().inputs(),
        {Scalar::real(std::min(p, 1.0)), Scalar::real(std::max(1.0 - p, 0.0))});
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& ch : channels)
      worst = std::min(worst, mutual_information(input, ch));
    best = std::max(best, worst);
  }
  return best;
}

}  // namespace

TEST_CASE("single-user capacity of standard channels") {
  const auto bsc = single_user_capacity(test::bsc(q(1, 10)));
  CHECK(bsc.C0 == doctest::Approx(1.0 - test::binary_entropy(0.1))
                     .epsilon(1e-6));
  CHECK(bsc.certified_gap <= 1e-9);
  CHECK(bsc.optimal_input.mass(0).value() == doctest::Approx(0.5).epsilon(1e-4));

  const auto noiseless =
      single_user_capacity(Channel::identity({"a", "b", "c"}));
  CHECK(noiseless.C0 == doctest::Approx(std::log2(3.0)).epsilon(1e-8));

  const Channel constant({"a", "b"}, {"y"}, {{q(1)}, {q(1)}});
  CHECK(single_user_capacity(constant).C0 == doctest::Approx(0.0));
}

TEST_CASE("identical channels reduce to the single-user capacity") {
  const Channel ch = test::bsc(q(1, 10));
  const auto single = single_user_capacity(ch);
  const auto common = common_message_capacity({ch, ch}, 1e-8);
  CHECK(common.C0 == doctest::Approx(single.C0).epsilon(1e-6));
}

TEST_CASE("bottleneck player dominates") {
  const Channel good = Channel::identity({"a", "b"});
  const Channel blocked({"a", "b"}, {"y"}, {{q(1)}, {q(1)}});
  const auto res = common_message_capacity({good, blocked});
  CHECK(res.C0 == doctest::Approx(0.0));
}

TEST_CASE("BSC pair: the noisier channel binds at uniform input") {
  const auto res =
      common_message_capacity({test::bsc(q(1, 10)), test::bsc(q(2, 10))}, 1e-8);
  CHECK(res.C0 ==
        doctest::Approx(1.0 - test::binary_entropy(0.2)).epsilon(1e-6));
  CHECK(res.certified_gap <= 1e-8);
}

TEST_CASE("common-message capacity matches grid search on binary inputs") {
  // Asymmetric pair where the max-min input is not obvious.
  const Channel z_channel({"0", "1"}, {"0", "1"},
                          {{q(1), q(0)}, {q(3, 10), q(7, 10)}});
  const Channel skew({"0", "1"}, {"0", "1"},
                     {{q(8, 10), q(2, 10)}, {q(1, 20), q(19, 20)}});
  std::vector<std::vector<Channel>> cases = {
      {test::bsc(q(1, 10)), z_channel},
      {z_channel, skew},
      {test::bsc(q(1, 4)), skew},
      {test::bsc(q(1, 10)), test::bsc(q(2, 10))},
  };
  for (const auto& channels : cases) {
    const auto res = common_message_capacity(channels, 1e-7);
    const double oracle = grid_search_c0(channels, 1e-3);
    CHECK(res.C0 == doctest::Approx(oracle).epsilon(1e-4));
    CHECK(res.certified_gap <= 1e-6);
  }
}

TEST_CASE("capacity is bounded by each player's single-user capacity") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inputs = test::make_labels("x", 2 + trial % 2);
    std::vector<Channel> channels;
    for (int i = 0; i < 2; ++i)
      channels.push_back(test::random_exact_channel(
          rng, inputs, test::make_labels("y", 2 + trial % 3), false));
    const auto common = common_message_capacity(channels);
    for (const auto& ch : channels)
      CHECK(common.C0 <= single_user_capacity(ch).C0 + 1e-6);
  }
}

TEST_CASE("capacity is invariant under player order and output relabels") {
  const Channel a = test::bsc(q(1, 10));
  const Channel b({"0", "1"}, {"u", "v", "w"},
                  {{q(1, 2), q(1, 2), q(0)}, {q(0), q(1, 2), q(1, 2)}});
  const auto ab = common_message_capacity({a, b});
  const auto ba = common_message_capacity({b, a});
  CHECK(ab.C0 == doctest::Approx(ba.C0).epsilon(1e-7));

  const Channel b_relabel({"0", "1"}, {"p", "r", "s"},
                          {{q(1, 2), q(1, 2), q(0)}, {q(0), q(1, 2), q(1, 2)}});
  const auto relabeled = common_message_capacity({a, b_relabel});
  CHECK(ab.C0 == doctest::Approx(relabeled.C0).epsilon(1e-9));
}

TEST_CASE("returned input certifies the reported capacity") {
  const Channel z_channel({"0", "1"}, {"0", "1"},
                          {{q(1), q(0)}, {q(3, 10), q(7, 10)}});
  const auto res = common_message_capacity({test::bsc(q(1, 10)), z_channel});
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& ch : {test::bsc(q(1, 10)), z_channel})
    worst = std::min(worst, mutual_information(res.optimal_input, ch));
  CHECK(worst >= res.C0 - 1e-9);
  CHECK(worst <= res.C0 + res.certified_gap + 1e-9);
}

TEST_CASE("rate condition") {
  const auto unit = common_message_capacity(
      {Channel::identity({"r1", "r2"}), Channel::identity({"r1", "r2"})});
  CHECK(unit.C0 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(check_rate_condition(0.0, unit));
  CHECK(check_rate_condition(0.9183, unit));

  const auto bsc = common_message_capacity(
      {test::bsc(q(1, 10)), test::bsc(q(1, 10))});
  CHECK_FALSE(check_rate_condition(0.9183, bsc));
  CHECK(check_rate_condition(0.5, bsc));

  CHECK_THROWS_AS(common_message_capacity({}), std::invalid_argument);
  CHECK_THROWS_AS(
      common_message_capacity(
          {Channel::identity({"a"}), Channel::identity({"b"})}),
      std::invalid_argument);
}
