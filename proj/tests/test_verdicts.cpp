#include <doctest.h>

#include "remon/verdicts.hpp"
#include "test_util.hpp"

using namespace remon;
using test::q;

namespace {

MonitoringInstance pd_with_noiseless_broadcast(const Scalar& noise) {
  auto inst = pd_instance(noise, noise, noise);
  const auto rec = essential_recoding(inst, ClassMode::majority);
  inst.broadcast =
      product_broadcast(Channel::identity(rec.essential_alphabet), 2);
  return inst;
}

MonitoringInstance pd_with_bsc_broadcast(const Scalar& noise,
                                         const Scalar& flip) {
  auto inst = pd_instance(noise, noise, noise);
  const auto rec = essential_recoding(inst, ClassMode::majority);
  inst.broadcast =
      product_broadcast(test::bsc(flip, rec.essential_alphabet), 2);
  return inst;
}

}  // namespace

TEST_CASE("combined error expands the three-way product") {
  CHECK(combined_error(q(1, 10), q(1, 10), q(1, 10)) == q(271, 1000));
  CHECK(combined_error(q(1, 10), q(2, 10), q(0)) ==
        q(1, 10) + q(2, 10) - q(1, 10) * q(2, 10));
  CHECK(combined_error(q(1), q(1, 3), q(1, 7)) == q(1));
  CHECK_THROWS_AS(combined_error(q(3, 2), q(0), q(0)), std::invalid_argument);
  CHECK_THROWS_AS(combined_error(q(-1, 2), q(0), q(0)), std::invalid_argument);
}

TEST_CASE("eps-perfect reconstruction on the noisy dilemma") {
  const auto inst = pd_with_noiseless_broadcast(q(1, 10));

  const auto pass = check_epsilon_perfect(inst, q(19, 100));
  CHECK(pass.holds);
  CHECK(pass.epsilon_bound == q(19, 100));
  CHECK(pass.x == q(1, 10));
  CHECK(pass.y == q(1, 10));
  CHECK(*pass.rate_bits == doctest::Approx(0.9660859201081202).epsilon(1e-9));
  CHECK(pass.capacity->C0 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(pass.diagnostics.empty());

  const auto tight = check_epsilon_perfect(inst, q(0));
  CHECK_FALSE(tight.holds);
  CHECK_FALSE(tight.definitive);
}

TEST_CASE("eps-perfect fails on a capacity bottleneck") {
  // The essential rate ~0.966 bits cannot fit through a BSC(0.1) pair
  // (capacity ~0.531).
  const auto inst = pd_with_bsc_broadcast(q(1, 10), q(1, 10));
  const auto res = check_epsilon_perfect(inst, q(19, 100));
  CHECK_FALSE(res.holds);
  bool rate_diag = false;
  for (const auto& d : res.diagnostics)
    rate_diag |= d.find("capacity") != std::string::npos;
  CHECK(rate_diag);
}

TEST_CASE("noiseless instance reconstructs at epsilon zero") {
  const auto inst = pd_with_noiseless_broadcast(q(0));
  const auto res = check_epsilon_perfect(inst, q(0));
  CHECK(res.holds);
  CHECK(res.epsilon_bound == q(0));
}

TEST_CASE("eps-perfect requires a broadcast channel") {
  const auto inst = pd_instance(q(1, 10), q(1, 10), q(1, 10));
  CHECK_THROWS_AS(check_epsilon_perfect(inst, q(19, 100)),
                  std::invalid_argument);
}

TEST_CASE("perfect monitoring holds iff painting and rate hold") {
  const auto good = pd_with_noiseless_broadcast(q(0));
  const auto res = check_perfect(good);
  CHECK(res.holds);
  CHECK(res.definitive);
  CHECK(*res.rate_bits ==
        doctest::Approx(test::binary_entropy(1.0 / 3.0)).epsilon(1e-9));

  // Noisy mediator breaks the painting condition: definitive negative.
  auto noisy_m = pd_instance(q(0), q(0), q(1, 10));
  const auto rec = essential_recoding(noisy_m, ClassMode::support);
  noisy_m.broadcast =
      product_broadcast(Channel::identity(rec.essential_alphabet), 2);
  const auto fail = check_perfect(noisy_m);
  CHECK_FALSE(fail.holds);
  CHECK(fail.definitive);
  CHECK(fail.painting.has_value());
  CHECK_FALSE(fail.painting->holds);

  // Painting passes but the channel is too weak: the rate diagnostic fires.
  auto weak = pd_instance(q(0), q(0), q(0));
  const auto rec0 = essential_recoding(weak, ClassMode::support);
  weak.broadcast =
      product_broadcast(test::bsc(q(1, 10), rec0.essential_alphabet), 2);
  const auto blocked = check_perfect(weak);
  CHECK_FALSE(blocked.holds);
  CHECK(blocked.painting->holds);
  bool rate_diag = false;
  for (const auto& d : blocked.diagnostics)
    rate_diag |= d.find("capacity") != std::string::npos;
  CHECK(rate_diag);
}

TEST_CASE("one-shot reconstruction through noiseless and noisy legs") {
  const auto noiseless = pd_with_noiseless_broadcast(q(1, 10));
  const auto res = check_one_shot(noiseless, q(19, 100));
  CHECK(res.holds);
  CHECK(*res.z == q(0));
  CHECK(res.epsilon_bound == q(19, 100));

  const auto bsc = pd_with_bsc_broadcast(q(1, 10), q(1, 10));
  const auto noisy = check_one_shot(bsc, q(271, 1000));
  CHECK(noisy.holds);
  CHECK(*noisy.z == q(1, 10));
  CHECK(noisy.epsilon_bound == q(271, 1000));

  const auto too_tight = check_one_shot(bsc, q(27, 100));
  CHECK_FALSE(too_tight.holds);
}

TEST_CASE("one-shot with a starved broadcast output fails for every epsilon "
          "below one") {
  auto inst = pd_instance(q(1, 10), q(1, 10), q(1, 10));
  // One output symbol for two essential symbols: pigeonhole forces z = 1.
  const Channel squeeze({"r1", "r2"}, {"y"}, {{q(1)}, {q(1)}});
  inst.broadcast = product_broadcast(squeeze, 2);
  const auto res = check_one_shot(inst, q(99, 100));
  CHECK(*res.z == q(1));
  CHECK(res.epsilon_bound == q(1));
  CHECK_FALSE(res.holds);
  const auto loose = check_one_shot(inst, q(1));
  CHECK(loose.holds);
}

TEST_CASE("explicit encoder maps essential symbols onto channel inputs") {
  auto inst = pd_instance(q(1, 10), q(1, 10), q(1, 10));
  inst.broadcast = product_broadcast(Channel::identity({"x0", "x1"}), 2);
  // Without an encoder the identity map fails: labels differ.
  CHECK_THROWS_AS(check_one_shot(inst, q(19, 100)), std::invalid_argument);

  inst.encoder = std::map<std::string, std::string>{{"r1", "x0"},
                                                    {"r2", "x1"}};
  const auto res = check_one_shot(inst, q(19, 100));
  CHECK(res.holds);
  CHECK(*res.z == q(0));

  inst.encoder = std::map<std::string, std::string>{{"r1", "x0"}};
  CHECK_THROWS_AS(check_one_shot(inst, q(19, 100)), std::invalid_argument);
}

TEST_CASE("one-shot bound with z=0 equals the blockwise bound") {
  const auto inst = pd_with_noiseless_broadcast(q(1, 10));
  const auto oneshot = check_one_shot(inst, q(19, 100));
  const auto block = check_epsilon_perfect(inst, q(19, 100));
  CHECK(oneshot.epsilon_bound == block.epsilon_bound);
}

TEST_CASE("perfect-monitoring verdict is consistent with the precision "
          "search") {
  const auto inst = pd_with_noiseless_broadcast(q(0));
  REQUIRE(check_perfect(inst).holds);
  const auto rec = essential_recoding(inst, ClassMode::support);
  for (size_t i = 0; i < inst.players.size(); ++i) {
    const Channel joint =
        product_channel(inst.players[i].monitoring, rec.recoded);
    CHECK(monitoring_precision({joint}).epsilon == q(0));
  }
}
