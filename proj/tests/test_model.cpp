#include <doctest.h>

#include "remon/essential.hpp"
#include "remon/info.hpp"
#include "remon/instance.hpp"
#include "test_util.hpp"

using namespace remon;
using test::q;

namespace {

EssentialRecoding pd_recoding(const MonitoringInstance& inst) {
  return essential_recoding(inst, ClassMode::majority);
}

}  // namespace

TEST_CASE("pd instance channels match the worked example") {
  const auto inst = pd_instance(q(1, 10), q(1, 10), q(1, 10));
  CHECK(inst.actions == std::vector<std::string>{"CC", "CD", "DC", "DD"});
  CHECK(inst.mediator.prob("CC", "q1") == q(9, 10));
  CHECK(inst.mediator.prob("CC", "q2") == q(1, 10));
  CHECK(inst.mediator.prob("CC", "q3") == q(0));
  CHECK(inst.mediator.prob("CD", "q2") == q(9, 10));
  CHECK(inst.mediator.prob("DC", "q3") == q(1, 10));
  CHECK(inst.mediator.prob("DD", "q3") == q(9, 10));
  CHECK(inst.players[0].monitoring.prob("CD", "s1") == q(9, 10));
  CHECK(inst.players[1].monitoring.prob("DC", "s2") == q(9, 10));
  CHECK(entropy(inst.strategy) == doctest::Approx(1.8366).epsilon(1e-4));

  CHECK_THROWS_AS(pd_instance(q(1, 2), q(0), q(0)), std::invalid_argument);
  CHECK_THROWS_AS(pd_instance(q(-1, 10), q(0), q(0)), std::invalid_argument);
}

TEST_CASE("pd instance at zero noise is deterministic") {
  const auto inst = pd_instance(q(0), q(0), q(0));
  for (const auto& player : inst.players)
    for (size_t a = 0; a < 4; ++a)
      for (size_t s = 0; s < 2; ++s) {
        const Scalar& p = player.monitoring.prob(a, s);
        CHECK((p == q(0) || p == q(1)));
      }
  for (size_t a = 0; a < 4; ++a)
    for (size_t qi = 0; qi < 3; ++qi) {
      const Scalar& p = inst.mediator.prob(a, qi);
      CHECK((p == q(0) || p == q(1)));
    }
}

TEST_CASE("induced joint reproduces the exact essential distribution") {
  const auto inst = pd_instance(q(1, 10), q(1, 10), q(1, 10));
  const auto rec = pd_recoding(inst);
  const auto joint = induced_joint(inst, rec, 0);

  const auto r = joint.marginal("r");
  CHECK(r.mass("r1") == q(49, 90));
  CHECK(r.mass("r2") == q(41, 90));

  // Marginal over everything else returns the strategy exactly.
  const auto a = joint.marginal("a");
  CHECK(a.mass("CC") == q(4, 9));
  CHECK(a.mass("CD") == q(2, 9));
  CHECK(a.mass("DC") == q(2, 9));
  CHECK(a.mass("DD") == q(1, 9));

  const auto s = joint.marginal("s");
  CHECK(s.mass("s1") == q(570, 900));
}

TEST_CASE("induced joint factorizes through the private monitoring") {
  const auto inst = pd_instance(q(1, 10), q(1, 10), q(1, 10));
  const auto rec = pd_recoding(inst);
  const auto joint = induced_joint(inst, rec, 0);
  const auto aq = joint.marginal_joint(std::vector<std::string>{"a", "q"});
  const Channel& g = inst.players[0].monitoring;
  // P(a,q,r,s) = P(a,q,r) g(s|a) wherever the cell has mass.
  for (size_t a = 0; a < 4; ++a)
    for (size_t qi = 0; qi < 3; ++qi) {
      const Scalar aq_mass = aq.mass_at(std::vector<size_t>{a, qi});
      for (size_t r = 0; r < 2; ++r)
        for (size_t s = 0; s < 2; ++s) {
          const Scalar cell =
              joint.mass_at(std::vector<size_t>{a, qi, r, s});
          if (cell.is_zero()) continue;
          CHECK(cell == aq_mass * g.prob(a, s));
        }
    }
}

TEST_CASE("point-mass strategy with deterministic channels gives a "
          "point-mass joint") {
  auto inst = pd_instance(q(0), q(0), q(0));
  inst.strategy = Distribution::point_mass(inst.actions, "CD");
  const auto rec = pd_recoding(inst);
  const auto joint = induced_joint(inst, rec, 0);
  size_t positive_cells = 0;
  for (const auto& m : joint.masses())
    if (!m.is_zero()) {
      ++positive_cells;
      CHECK(m == q(1));
    }
  CHECK(positive_cells == 1);
}

TEST_CASE("broadcast marginal of a product channel returns the factor") {
  const Channel leg = test::bsc(q(1, 10), {"r1", "r2"});
  auto inst = pd_instance(q(0), q(0), q(0));
  inst.broadcast = product_broadcast(leg, 2);
  CHECK(broadcast_marginal(inst, 0) == leg);
  CHECK(broadcast_marginal(inst, 1) == leg);

  inst.broadcast.reset();
  CHECK_THROWS_AS(broadcast_marginal(inst, 0), std::invalid_argument);
}

TEST_CASE("broadcast marginal of a correlated joint channel") {
  // Identical-output broadcast: both players see the same symbol.
  std::vector<std::vector<Scalar>> rows = {
      {q(9, 10), q(0), q(0), q(1, 10)},  // x=r1 -> (r1,r1) or (r2,r2)
      {q(1, 10), q(0), q(0), q(9, 10)},
  };
  auto inst = pd_instance(q(0), q(0), q(0));
  inst.broadcast = make_broadcast({"r1", "r2"}, {{"r1", "r2"}, {"r1", "r2"}},
                                  std::move(rows));
  const Channel expected = test::bsc(q(1, 10), {"r1", "r2"});
  CHECK(broadcast_marginal(inst, 0) == expected);
  CHECK(broadcast_marginal(inst, 1) == expected);
}

TEST_CASE("broadcast marginals of a three-player product pick each factor") {
  const auto actions = std::vector<std::string>{"a", "b"};
  const Channel w1 = test::bsc(q(1, 10), {"x0", "x1"});
  const Channel w2({"x0", "x1"}, {"u", "v", "w"},
                   {{q(1, 2), q(1, 2), q(0)}, {q(0), q(1, 4), q(3, 4)}});
  const Channel w3 = Channel::identity({"x0", "x1"});
  const Channel joint = product_channel(product_channel(w1, w2), w3);
  std::vector<std::vector<Scalar>> rows;
  for (size_t x = 0; x < 2; ++x) {
    std::vector<Scalar> row;
    for (size_t y = 0; y < joint.outputs().size(); ++y)
      row.push_back(joint.prob(x, y));
    rows.push_back(std::move(row));
  }
  MonitoringInstance inst{
      actions,
      {{"P1", Channel::identity(actions)},
       {"P2", Channel::identity(actions)},
       {"P3", Channel::identity(actions)}},
      Channel::identity(actions),
      make_broadcast({"x0", "x1"},
                     {w1.outputs(), w2.outputs(), w3.outputs()},
                     std::move(rows)),
      std::nullopt,
      Distribution::uniform(actions)};
  inst.validate();
  CHECK(broadcast_marginal(inst, 0) == w1);
  CHECK(broadcast_marginal(inst, 1) == w2);
  CHECK(broadcast_marginal(inst, 2) == w3);
}

TEST_CASE("instance validation catches mismatched alphabets") {
  auto inst = pd_instance(q(1, 10), q(1, 10), q(1, 10));
  inst.strategy = Distribution::uniform({"a", "b"});
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
}
