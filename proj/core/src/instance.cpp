#include "remon/instance.hpp"

#include <stdexcept>

namespace remon {
namespace {

std::vector<std::string> joint_labels(
    const std::vector<std::vector<std::string>>& outputs) {
  std::vector<std::string> labels{""};
  bool first = true;
  for (const auto& alphabet : outputs) {
    std::vector<std::string> next;
    next.reserve(labels.size() * alphabet.size());
    for (const auto& prefix : labels)
      for (const auto& y : alphabet)
        next.push_back(first ? y : prefix + "," + y);
    labels = std::move(next);
    first = false;
  }
  return labels;
}

}  // namespace

BroadcastChannel make_broadcast(std::vector<std::string> inputs,
                                std::vector<std::vector<std::string>> outputs,
                                std::vector<std::vector<Scalar>> rows) {
  if (outputs.empty())
    throw std::invalid_argument("broadcast: needs at least one player");
  Channel joint(inputs, joint_labels(outputs), std::move(rows));
  return BroadcastChannel{std::move(inputs), std::move(outputs),
                          std::move(joint)};
}

BroadcastChannel product_broadcast(const Channel& per_player,
                                   size_t player_count) {
  if (player_count == 0)
    throw std::invalid_argument("broadcast: needs at least one player");
  Channel joint = per_player;
  for (size_t i = 1; i < player_count; ++i)
    joint = product_channel(joint, per_player);
  std::vector<std::vector<std::string>> outputs(player_count,
                                                per_player.outputs());
  return BroadcastChannel{per_player.inputs(), std::move(outputs),
                          std::move(joint)};
}

void MonitoringInstance::validate() const {
  if (players.empty())
    throw std::invalid_argument("instance: at least one player required");
  if (actions.empty()) throw std::invalid_argument("instance: no actions");
  for (const auto& p : players)
    if (p.monitoring.inputs() != actions)
      throw std::invalid_argument("instance: player '" + p.name +
                                  "' monitoring input alphabet != actions");
  if (mediator.inputs() != actions)
    throw std::invalid_argument(
        "instance: mediator observation input alphabet != actions");
  if (strategy.labels() != actions)
    throw std::invalid_argument("instance: strategy alphabet != actions");
  if (broadcast) {
    if (broadcast->outputs.size() != players.size())
      throw std::invalid_argument(
          "instance: broadcast needs one output alphabet per player");
    if (broadcast->joint.inputs() != broadcast->inputs)
      throw std::invalid_argument("instance: broadcast joint channel inputs "
                                  "!= declared inputs");
    size_t cells = 1;
    for (const auto& alphabet : broadcast->outputs) {
      if (alphabet.empty())
        throw std::invalid_argument("instance: empty broadcast output alphabet");
      cells *= alphabet.size();
    }
    if (broadcast->joint.outputs().size() != cells)
      throw std::invalid_argument(
          "instance: broadcast transition width != product of outputs");
  }
}

JointDistribution induced_joint(const MonitoringInstance& inst,
                                const EssentialRecoding& rec, size_t player) {
  if (player >= inst.players.size())
    throw std::invalid_argument("induced_joint: player index out of range");
  if (rec.recoded.inputs() != inst.actions)
    throw std::invalid_argument("induced_joint: recoding built for a "
                                "different action alphabet");
  const auto& q_labels = inst.mediator_signals();
  for (const auto& q : q_labels)
    if (!rec.coloring.count(q))
      throw std::invalid_argument("induced_joint: recoding not total on '" +
                                  q + "'");

  const Channel& g = inst.players[player].monitoring;
  const auto& r_labels = rec.essential_alphabet;
  std::vector<Factor> factors{{"a", inst.actions},
                              {"q", q_labels},
                              {"r", r_labels},
                              {"s", g.outputs()}};
  std::vector<size_t> r_of_q(q_labels.size());
  for (size_t q = 0; q < q_labels.size(); ++q) {
    const auto& color = rec.coloring.at(q_labels[q]);
    auto it = std::find(r_labels.begin(), r_labels.end(), color);
    if (it == r_labels.end())
      throw std::invalid_argument("induced_joint: color '" + color +
                                  "' missing from essential alphabet");
    r_of_q[q] = static_cast<size_t>(it - r_labels.begin());
  }

  const size_t na = inst.actions.size(), nq = q_labels.size(),
               nr = r_labels.size(), ns = g.outputs().size();
  std::vector<Scalar> mass(na * nq * nr * ns, Scalar::exact(0));
  for (size_t a = 0; a < na; ++a) {
    if (inst.strategy.mass(a).is_zero()) continue;
    for (size_t q = 0; q < nq; ++q) {
      Scalar aq = inst.strategy.mass(a) * inst.mediator.prob(a, q);
      if (aq.is_zero()) continue;
      const size_t r = r_of_q[q];
      for (size_t s = 0; s < ns; ++s)
        mass[((a * nq + q) * nr + r) * ns + s] = aq * g.prob(a, s);
    }
  }
  return JointDistribution(std::move(factors), std::move(mass));
}

Channel broadcast_marginal(const MonitoringInstance& inst, size_t player) {
  if (!inst.broadcast)
    throw std::invalid_argument("broadcast_marginal: no broadcast channel");
  if (player >= inst.players.size())
    throw std::invalid_argument("broadcast_marginal: player out of range");
  const auto& bc = *inst.broadcast;

  size_t stride = 1;  // stride of player's coordinate in the row-major tuple
  for (size_t i = player + 1; i < bc.outputs.size(); ++i)
    stride *= bc.outputs[i].size();
  const size_t mine = bc.outputs[player].size();

  std::vector<std::vector<Scalar>> rows;
  rows.reserve(bc.inputs.size());
  for (size_t x = 0; x < bc.inputs.size(); ++x) {
    std::vector<Scalar> row(mine, Scalar::exact(0));
    for (size_t flat = 0; flat < bc.joint.outputs().size(); ++flat)
      row[(flat / stride) % mine] += bc.joint.prob(x, flat);
    rows.push_back(std::move(row));
  }
  return Channel(bc.inputs, bc.outputs[player], std::move(rows));
}

MonitoringInstance pd_instance(const Scalar& x, const Scalar& xp,
                               const Scalar& y) {
  const Scalar zero = Scalar::exact(0);
  const Scalar half = Scalar::exact(1, 2);
  for (const Scalar* v : {&x, &xp, &y})
    if (v->is_negative() || !(*v < half))
      throw std::invalid_argument(
          "pd_instance: noise parameters must lie in [0, 1/2)");

  const std::vector<std::string> actions{"CC", "CD", "DC", "DD"};
  const Scalar one = Scalar::exact(1);

  // Player 1 observes the first coordinate: CC,CD -> s1 w.p. 1-x.
  Channel g1(actions, {"s1", "s1'"},
             {{one - x, x}, {one - x, x}, {x, one - x}, {x, one - x}});
  // Player 2 observes the second coordinate: CC,DC -> s2 w.p. 1-xp.
  Channel g2(actions, {"s2", "s2'"},
             {{one - xp, xp}, {xp, one - xp}, {one - xp, xp}, {xp, one - xp}});
  // Mediator sees q1/q2/q2/q3, each with the adjacent signal as the
  // y-probability alternative.
  Channel m(actions, {"q1", "q2", "q3"},
            {{one - y, y, zero},
             {y, one - y, zero},
             {zero, one - y, y},
             {zero, y, one - y}});

  Distribution strategy(actions, {Scalar::exact(4, 9), Scalar::exact(2, 9),
                                  Scalar::exact(2, 9), Scalar::exact(1, 9)});

  MonitoringInstance inst{actions,
                          {{"P1", std::move(g1)}, {"P2", std::move(g2)}},
                          std::move(m),
                          std::nullopt,
                          std::nullopt,
                          std::move(strategy)};
  inst.validate();
  return inst;
}

}  // namespace remon
