#include "remon/confusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace remon {
namespace {

bool intersects(const std::vector<std::string>& a,
                const std::vector<std::string>& b) {
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

std::vector<std::string> support_of(const Channel& ch, size_t input) {
  std::vector<std::string> out;
  for (size_t s = 0; s < ch.outputs().size(); ++s)
    if (!ch.prob(input, s).is_zero()) out.push_back(ch.outputs()[s]);
  return out;
}

}  // namespace

EquivClasses equivalence_classes(const Channel& ch, ClassMode mode) {
  const Scalar half = Scalar::exact(1, 2);
  EquivClasses out;
  out.mode = mode;
  out.actions = ch.inputs();
  out.rep_sets.reserve(out.actions.size());
  for (size_t a = 0; a < out.actions.size(); ++a) {
    std::vector<std::string> set;
    for (size_t s = 0; s < ch.outputs().size(); ++s) {
      const Scalar& p = ch.prob(a, s);
      if (mode == ClassMode::majority ? p > half : !p.is_zero())
        set.push_back(ch.outputs()[s]);
    }
    out.rep_sets.push_back(std::move(set));
  }
  out.action_class.assign(out.actions.size(), -1);
  for (size_t a = 0; a < out.actions.size(); ++a) {
    if (out.action_class[a] != -1) continue;
    const int c = static_cast<int>(out.classes.size());
    out.classes.push_back({out.actions[a]});
    out.action_class[a] = c;
    for (size_t b = a + 1; b < out.actions.size(); ++b) {
      if (out.action_class[b] == -1 && out.rep_sets[b] == out.rep_sets[a]) {
        out.action_class[b] = c;
        out.classes[static_cast<size_t>(c)].push_back(out.actions[b]);
      }
    }
  }
  return out;
}

UndirectedGraph auxiliary_graph(const EquivClasses& classes) {
  UndirectedGraph g(classes.actions);
  for (size_t a = 0; a < classes.actions.size(); ++a)
    for (size_t b = a + 1; b < classes.actions.size(); ++b)
      if (classes.action_class[a] == classes.action_class[b]) g.add_edge(a, b);
  return g;
}

UndirectedGraph support_graph(const Channel& ch) {
  UndirectedGraph g(ch.inputs());
  std::vector<std::vector<std::string>> supports;
  for (size_t a = 0; a < ch.inputs().size(); ++a)
    supports.push_back(support_of(ch, a));
  for (size_t a = 0; a < ch.inputs().size(); ++a)
    for (size_t b = a + 1; b < ch.inputs().size(); ++b)
      if (intersects(supports[a], supports[b])) g.add_edge(a, b);
  return g;
}

UndirectedGraph bi_auxiliary_graph(const MonitoringInstance& inst,
                                   ClassMode mode) {
  inst.validate();
  const auto mediator = equivalence_classes(inst.mediator, mode);
  UndirectedGraph g(inst.mediator_signals());

  for (const auto& player : inst.players) {
    const auto classes = equivalence_classes(player.monitoring, mode);
    const size_t n = inst.actions.size();
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = a; b < n; ++b) {
        bool confusable;
        if (mode == ClassMode::majority) {
          confusable = classes.action_class[a] == classes.action_class[b];
        } else {
          confusable =
              a == b || intersects(classes.rep_sets[a], classes.rep_sets[b]);
        }
        if (!confusable) continue;
        for (const auto& q : mediator.rep_sets[a])
          for (const auto& qp : mediator.rep_sets[b])
            if (q != qp) g.add_edge(q, qp);
      }
    }
  }
  return g;
}

XYColoringResult check_xy_coloring(const MonitoringInstance& inst,
                                   size_t player, const SearchBudget& budget) {
  if (player >= inst.players.size())
    throw std::invalid_argument("check_xy_coloring: player out of range");
  const Channel& g = inst.players[player].monitoring;

  XYColoringResult res;
  res.player_classes = equivalence_classes(g, ClassMode::majority);
  res.mediator_classes = equivalence_classes(inst.mediator, ClassMode::majority);
  res.x_detail = auxiliary_precision(g, res.player_classes.classes, budget);
  res.y_detail =
      auxiliary_precision(inst.mediator, res.mediator_classes.classes, budget);
  res.x = res.x_detail.value;
  res.y = res.y_detail.value;

  for (size_t a = 0; a < inst.actions.size(); ++a) {
    if (res.player_classes.rep_sets[a].empty())
      res.reasons.push_back("empty representative set: no signal of '" +
                            inst.players[player].name +
                            "' has majority mass under action '" +
                            inst.actions[a] + "'");
    if (res.mediator_classes.rep_sets[a].empty())
      res.reasons.push_back(
          "empty representative set: no mediator signal has majority mass "
          "under action '" +
          inst.actions[a] + "'");
  }
  if (!(res.x < Scalar::exact(1)))
    res.reasons.push_back("auxiliary monitoring of player '" +
                          inst.players[player].name + "' has precision 1");
  if (!(res.y < Scalar::exact(1)))
    res.reasons.push_back("auxiliary mediator monitoring has precision 1");

  // The mediator classes must properly color the player's auxiliary graph:
  // actions confusable for the player must fall in distinct mediator classes.
  for (size_t a = 0; a < inst.actions.size(); ++a)
    for (size_t b = a + 1; b < inst.actions.size(); ++b)
      if (res.player_classes.action_class[a] ==
              res.player_classes.action_class[b] &&
          res.mediator_classes.action_class[a] ==
              res.mediator_classes.action_class[b])
        res.reasons.push_back("mediator does not separate '" +
                              inst.actions[a] + "' and '" + inst.actions[b] +
                              "', confusable for player '" +
                              inst.players[player].name + "'");

  res.holds = res.reasons.empty();
  return res;
}

PaintingResult check_painting(const MonitoringInstance& inst, bool strict) {
  inst.validate();
  PaintingResult res;
  std::vector<std::vector<std::string>> m_supports;
  for (size_t a = 0; a < inst.actions.size(); ++a)
    m_supports.push_back(support_of(inst.mediator, a));

  for (size_t i = 0; i < inst.players.size(); ++i) {
    const Channel& g = inst.players[i].monitoring;
    std::vector<std::vector<std::string>> supports;
    for (size_t a = 0; a < inst.actions.size(); ++a)
      supports.push_back(support_of(g, a));
    for (size_t a = 0; a < inst.actions.size(); ++a) {
      for (size_t b = a + 1; b < inst.actions.size(); ++b) {
        const bool edge = intersects(supports[a], supports[b]);
        const bool m_overlap = intersects(m_supports[a], m_supports[b]);
        if (edge && m_overlap)
          res.violations.push_back(
              {i, inst.actions[a], inst.actions[b]});
        else if (strict && !edge && !m_overlap)
          res.violations.push_back(
              {i, inst.actions[a], inst.actions[b]});
      }
    }
  }
  res.holds = res.violations.empty();
  return res;
}

}  // namespace remon
