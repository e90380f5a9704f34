#pragma once

#include <string>
#include <vector>

#include "remon/graph.hpp"
#include "remon/instance.hpp"
#include "remon/precision.hpp"

namespace remon {

/// majority: representative sets are the signals with conditional
/// probability above 1/2; support: all signals with positive probability.
enum class ClassMode { majority, support };

/// Actions grouped by equal representative sets under one channel.
struct EquivClasses {
  ClassMode mode;
  std::vector<std::string> actions;
  std::vector<std::vector<std::string>> rep_sets;  // per action
  std::vector<std::vector<std::string>> classes;   // partition of actions
  std::vector<int> action_class;                   // action idx -> class idx
};

EquivClasses equivalence_classes(const Channel& ch, ClassMode mode);

/// Graph on actions with an edge inside every equivalence class: a disjoint
/// union of cliques.
UndirectedGraph auxiliary_graph(const EquivClasses& classes);

/// Graph on actions with an edge wherever two actions' signal supports
/// intersect.
UndirectedGraph support_graph(const Channel& ch);

/// Graph on mediator signals: q and q' are adjacent when relaying both could
/// leave some player confused between two confusable actions. In majority
/// mode "confusable" means equal majority sets; in support mode it means
/// intersecting supports. Pairs with a = b are included.
UndirectedGraph bi_auxiliary_graph(const MonitoringInstance& inst,
                                   ClassMode mode);

struct XYColoringResult {
  bool holds = false;
  Scalar x, y;
  ClassPrecision x_detail, y_detail;  // partition witnesses
  EquivClasses player_classes, mediator_classes;
  std::vector<std::string> reasons;  // failures, empty when holds
};

/// The (x,y)-coloring condition for one player: both auxiliary monitorings
/// have finite precision, every representative set is nonempty, and the
/// mediator's classes properly color the player's auxiliary graph.
XYColoringResult check_xy_coloring(const MonitoringInstance& inst,
                                   size_t player,
                                   const SearchBudget& budget = {});

struct PaintingViolation {
  size_t player;
  std::string a, b;
};

struct PaintingResult {
  bool holds = false;
  std::vector<PaintingViolation> violations;
};

/// Painting condition: for every player, any two actions with intersecting
/// signal supports must have disjoint mediator supports. With `strict` the
/// literal biconditional is audited as well (disjoint mediator supports
/// must come with an edge).
PaintingResult check_painting(const MonitoringInstance& inst,
                              bool strict = false);

}  // namespace remon
