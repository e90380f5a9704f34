#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "remon/distribution.hpp"

namespace remon {

/// One player's private monitoring: a channel from the joint-action alphabet
/// to that player's signal alphabet.
struct PlayerMonitoring {
  std::string name;
  Channel monitoring;  // inputs = actions, outputs = private signals
};

/// Broadcast channel from the mediator to all players. The joint channel's
/// output alphabet is the row-major product of the per-player alphabets,
/// with tuple labels joined by ','.
struct BroadcastChannel {
  std::vector<std::string> inputs;                // X
  std::vector<std::vector<std::string>> outputs;  // Y_i, one per player
  Channel joint;                                  // X -> product of Y_i
};

/// Builds a broadcast channel from rows over the joint output tuples,
/// row-major over (Y_1, ..., Y_K).
BroadcastChannel make_broadcast(std::vector<std::string> inputs,
                                std::vector<std::vector<std::string>> outputs,
                                std::vector<std::vector<Scalar>> rows);

/// Broadcast where every player independently receives the same per-player
/// channel's output: f(y_1..y_K|x) = prod_i W(y_i|x).
BroadcastChannel product_broadcast(const Channel& per_player,
                                   size_t player_count);

/// The monitoring structure under analysis: private monitorings, mediator
/// observation channel, optional mediator-to-player broadcast, and the
/// players' i.i.d. strategy over joint actions.
struct MonitoringInstance {
  std::vector<std::string> actions;
  std::vector<PlayerMonitoring> players;
  Channel mediator;  // m : actions -> mediator signals
  std::optional<BroadcastChannel> broadcast;
  std::optional<std::map<std::string, std::string>> encoder;  // R -> X
  Distribution strategy;  // over actions

  const std::vector<std::string>& mediator_signals() const {
    return mediator.outputs();
  }
  /// Cross-field consistency checks; throws std::invalid_argument.
  void validate() const;
};

/// A recoloring of the mediator's signals onto the essential alphabet.
struct EssentialRecoding {
  std::map<std::string, std::string> coloring;   // total on Q
  std::vector<std::string> essential_alphabet;   // R, in color order
  Channel recoded;                               // actions -> R
};

/// Exact joint P(a,q,r,s) = p(a) m(q|a) 1[h(q)=r] g_i(s|a) for one player,
/// with factors named "a", "q", "r", "s".
JointDistribution induced_joint(const MonitoringInstance& inst,
                                const EssentialRecoding& rec, size_t player);

/// Per-player marginal f_i(y|x) of the joint broadcast channel.
Channel broadcast_marginal(const MonitoringInstance& inst, size_t player);

/// The bundled two-player power-control dilemma: actions {CC,CD,DC,DD}
/// (first letter = row player at the operating power, second = column
/// player), binary private monitorings with flip rates x and xp revealing
/// the respective coordinate, a three-signal mediator observation with
/// flip rate y, and strategy (2/3,1/3) x (2/3,1/3) = (4/9,2/9,2/9,1/9).
/// Requires x, xp, y in [0, 1/2).
MonitoringInstance pd_instance(const Scalar& x, const Scalar& xp,
                               const Scalar& y);

}  // namespace remon
