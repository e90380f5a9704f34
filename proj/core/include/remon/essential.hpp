#pragma once

#include <optional>
#include <string>
#include <vector>

#include "remon/confusion.hpp"
#include "remon/instance.hpp"

namespace remon {

/// Minimal recoloring of the mediator's signals: colors the bi-auxiliary
/// graph with the fewest colors and recodes the observation channel through
/// it. Colors are labelled r1, r2, ... in first-use order.
EssentialRecoding essential_recoding(const MonitoringInstance& inst,
                                     ClassMode mode);

/// Distribution of the essential symbol under the instance's strategy.
Distribution essential_distribution(const MonitoringInstance& inst,
                                    const EssentialRecoding& rec);

struct InducedTransition {
  Channel channel;                   // reachable R -> player signals
  std::vector<std::string> dropped;  // essential symbols with zero mass
};

/// Conditional side-information channel T_i(s|r) of one player, rows taken
/// from the exact induced joint. Zero-mass essential symbols are dropped
/// and reported.
InducedTransition induced_transition(const MonitoringInstance& inst,
                                     const EssentialRecoding& rec,
                                     size_t player);

struct EssentialRate {
  std::vector<double> per_player;  // H(R|S_i) in bits
  double rate = 0.0;               // max over players
};

/// Slepian-Wolf style rate needed to convey the essential symbol to every
/// player given their private side information.
EssentialRate essential_rate(const MonitoringInstance& inst,
                             const EssentialRecoding& rec);

struct PriceReport {
  std::optional<double> preepm_infinity;  // rate_bits / source_bits
  std::optional<double> prpm_infinity;    // same ratio, perfect-monitoring context
  double preepm_oneshot = 0.0;            // log2 |R| / log2 |A|
  double rate_bits = 0.0;                 // numerator of the infinite-horizon prices
  double source_bits = 0.0;               // denominator: entropy of the strategy
  size_t essential_symbols = 0;           // reachable |R|
  size_t action_symbols = 0;              // |A|
};

/// Signalling prices. Infinite-horizon prices are absent when the strategy
/// entropy is zero; the one-shot price counts reachable essential symbols
/// only.
PriceReport prices(const MonitoringInstance& inst,
                   const EssentialRecoding& rec);

}  // namespace remon
