#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "remon/distribution.hpp"

namespace remon {

enum class SearchMethod { exact, greedy };

/// Assignment-search budgets. Instances with at most `exhaustive` candidate
/// assignments are enumerated outright; larger ones go through
/// branch-and-bound with a greedy seed, flagged greedy if the node budget
/// runs out before the search completes.
struct SearchBudget {
  uint64_t exhaustive = 10'000'000;
  uint64_t branch_nodes = 10'000'000;
};

/// Result of the per-player max-min partition search: epsilon and, per
/// player, the signal -> action partition witnessing it.
struct PrecisionResult {
  Scalar epsilon;
  std::vector<Scalar> per_player;
  std::vector<std::map<std::string, std::string>> witnesses;
  SearchMethod method = SearchMethod::exact;
};

/// Monitoring precision: per player, the smallest eps such that some
/// action-indexed partition of that player's signals captures >= 1-eps mass
/// under every action; overall eps is the worst player. Ties are broken by
/// the lexicographically least signal -> action assignment.
PrecisionResult monitoring_precision(const std::vector<Channel>& per_player,
                                     const SearchBudget& budget = {});

/// Precision of a class-indexed signal partition for a channel whose inputs
/// are grouped into the given classes.
struct ClassPrecision {
  Scalar value;
  std::vector<int> signal_class;  // per channel-output index -> class index
  SearchMethod method = SearchMethod::exact;
};

ClassPrecision auxiliary_precision(
    const Channel& ch, const std::vector<std::vector<std::string>>& classes,
    const SearchBudget& budget = {});

/// Smallest z such that the channel's outputs partition into input-indexed
/// cells each holding >= 1-z mass; witness maps output -> input.
struct ZPerfectResult {
  Scalar z;
  std::map<std::string, std::string> witness;
  SearchMethod method = SearchMethod::exact;
};

ZPerfectResult z_perfect(const Channel& ch, const SearchBudget& budget = {});

}  // namespace remon
