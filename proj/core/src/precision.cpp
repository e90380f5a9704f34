#include "remon/precision.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace remon {
namespace {

// Maximize, over assignments of signals to buckets, the minimum over rows of
// the mass each row collects in its own bucket. Rows are channel rows; the
// bucket map groups rows that share a partition cell.
struct PartitionSearch {
  PartitionSearch(const std::vector<std::vector<Scalar>>& rows_in,
                  const std::vector<int>& bucket_in, int bucket_count_in,
                  const SearchBudget& budget_in)
      : rows(rows_in),
        bucket(bucket_in),
        bucket_count(bucket_count_in),
        budget(budget_in) {}

  const std::vector<std::vector<Scalar>>& rows;  // row -> per-signal mass
  const std::vector<int>& bucket;                // row -> bucket id
  int bucket_count;
  SearchBudget budget;

  size_t signal_count = 0;
  std::vector<std::vector<Scalar>> suffix;  // row -> mass of signals >= s
  std::vector<Scalar> current;              // row -> mass collected so far
  std::vector<int> assignment;
  std::optional<Scalar> best;
  std::vector<int> best_assignment;
  uint64_t nodes = 0;
  bool prune_enabled = false;
  bool truncated = false;

  Scalar objective_floor() const {
    Scalar v = current[0];
    for (size_t r = 1; r < current.size(); ++r)
      if (current[r] < v) v = current[r];
    return v;
  }

  void run() {
    signal_count = rows.empty() ? 0 : rows[0].size();
    suffix.assign(rows.size(),
                  std::vector<Scalar>(signal_count + 1, Scalar::exact(0)));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t s = signal_count; s-- > 0;)
        suffix[r][s] = suffix[r][s + 1] + rows[r][s];
    current.assign(rows.size(), Scalar::exact(0));
    assignment.assign(signal_count, -1);

    double space = std::pow(static_cast<double>(bucket_count),
                            static_cast<double>(signal_count));
    prune_enabled = !(space <= static_cast<double>(budget.exhaustive));
    if (prune_enabled) seed_greedy();
    dfs(0);
    if (best_assignment.empty()) {
      // Search truncated before reaching any leaf; fall back to the seed.
      best_assignment = greedy_assignment();
      best = evaluate(best_assignment);
      truncated = true;
    }
  }

  std::vector<int> greedy_assignment() const {
    std::vector<int> out(signal_count, 0);
    for (size_t s = 0; s < signal_count; ++s) {
      int pick = 0;
      std::optional<Scalar> pick_value;
      for (int b = 0; b < bucket_count; ++b) {
        std::optional<Scalar> worst;
        for (size_t r = 0; r < rows.size(); ++r)
          if (bucket[r] == b && (!worst || rows[r][s] < *worst))
            worst = rows[r][s];
        if (!worst) continue;  // bucket without member rows never binds
        if (!pick_value || *worst > *pick_value) {
          pick_value = *worst;
          pick = b;
        }
      }
      out[s] = pick;
    }
    return out;
  }

  Scalar evaluate(const std::vector<int>& assign) const {
    std::vector<Scalar> mass(rows.size(), Scalar::exact(0));
    for (size_t s = 0; s < signal_count; ++s)
      for (size_t r = 0; r < rows.size(); ++r)
        if (bucket[r] == assign[s]) mass[r] += rows[r][s];
    Scalar v = mass[0];
    for (const auto& m : mass)
      if (m < v) v = m;
    return v;
  }

  void seed_greedy() {
    auto seed = greedy_assignment();
    best = evaluate(seed);
    // The assignment itself is recorded only when the tree search reaches
    // it, so the lexicographic tie-break stays intact.
  }

  void dfs(size_t s) {
    if (truncated) return;
    if (++nodes > budget.branch_nodes && prune_enabled) {
      truncated = true;
      return;
    }
    if (s == signal_count) {
      Scalar value = objective_floor();
      if (!best || value > *best ||
          (value == *best && best_assignment.empty())) {
        best = value;
        best_assignment = assignment;
      }
      return;
    }
    for (int b = 0; b < bucket_count; ++b) {
      for (size_t r = 0; r < rows.size(); ++r)
        if (bucket[r] == b) current[r] += rows[r][s];
      bool explore = true;
      if (prune_enabled && best) {
        Scalar ub = current[0] + suffix[0][s + 1];
        for (size_t r = 1; r < rows.size(); ++r) {
          Scalar cand = current[r] + suffix[r][s + 1];
          if (cand < ub) ub = cand;
        }
        if (ub < *best || (ub == *best && !best_assignment.empty()))
          explore = false;
      }
      if (explore) {
        assignment[s] = b;
        dfs(s + 1);
        assignment[s] = -1;
      }
      for (size_t r = 0; r < rows.size(); ++r)
        if (bucket[r] == b) current[r] = current[r] - rows[r][s];
      if (truncated) return;
    }
  }
};

struct SearchOutcome {
  Scalar best_min;
  std::vector<int> assignment;
  SearchMethod method;
};

SearchOutcome run_search(const std::vector<std::vector<Scalar>>& rows,
                         const std::vector<int>& bucket, int bucket_count,
                         const SearchBudget& budget) {
  if (rows.empty()) throw std::invalid_argument("partition search: no rows");
  PartitionSearch search{rows, bucket, bucket_count, budget};
  search.run();
  return SearchOutcome{*search.best, search.best_assignment,
                       search.truncated ? SearchMethod::greedy
                                        : SearchMethod::exact};
}

std::vector<std::vector<Scalar>> channel_rows(const Channel& ch) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(ch.inputs().size());
  for (size_t a = 0; a < ch.inputs().size(); ++a) {
    std::vector<Scalar> row;
    row.reserve(ch.outputs().size());
    for (size_t s = 0; s < ch.outputs().size(); ++s)
      row.push_back(ch.prob(a, s));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PrecisionResult monitoring_precision(const std::vector<Channel>& per_player,
                                     const SearchBudget& budget) {
  if (per_player.empty())
    throw std::invalid_argument("monitoring_precision: no channels");
  const auto& actions = per_player.front().inputs();
  for (const auto& ch : per_player)
    if (ch.inputs() != actions)
      throw std::invalid_argument(
          "monitoring_precision: channels disagree on the input alphabet");

  PrecisionResult result;
  result.epsilon = Scalar::exact(0);
  result.method = SearchMethod::exact;
  for (const auto& ch : per_player) {
    auto rows = channel_rows(ch);
    std::vector<int> bucket(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) bucket[r] = static_cast<int>(r);
    auto outcome =
        run_search(rows, bucket, static_cast<int>(actions.size()), budget);
    Scalar eps = Scalar::exact(1) - outcome.best_min;
    std::map<std::string, std::string> witness;
    for (size_t s = 0; s < ch.outputs().size(); ++s)
      witness[ch.outputs()[s]] =
          actions[static_cast<size_t>(outcome.assignment[s])];
    if (eps > result.epsilon) result.epsilon = eps;
    result.per_player.push_back(std::move(eps));
    result.witnesses.push_back(std::move(witness));
    if (outcome.method == SearchMethod::greedy)
      result.method = SearchMethod::greedy;
  }
  return result;
}

ClassPrecision auxiliary_precision(
    const Channel& ch, const std::vector<std::vector<std::string>>& classes,
    const SearchBudget& budget) {
  std::vector<int> bucket(ch.inputs().size(), -1);
  size_t covered = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty())
      throw std::invalid_argument("auxiliary_precision: empty class");
    for (const auto& a : classes[c]) {
      size_t idx = ch.input_index(a);
      if (bucket[idx] != -1)
        throw std::invalid_argument(
            "auxiliary_precision: classes do not partition the actions ('" +
            a + "' repeated)");
      bucket[idx] = static_cast<int>(c);
      ++covered;
    }
  }
  if (covered != ch.inputs().size())
    throw std::invalid_argument(
        "auxiliary_precision: classes do not cover every action");

  auto outcome = run_search(channel_rows(ch), bucket,
                            static_cast<int>(classes.size()), budget);
  return ClassPrecision{Scalar::exact(1) - outcome.best_min,
                        std::move(outcome.assignment), outcome.method};
}

ZPerfectResult z_perfect(const Channel& ch, const SearchBudget& budget) {
  auto rows = channel_rows(ch);
  std::vector<int> bucket(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) bucket[r] = static_cast<int>(r);
  auto outcome =
      run_search(rows, bucket, static_cast<int>(rows.size()), budget);
  ZPerfectResult result;
  result.z = Scalar::exact(1) - outcome.best_min;
  for (size_t y = 0; y < ch.outputs().size(); ++y)
    result.witness[ch.outputs()[y]] =
        ch.inputs()[static_cast<size_t>(outcome.assignment[y])];
  result.method = outcome.method;
  return result;
}

}  // namespace remon
