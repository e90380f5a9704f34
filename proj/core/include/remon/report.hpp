#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "remon/confusion.hpp"
#include "remon/instance_io.hpp"
#include "remon/scalar.hpp"
#include "remon/simulate.hpp"

namespace remon {

struct AnalyzeOptions {
  ClassMode mode = ClassMode::majority;
  std::optional<Scalar> epsilon;   // enables the eps-perfect verdict
  bool one_shot = false;           // enables the one-shot verdict
  std::optional<uint64_t> simulate_trials;
  uint64_t seed = 0;
  unsigned threads = 1;
  std::vector<TrialRecord>* trial_records = nullptr;  // filled when non-null
};

struct AnalyzeResult {
  std::string report_json;
  /// The verdict driving the exit code: one-shot when requested, else the
  /// eps-perfect verdict when an epsilon was given, else the perfect-
  /// monitoring verdict; without a broadcast channel it falls back to the
  /// per-player coloring conditions.
  bool primary_holds = false;
  std::string primary_verdict;
};

/// Full analysis of an instance document: equivalence structure, graphs,
/// recoding, rates, capacity, prices, verdicts, reference checks, and an
/// optional Monte Carlo block. The rendered report is byte-stable for a
/// fixed input and seed.
AnalyzeResult analyze(const InstanceDocument& doc, const AnalyzeOptions& opts);

}  // namespace remon
