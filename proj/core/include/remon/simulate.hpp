#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "remon/instance.hpp"
#include "remon/scalar.hpp"

namespace remon {

/// splitmix64 finalizer; the simulator's counter-based generator hashes
/// (seed, trial, stage) through it so trials are independent of scheduling.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(uint64_t seed, uint64_t trial, uint64_t stage) {
  const uint64_t h = mix64(seed ^ mix64(trial ^ mix64(stage)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct TrialRecord {
  uint64_t trial = 0;
  std::string action;
  std::vector<std::string> decoded;  // per player
};

struct SimulationResult {
  uint64_t trials = 0;
  uint64_t seed = 0;
  std::vector<uint64_t> error_counts;  // per player
  std::vector<double> error_rates;
  std::vector<double> half_width_99;   // empty when trials < 1000
  Scalar x, y, z;
  Scalar bound;  // combined one-shot error bound
};

/// Samples the full one-shot signalling chain (action, mediator signal,
/// broadcast, private signals) and decodes with the witness partitions:
/// essential symbol from the z-perfect partition of the broadcast output,
/// action class from the precision partition of the private signal, and the
/// unique action carrying that signature; on a mismatched signature the
/// decoder falls back to the exact maximum-posterior action with a
/// first-in-order tie-break. Counter-based RNG keyed by (seed, trial,
/// stage): results are bit-identical for any thread count.
SimulationResult simulate_one_shot(const MonitoringInstance& inst,
                                   const EssentialRecoding& rec,
                                   uint64_t trials, uint64_t seed,
                                   unsigned threads = 1,
                                   std::vector<TrialRecord>* records = nullptr);

}  // namespace remon
