#pragma once

#include <cstddef>
#include <vector>

#include "remon/distribution.hpp"

namespace remon {

struct CapacityResult {
  double C0 = 0.0;              // certified lower bound, bits
  Distribution optimal_input;   // witness input distribution
  std::vector<double> per_player_mi;  // I(X;Y_i) at the witness
  size_t iterations = 0;
  double certified_gap = 0.0;   // best upper bound minus C0
};

/// Single-user channel capacity via Blahut-Arimoto, iterated until the
/// duality gap drops below `tol` bits.
CapacityResult single_user_capacity(const Channel& ch, double tol = 1e-9,
                                    size_t max_iterations = 100000);

/// Common-message capacity max_p min_i I(p; W_i) over channels sharing one
/// input alphabet. Entropic mirror ascent on p with the subgradient of the
/// active minimum; upper bounds come from weighted divergence maxima, so the
/// returned gap is a certificate.
CapacityResult common_message_capacity(const std::vector<Channel>& per_player,
                                       double tol = 1e-6,
                                       size_t max_iterations = 100000);

/// Rate condition: the required rate fits under the channel capacity, up to
/// the capacity certificate's gap.
bool check_rate_condition(double rate_bits, const CapacityResult& cap);

}  // namespace remon
