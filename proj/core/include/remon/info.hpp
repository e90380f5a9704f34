#pragma once

#include <string_view>

#include "remon/distribution.hpp"

namespace remon {

/// Shannon entropy in bits, with 0 log 0 := 0. Exact masses are converted
/// to double only inside the final log evaluation.
double entropy(const Distribution& d);

/// Joint entropy over all factors, in bits.
double entropy(const JointDistribution& j);

/// H(target | given) = H(target, given) - H(given), in bits.
double conditional_entropy(const JointDistribution& j, std::string_view target,
                           std::string_view given);

/// I(X;Y) = H(Y) - H(Y|X) for Y the channel output under the given input.
double mutual_information(const Distribution& input, const Channel& ch);

}  // namespace remon
