#include "remon/powergame.hpp"

#include <cmath>
#include <stdexcept>

namespace remon {

PowerGameResult evaluate_power_game(double p1, double p2,
                                    const PowerGameParams& params) {
  if (p1 <= 0.0 || p2 <= 0.0)
    throw std::invalid_argument("power game: powers must be positive");
  if (params.noise_var <= 0.0 || params.spreading <= 0.0 ||
      params.m_symbols <= 0.0)
    throw std::invalid_argument("power game: parameters must be positive");

  PowerGameResult r;
  r.sinr1 = p1 * params.gain1_sq /
            (p2 * params.gain2_sq / params.spreading + params.noise_var);
  r.sinr2 = p2 * params.gain2_sq /
            (p1 * params.gain1_sq / params.spreading + params.noise_var);
  r.u1 = std::pow(1.0 - std::exp(-r.sinr1), params.m_symbols) / p1;
  r.u2 = std::pow(1.0 - std::exp(-r.sinr2), params.m_symbols) / p2;
  return r;
}

}  // namespace remon
