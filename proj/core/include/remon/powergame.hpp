#pragma once

namespace remon {

/// Parameters of the two-player energy-efficiency power game: sigmoid
/// exponent M, spreading factor N, squared channel gains, noise variance.
struct PowerGameParams {
  double m_symbols = 2.0;
  double spreading = 2.0;
  double gain1_sq = 1.0;
  double gain2_sq = 1.0;
  double noise_var = 1.0;
};

struct PowerGameResult {
  double sinr1 = 0.0, sinr2 = 0.0;
  double u1 = 0.0, u2 = 0.0;  // bits per joule
};

/// SINR_i = p_i g_i^2 / (p_j g_j^2 / N + sigma^2) and
/// u_i = (1 - exp(-SINR_i))^M / p_i. Powers must be positive.
PowerGameResult evaluate_power_game(double p1, double p2,
                                    const PowerGameParams& params = {});

}  // namespace remon
