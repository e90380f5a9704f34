#include "remon/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace remon {
namespace {

struct Matrix {
  size_t nx = 0, ny = 0;
  std::vector<double> w;  // row-major
  double at(size_t x, size_t y) const { return w[x * ny + y]; }
};

Matrix to_matrix(const Channel& ch) {
  Matrix m;
  m.nx = ch.inputs().size();
  m.ny = ch.outputs().size();
  m.w.reserve(m.nx * m.ny);
  for (size_t x = 0; x < m.nx; ++x)
    for (size_t y = 0; y < m.ny; ++y) m.w.push_back(ch.prob(x, y).value());
  return m;
}

std::vector<double> output_dist(const Matrix& m, const std::vector<double>& p) {
  std::vector<double> q(m.ny, 0.0);
  for (size_t x = 0; x < m.nx; ++x) {
    if (p[x] <= 0.0) continue;
    for (size_t y = 0; y < m.ny; ++y) q[y] += p[x] * m.at(x, y);
  }
  return q;
}

// D(W(.|x) || q) in bits; rows with W(y|x)=0 contribute nothing.
double divergence(const Matrix& m, size_t x, const std::vector<double>& q) {
  double d = 0.0;
  for (size_t y = 0; y < m.ny; ++y) {
    const double w = m.at(x, y);
    if (w > 0.0) d += w * std::log2(w / q[y]);
  }
  return d;
}

Distribution to_distribution(const std::vector<std::string>& labels,
                             const std::vector<double>& p) {
  std::vector<Scalar> mass;
  mass.reserve(p.size());
  double sum = 0.0;
  for (double v : p) sum += v;
  for (double v : p) mass.push_back(Scalar::real(v / sum));
  return Distribution(labels, std::move(mass));
}

}  // namespace

CapacityResult single_user_capacity(const Channel& ch, double tol,
                                    size_t max_iterations) {
  const Matrix m = to_matrix(ch);
  std::vector<double> p(m.nx, 1.0 / static_cast<double>(m.nx));
  double lb = 0.0, ub = std::numeric_limits<double>::infinity();
  size_t it = 0;
  std::vector<double> d(m.nx, 0.0);
  while (it < max_iterations) {
    ++it;
    const auto q = output_dist(m, p);
    double mi = 0.0, dmax = -std::numeric_limits<double>::infinity();
    for (size_t x = 0; x < m.nx; ++x) {
      d[x] = divergence(m, x, q);
      mi += p[x] * d[x];
      dmax = std::max(dmax, d[x]);
    }
    lb = mi;
    ub = std::min(ub, dmax);
    if (ub - lb <= tol) break;
    double norm = 0.0;
    for (size_t x = 0; x < m.nx; ++x) {
      p[x] *= std::exp2(d[x] - dmax);  // shift for stability
      norm += p[x];
    }
    for (auto& v : p) v /= norm;
  }
  CapacityResult res{std::max(lb, 0.0), to_distribution(ch.inputs(), p),
                     {std::max(lb, 0.0)}, it,
                     std::max(ub - lb, 0.0)};
  return res;
}

CapacityResult common_message_capacity(const std::vector<Channel>& per_player,
                                       double tol, size_t max_iterations) {
  if (per_player.empty())
    throw std::invalid_argument("common_message_capacity: no channels");
  const auto& inputs = per_player.front().inputs();
  for (const auto& ch : per_player)
    if (ch.inputs() != inputs)
      throw std::invalid_argument(
          "common_message_capacity: channels disagree on the input alphabet");

  const size_t K = per_player.size();
  std::vector<Matrix> w;
  w.reserve(K);
  for (const auto& ch : per_player) w.push_back(to_matrix(ch));
  const size_t nx = inputs.size();

  std::vector<double> p(nx, 1.0 / static_cast<double>(nx));
  std::vector<std::vector<double>> d(K, std::vector<double>(nx, 0.0));
  std::vector<double> mi(K, 0.0);

  double best_lb = -std::numeric_limits<double>::infinity();
  std::vector<double> best_p = p;
  std::vector<double> best_mi = mi;
  double best_ub = std::numeric_limits<double>::infinity();
  double step = 1.0;
  size_t stall = 0;
  size_t it = 0;

  // Upper bound valid for any weights on the simplex: max-min capacity is at
  // most max_x sum_i lambda_i D(W_i(.|x) || q_i) for the current outputs q_i.
  auto weighted_ub = [&](const std::vector<double>& lambda) {
    double m = -std::numeric_limits<double>::infinity();
    for (size_t x = 0; x < nx; ++x) {
      double v = 0.0;
      for (size_t i = 0; i < K; ++i) v += lambda[i] * d[i][x];
      m = std::max(m, v);
    }
    return m;
  };

  while (it < max_iterations) {
    ++it;
    for (size_t i = 0; i < K; ++i) {
      const auto q = output_dist(w[i], p);
      mi[i] = 0.0;
      for (size_t x = 0; x < nx; ++x) {
        d[i][x] = divergence(w[i], x, q);
        mi[i] += p[x] * d[i][x];
      }
    }
    const double lb = *std::min_element(mi.begin(), mi.end());
    if (lb > best_lb) {
      best_lb = lb;
      best_p = p;
      best_mi = mi;
      stall = 0;
    } else if (++stall >= 500) {
      step = std::max(step * 0.5, 1e-3);
      stall = 0;
    }

    // Active set: players whose mutual information sits at the minimum.
    std::vector<double> lambda(K, 0.0);
    size_t active = 0;
    for (size_t i = 0; i < K; ++i)
      if (mi[i] <= lb + 1e-9) {
        lambda[i] = 1.0;
        ++active;
      }
    for (auto& l : lambda) l /= static_cast<double>(active);

    double ub = weighted_ub(lambda);
    std::vector<double> unit(K, 0.0);
    for (size_t i = 0; i < K; ++i) {
      unit.assign(K, 0.0);
      unit[i] = 1.0;
      ub = std::min(ub, weighted_ub(unit));
    }
    if (K == 2) {
      std::vector<double> mix(2, 0.0);
      for (int g = 0; g <= 100; ++g) {
        mix[0] = static_cast<double>(g) / 100.0;
        mix[1] = 1.0 - mix[0];
        ub = std::min(ub, weighted_ub(mix));
      }
    } else if (K > 2) {
      std::vector<double> uniform(K, 1.0 / static_cast<double>(K));
      ub = std::min(ub, weighted_ub(uniform));
    }
    best_ub = std::min(best_ub, ub);
    if (best_ub - best_lb <= tol) break;

    double gmax = -std::numeric_limits<double>::infinity();
    std::vector<double> grad(nx, 0.0);
    for (size_t x = 0; x < nx; ++x) {
      for (size_t i = 0; i < K; ++i) grad[x] += lambda[i] * d[i][x];
      gmax = std::max(gmax, grad[x]);
    }
    double norm = 0.0;
    for (size_t x = 0; x < nx; ++x) {
      p[x] *= std::exp2(step * (grad[x] - gmax));
      norm += p[x];
    }
    for (auto& v : p) v /= norm;
  }

  CapacityResult res{std::max(best_lb, 0.0),
                     to_distribution(inputs, best_p), best_mi, it,
                     std::max(best_ub - best_lb, 0.0)};
  return res;
}

bool check_rate_condition(double rate_bits, const CapacityResult& cap) {
  return rate_bits <= cap.C0 + cap.certified_gap;
}

}  // namespace remon
