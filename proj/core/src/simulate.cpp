#include "remon/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "remon/confusion.hpp"
#include "remon/precision.hpp"
#include "remon/verdicts.hpp"

namespace remon {
namespace {

std::vector<double> cdf_of(const std::vector<Scalar>& mass) {
  std::vector<double> cdf;
  cdf.reserve(mass.size());
  double acc = 0.0;
  for (const auto& m : mass) {
    acc += m.value();
    cdf.push_back(acc);
  }
  return cdf;
}

size_t sample(const std::vector<double>& cdf, double u) {
  for (size_t i = 0; i + 1 < cdf.size(); ++i)
    if (u < cdf[i]) return i;
  return cdf.size() - 1;
}

struct PlayerDecoder {
  std::vector<double> signal_cdf_per_action;  // flattened |A| x |S|
  size_t signal_count = 0;
  std::vector<int> signal_class;          // s -> action-class index
  std::vector<int> action_class;          // a -> class index
  std::vector<int> y_to_r;                // broadcast output -> essential idx
  std::vector<int> signature;             // class * nr + r -> action, or -1
  std::vector<int> fallback;              // s * ny + y -> action
};

}  // namespace

SimulationResult simulate_one_shot(const MonitoringInstance& inst,
                                   const EssentialRecoding& rec,
                                   uint64_t trials, uint64_t seed,
                                   unsigned threads,
                                   std::vector<TrialRecord>* records) {
  inst.validate();
  if (!inst.broadcast)
    throw std::invalid_argument("simulate_one_shot: no broadcast channel");
  if (trials == 0)
    throw std::invalid_argument("simulate_one_shot: at least one trial");
  if (threads == 0) threads = 1;

  const size_t K = inst.players.size();
  const size_t na = inst.actions.size();
  const size_t nq = inst.mediator_signals().size();
  const size_t nr = rec.essential_alphabet.size();
  const auto encoder = resolve_encoder(inst, rec);

  // r index and broadcast input per mediator signal.
  std::vector<size_t> r_of_q(nq), x_of_q(nq);
  for (size_t q = 0; q < nq; ++q) {
    const auto& color = rec.coloring.at(inst.mediator_signals()[q]);
    auto it = std::find(rec.essential_alphabet.begin(),
                        rec.essential_alphabet.end(), color);
    if (it == rec.essential_alphabet.end())
      throw std::invalid_argument("simulate_one_shot: incomplete recoding");
    r_of_q[q] = static_cast<size_t>(it - rec.essential_alphabet.begin());
    const auto& x_label = encoder.at(color);
    const auto& xs = inst.broadcast->inputs;
    x_of_q[q] =
        static_cast<size_t>(std::find(xs.begin(), xs.end(), x_label) -
                            xs.begin());
  }

  std::vector<double> strategy_cdf = cdf_of(inst.strategy.masses());
  std::vector<std::vector<double>> mediator_cdf(na);
  for (size_t a = 0; a < na; ++a)
    mediator_cdf[a] = cdf_of(inst.mediator.row(a).masses());
  const Channel& joint_f = inst.broadcast->joint;
  std::vector<std::vector<double>> broadcast_cdf(joint_f.inputs().size());
  for (size_t x = 0; x < joint_f.inputs().size(); ++x)
    broadcast_cdf[x] = cdf_of(joint_f.row(x).masses());

  // Decompose a joint broadcast outcome into per-player coordinates.
  std::vector<size_t> y_stride(K, 1), y_size(K);
  for (size_t i = 0; i < K; ++i) y_size[i] = inst.broadcast->outputs[i].size();
  for (size_t i = K; i-- > 1;) y_stride[i - 1] = y_stride[i] * y_size[i];

  SimulationResult result;
  result.trials = trials;
  result.seed = seed;
  result.x = Scalar::exact(0);
  result.y = Scalar::exact(0);
  result.z = Scalar::exact(0);

  std::vector<PlayerDecoder> decoders(K);
  for (size_t i = 0; i < K; ++i) {
    PlayerDecoder& dec = decoders[i];
    const Channel& g = inst.players[i].monitoring;
    const size_t ns = g.outputs().size();
    dec.signal_count = ns;
    dec.signal_cdf_per_action.resize(na * ns);
    for (size_t a = 0; a < na; ++a) {
      auto cdf = cdf_of(g.row(a).masses());
      std::copy(cdf.begin(), cdf.end(),
                dec.signal_cdf_per_action.begin() + static_cast<long>(a * ns));
    }

    auto coloring = check_xy_coloring(inst, i);
    if (coloring.x > result.x) result.x = coloring.x;
    result.y = coloring.y;
    dec.signal_class = coloring.x_detail.signal_class;
    dec.action_class = coloring.player_classes.action_class;

    const Channel leg = essential_to_player_channel(inst, rec, encoder, i);
    const auto zp = z_perfect(leg);
    if (zp.z > result.z) result.z = zp.z;
    dec.y_to_r.resize(y_size[i]);
    for (size_t y = 0; y < y_size[i]; ++y) {
      const auto& r_label = zp.witness.at(inst.broadcast->outputs[i][y]);
      auto it = std::find(rec.essential_alphabet.begin(),
                          rec.essential_alphabet.end(), r_label);
      dec.y_to_r[y] =
          static_cast<int>(it - rec.essential_alphabet.begin());
    }

    // Signature table: a class/color pair identifying a unique action.
    const size_t classes = coloring.player_classes.classes.size();
    dec.signature.assign(classes * nr, -1);
    const auto mediator_majority =
        equivalence_classes(inst.mediator, ClassMode::majority);
    for (size_t a = 0; a < na; ++a) {
      const auto& reps = mediator_majority.rep_sets[a];
      if (reps.size() != 1) continue;  // no unambiguous color for this action
      const auto& color = rec.coloring.at(reps.front());
      const size_t r = static_cast<size_t>(
          std::find(rec.essential_alphabet.begin(),
                    rec.essential_alphabet.end(), color) -
          rec.essential_alphabet.begin());
      int& cell =
          dec.signature[static_cast<size_t>(dec.action_class[a]) * nr + r];
      cell = cell == -1 ? static_cast<int>(a) : -2;  // -2: ambiguous
    }

    // Exact maximum-posterior fallback over (s, y), first action on ties.
    const Channel f_i = broadcast_marginal(inst, i);
    dec.fallback.assign(ns * y_size[i], 0);
    for (size_t s = 0; s < ns; ++s) {
      for (size_t y = 0; y < y_size[i]; ++y) {
        Scalar best = Scalar::exact(-1);
        size_t arg = 0;
        for (size_t a = 0; a < na; ++a) {
          Scalar relay = Scalar::exact(0);
          for (size_t q = 0; q < nq; ++q)
            relay += inst.mediator.prob(a, q) * f_i.prob(x_of_q[q], y);
          Scalar post = inst.strategy.mass(a) * g.prob(a, s) * relay;
          if (post > best) {
            best = post;
            arg = a;
          }
        }
        dec.fallback[s * y_size[i] + y] = static_cast<int>(arg);
      }
    }
  }
  result.bound = combined_error(result.x, result.y, result.z);

  if (records) records->assign(trials, TrialRecord{});

  auto run_range = [&](uint64_t begin, uint64_t end,
                       std::vector<uint64_t>& errors) {
    errors.assign(K, 0);
    for (uint64_t t = begin; t < end; ++t) {
      const size_t a = sample(strategy_cdf, uniform01(seed, t, 0));
      const size_t q = sample(mediator_cdf[a], uniform01(seed, t, 1));
      const size_t y_joint =
          sample(broadcast_cdf[x_of_q[q]], uniform01(seed, t, 2));
      if (records) {
        (*records)[t].trial = t;
        (*records)[t].action = inst.actions[a];
        (*records)[t].decoded.resize(K);
      }
      for (size_t i = 0; i < K; ++i) {
        const PlayerDecoder& dec = decoders[i];
        const size_t ns = dec.signal_count;
        const double us = uniform01(seed, t, 3 + i);
        size_t s = ns - 1;
        for (size_t c = 0; c + 1 < ns; ++c)
          if (us < dec.signal_cdf_per_action[a * ns + c]) {
            s = c;
            break;
          }
        const size_t y_i = (y_joint / y_stride[i]) % y_size[i];
        const int r_hat = dec.y_to_r[y_i];
        const int c_hat = dec.signal_class[s];
        int a_hat =
            dec.signature[static_cast<size_t>(c_hat) * nr +
                          static_cast<size_t>(r_hat)];
        if (a_hat < 0) a_hat = dec.fallback[s * y_size[i] + y_i];
        if (static_cast<size_t>(a_hat) != a) ++errors[i];
        if (records)
          (*records)[t].decoded[i] = inst.actions[static_cast<size_t>(a_hat)];
      }
    }
  };

  std::vector<std::vector<uint64_t>> chunk_errors(threads);
  if (threads == 1) {
    run_range(0, trials, chunk_errors[0]);
  } else {
    std::vector<std::thread> pool;
    const uint64_t per = (trials + threads - 1) / threads;
    for (unsigned c = 0; c < threads; ++c) {
      const uint64_t begin = std::min<uint64_t>(c * per, trials);
      const uint64_t end = std::min<uint64_t>(begin + per, trials);
      pool.emplace_back(run_range, begin, end, std::ref(chunk_errors[c]));
    }
    for (auto& th : pool) th.join();
  }

  result.error_counts.assign(K, 0);
  for (const auto& chunk : chunk_errors)
    for (size_t i = 0; i < chunk.size(); ++i) result.error_counts[i] += chunk[i];
  for (size_t i = 0; i < K; ++i)
    result.error_rates.push_back(static_cast<double>(result.error_counts[i]) /
                                 static_cast<double>(trials));
  if (trials >= 1000) {
    for (double e : result.error_rates)
      result.half_width_99.push_back(
          2.576 * std::sqrt(e * (1.0 - e) / static_cast<double>(trials)));
  }
  return result;
}

}  // namespace remon
