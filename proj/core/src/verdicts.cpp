#include "remon/verdicts.hpp"

#include <stdexcept>

#include "remon/info.hpp"

namespace remon {
namespace {

void require_broadcast(const MonitoringInstance& inst, const char* who) {
  if (!inst.broadcast)
    throw std::invalid_argument(std::string(who) +
                                ": instance has no broadcast channel");
}

std::vector<Channel> broadcast_marginals(const MonitoringInstance& inst) {
  std::vector<Channel> out;
  out.reserve(inst.players.size());
  for (size_t i = 0; i < inst.players.size(); ++i)
    out.push_back(broadcast_marginal(inst, i));
  return out;
}

// Shared part of the epsilon-perfect and one-shot checks: per-player
// coloring conditions and the worst-case (x, y) pair.
void run_coloring_checks(const MonitoringInstance& inst,
                         ConditionReport& report) {
  report.x = Scalar::exact(0);
  report.y = Scalar::exact(0);
  for (size_t i = 0; i < inst.players.size(); ++i) {
    auto check = check_xy_coloring(inst, i);
    if (!check.holds)
      for (const auto& reason : check.reasons)
        report.diagnostics.push_back("player '" + inst.players[i].name +
                                     "' coloring condition: " + reason);
    report.per_player_x.push_back(check.x);
    if (check.x > report.x) report.x = check.x;
    report.y = check.y;  // player independent
    report.coloring_checks.push_back(std::move(check));
  }
}

bool all_coloring_hold(const ConditionReport& report) {
  for (const auto& c : report.coloring_checks)
    if (!c.holds) return false;
  return true;
}

void run_rate_condition(const MonitoringInstance& inst, ClassMode mode,
                        ConditionReport& report) {
  report.recoding = essential_recoding(inst, mode);
  const auto rate = essential_rate(inst, *report.recoding);
  report.rate_bits = rate.rate;
  report.capacity = common_message_capacity(broadcast_marginals(inst));
  report.price = prices(inst, *report.recoding);
  if (!check_rate_condition(rate.rate, *report.capacity))
    report.diagnostics.push_back(
        "essential rate " + std::to_string(rate.rate) +
        " bits exceeds the common-message capacity " +
        std::to_string(report.capacity->C0) + " bits");
}

}  // namespace

ConditionReport check_epsilon_perfect(const MonitoringInstance& inst,
                                      const Scalar& epsilon) {
  inst.validate();
  require_broadcast(inst, "check_epsilon_perfect");

  ConditionReport report;
  report.kind = CheckKind::epsilon_perfect;
  report.definitive = false;

  run_coloring_checks(inst, report);
  report.epsilon_bound = report.x + report.y - report.x * report.y;
  const bool bound_ok = report.epsilon_bound <= epsilon;
  if (!bound_ok)
    report.diagnostics.push_back("x+y-xy = " + report.epsilon_bound.str() +
                                 " exceeds epsilon = " + epsilon.str());
  const bool condition1 = all_coloring_hold(report) && bound_ok;

  const size_t before = report.diagnostics.size();
  run_rate_condition(inst, ClassMode::majority, report);
  const bool condition2 = report.diagnostics.size() == before;

  report.holds = condition1 && condition2;
  return report;
}

ConditionReport check_perfect(const MonitoringInstance& inst) {
  inst.validate();
  require_broadcast(inst, "check_perfect");

  ConditionReport report;
  report.kind = CheckKind::perfect;
  report.definitive = true;
  report.x = Scalar::exact(0);
  report.y = Scalar::exact(0);
  report.epsilon_bound = Scalar::exact(0);

  report.painting = check_painting(inst);
  if (!report.painting->holds)
    for (const auto& v : report.painting->violations)
      report.diagnostics.push_back(
          "mediator supports overlap on actions '" + v.a + "' and '" + v.b +
          "', confusable for player '" + inst.players[v.player].name + "'");

  const size_t before = report.diagnostics.size();
  run_rate_condition(inst, ClassMode::support, report);
  const bool condition2 = report.diagnostics.size() == before;

  report.holds = report.painting->holds && condition2;
  return report;
}

Scalar combined_error(const Scalar& x, const Scalar& y, const Scalar& z) {
  const Scalar one = Scalar::exact(1);
  for (const Scalar* v : {&x, &y, &z})
    if (v->is_negative() || *v > one)
      throw std::invalid_argument("combined_error: arguments must lie in [0,1]");
  return one - (one - x) * (one - y) * (one - z);
}

std::map<std::string, std::string> resolve_encoder(
    const MonitoringInstance& inst, const EssentialRecoding& rec) {
  if (!inst.broadcast)
    throw std::invalid_argument("resolve_encoder: no broadcast channel");
  const auto& x_labels = inst.broadcast->inputs;
  std::map<std::string, std::string> encoder;
  for (const auto& r : rec.essential_alphabet) {
    std::string image;
    if (inst.encoder) {
      auto it = inst.encoder->find(r);
      if (it == inst.encoder->end())
        throw std::invalid_argument("encoder not total: no image for '" + r +
                                    "'");
      image = it->second;
    } else {
      image = r;  // identity when the labels coincide
    }
    if (std::find(x_labels.begin(), x_labels.end(), image) == x_labels.end())
      throw std::invalid_argument("encoder image '" + image +
                                  "' is not a broadcast input symbol");
    encoder[r] = image;
  }
  return encoder;
}

Channel essential_to_player_channel(
    const MonitoringInstance& inst, const EssentialRecoding& rec,
    const std::map<std::string, std::string>& encoder, size_t player) {
  const Channel marginal = broadcast_marginal(inst, player);
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(rec.essential_alphabet.size());
  for (const auto& r : rec.essential_alphabet) {
    const size_t x = marginal.input_index(encoder.at(r));
    std::vector<Scalar> row;
    row.reserve(marginal.outputs().size());
    for (size_t y = 0; y < marginal.outputs().size(); ++y)
      row.push_back(marginal.prob(x, y));
    rows.push_back(std::move(row));
  }
  return Channel(rec.essential_alphabet, marginal.outputs(), std::move(rows));
}

ConditionReport check_one_shot(const MonitoringInstance& inst,
                               const Scalar& epsilon) {
  inst.validate();
  require_broadcast(inst, "check_one_shot");

  ConditionReport report;
  report.kind = CheckKind::one_shot;
  report.definitive = false;

  run_coloring_checks(inst, report);
  report.recoding = essential_recoding(inst, ClassMode::majority);
  const auto encoder = resolve_encoder(inst, *report.recoding);

  Scalar z = Scalar::exact(0);
  for (size_t i = 0; i < inst.players.size(); ++i) {
    const Channel leg =
        essential_to_player_channel(inst, *report.recoding, encoder, i);
    const auto zp = z_perfect(leg);
    if (zp.z > z) z = zp.z;
  }
  report.z = z;
  report.epsilon_bound = combined_error(report.x, report.y, z);
  const bool bound_ok = report.epsilon_bound <= epsilon;
  if (!bound_ok)
    report.diagnostics.push_back(
        "combined one-shot error " + report.epsilon_bound.str() +
        " exceeds epsilon = " + epsilon.str());

  const auto rate = essential_rate(inst, *report.recoding);
  report.rate_bits = rate.rate;
  report.capacity = common_message_capacity(broadcast_marginals(inst));
  report.price = prices(inst, *report.recoding);

  report.holds = all_coloring_hold(report) && bound_ok;
  return report;
}

}  // namespace remon
