#include "remon/essential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "remon/graph.hpp"
#include "remon/info.hpp"

namespace remon {

EssentialRecoding essential_recoding(const MonitoringInstance& inst,
                                     ClassMode mode) {
  const UndirectedGraph graph = bi_auxiliary_graph(inst, mode);
  const Coloring coloring = minimal_coloring(graph);

  std::vector<std::string> alphabet;
  alphabet.reserve(static_cast<size_t>(coloring.count));
  for (int c = 0; c < coloring.count; ++c)
    alphabet.push_back("r" + std::to_string(c + 1));
  std::map<std::string, std::string> color_map;
  for (size_t q = 0; q < graph.vertex_count(); ++q)
    color_map[graph.vertices()[q]] =
        alphabet[static_cast<size_t>(coloring.color[q])];
  Channel recoded = push_forward(inst.mediator, color_map);
  return EssentialRecoding{std::move(color_map), std::move(alphabet),
                           std::move(recoded)};
}

Distribution essential_distribution(const MonitoringInstance& inst,
                                    const EssentialRecoding& rec) {
  return push_through(inst.strategy, rec.recoded);
}

InducedTransition induced_transition(const MonitoringInstance& inst,
                                     const EssentialRecoding& rec,
                                     size_t player) {
  const auto joint = induced_joint(inst, rec, player);
  const std::vector<std::string> pair{"r", "s"};
  const auto rs = joint.marginal_joint(pair);
  const auto& r_labels = rs.factors()[0].labels;
  const auto& s_labels = rs.factors()[1].labels;

  std::vector<std::string> kept, dropped;
  std::vector<std::vector<Scalar>> rows;
  for (size_t r = 0; r < r_labels.size(); ++r) {
    Scalar total = Scalar::exact(0);
    std::vector<Scalar> row;
    for (size_t s = 0; s < s_labels.size(); ++s) {
      const auto& m = rs.mass_at(std::vector<size_t>{r, s});
      total += m;
      row.push_back(m);
    }
    if (total.is_zero()) {
      dropped.push_back(r_labels[r]);
      continue;
    }
    for (auto& cell : row) cell = cell / total;
    kept.push_back(r_labels[r]);
    rows.push_back(std::move(row));
  }
  if (kept.empty())
    throw std::invalid_argument(
        "induced_transition: every essential symbol has zero mass");
  return InducedTransition{Channel(std::move(kept), s_labels, std::move(rows)),
                           std::move(dropped)};
}

EssentialRate essential_rate(const MonitoringInstance& inst,
                             const EssentialRecoding& rec) {
  EssentialRate out;
  for (size_t i = 0; i < inst.players.size(); ++i) {
    const auto joint = induced_joint(inst, rec, i);
    out.per_player.push_back(conditional_entropy(joint, "r", "s"));
  }
  out.rate = *std::max_element(out.per_player.begin(), out.per_player.end());
  return out;
}

PriceReport prices(const MonitoringInstance& inst,
                   const EssentialRecoding& rec) {
  PriceReport report;
  const auto rate = essential_rate(inst, rec);
  report.rate_bits = rate.rate;
  report.source_bits = entropy(inst.strategy);
  report.action_symbols = inst.actions.size();

  const Distribution r_dist = essential_distribution(inst, rec);
  size_t reachable = 0;
  for (size_t r = 0; r < r_dist.size(); ++r)
    if (!r_dist.mass(r).is_zero()) ++reachable;
  report.essential_symbols = reachable;
  report.preepm_oneshot =
      std::log2(static_cast<double>(reachable)) /
      std::log2(static_cast<double>(report.action_symbols));

  if (report.source_bits > 0.0) {
    report.preepm_infinity = report.rate_bits / report.source_bits;
    report.prpm_infinity = report.preepm_infinity;
  }
  return report;
}

}  // namespace remon
