#include "remon/report.hpp"

#include <cmath>
#include <map>

#include <json.hpp>

#include "remon/capacity.hpp"
#include "remon/essential.hpp"
#include "remon/graph.hpp"
#include "remon/info.hpp"
#include "remon/simulate.hpp"
#include "remon/verdicts.hpp"

namespace remon {
namespace {

using json = nlohmann::ordered_json;

json scalar_to(const Scalar& s) {
  if (s.is_exact()) return json(s.str());
  return json(s.value());
}

json graph_to(const UndirectedGraph& g) {
  json j;
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& [a, b] : g.edge_labels())
    edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

json classes_to(const std::vector<std::vector<std::string>>& classes) {
  json j = json::array();
  for (const auto& c : classes) j.push_back(c);
  return j;
}

json prices_to(const PriceReport& p) {
  json j;
  j["preepm_infinity"] =
      p.preepm_infinity ? json(*p.preepm_infinity) : json(nullptr);
  j["prpm_infinity"] = p.prpm_infinity ? json(*p.prpm_infinity) : json(nullptr);
  j["preepm_oneshot"] = p.preepm_oneshot;
  j["rate_bits"] = p.rate_bits;
  j["source_bits"] = p.source_bits;
  j["essential_symbols"] = p.essential_symbols;
  j["action_symbols"] = p.action_symbols;
  return j;
}

json verdict_to(const ConditionReport& report, const MonitoringInstance& inst) {
  json j;
  j["holds"] = report.holds;
  j["definitive"] = report.definitive;
  j["status"] = report.holds
                    ? "conditions hold"
                    : (report.definitive ? "not reconstructible"
                                         : "conditions not established");
  if (report.kind == CheckKind::perfect)
    j["scope"] =
        "the painting condition is strategy-independent; the rate condition "
        "uses the instance's strategy";
  json per_player = json::array();
  for (size_t i = 0; i < report.per_player_x.size(); ++i)
    per_player.push_back(
        {{"player", inst.players[i].name},
         {"x", scalar_to(report.per_player_x[i])}});
  if (!per_player.empty()) j["per_player_x"] = std::move(per_player);
  j["x"] = scalar_to(report.x);
  j["y"] = scalar_to(report.y);
  if (report.z) j["z"] = scalar_to(*report.z);
  j["epsilon_bound"] = scalar_to(report.epsilon_bound);
  if (report.rate_bits) j["rate_bits"] = *report.rate_bits;
  if (report.capacity) {
    j["capacity_bits"] = report.capacity->C0;
    j["capacity_certified_gap"] = report.capacity->certified_gap;
  }
  if (report.price) j["prices"] = prices_to(*report.price);
  j["diagnostics"] = report.diagnostics;
  return j;
}

}  // namespace

AnalyzeResult analyze(const InstanceDocument& doc, const AnalyzeOptions& opts) {
  const MonitoringInstance& inst = doc.instance;
  inst.validate();

  json report;
  {
    json meta;
    meta["actions"] = inst.actions;
    json players = json::array();
    for (const auto& p : inst.players) players.push_back(p.name);
    meta["players"] = std::move(players);
    meta["mediator_signals"] = inst.mediator_signals();
    meta["has_broadcast"] = inst.broadcast.has_value();
    meta["mode"] = opts.mode == ClassMode::majority ? "majority" : "support";
    report["instance"] = std::move(meta);
  }

  const double source_bits = entropy(inst.strategy);
  report["strategy_entropy_bits"] = source_bits;

  // Per-player (x,y)-coloring conditions; majority classes by definition.
  std::vector<XYColoringResult> coloring;
  bool all_coloring_hold = true;
  Scalar worst_x = Scalar::exact(0), y = Scalar::exact(0);
  {
    json arr = json::array();
    for (size_t i = 0; i < inst.players.size(); ++i) {
      auto check = check_xy_coloring(inst, i);
      json cj;
      cj["player"] = inst.players[i].name;
      cj["holds"] = check.holds;
      cj["x"] = scalar_to(check.x);
      cj["y"] = scalar_to(check.y);
      cj["classes"] = classes_to(check.player_classes.classes);
      cj["mediator_classes"] = classes_to(check.mediator_classes.classes);
      cj["reasons"] = check.reasons;
      arr.push_back(std::move(cj));
      all_coloring_hold = all_coloring_hold && check.holds;
      if (check.x > worst_x) worst_x = check.x;
      y = check.y;
      coloring.push_back(std::move(check));
    }
    report["coloring_conditions"] = std::move(arr);
  }
  const Scalar epsilon_bound = worst_x + y - worst_x * y;
  report["epsilon_bound"] = scalar_to(epsilon_bound);

  {
    json graphs;
    json aux = json::array();
    for (size_t i = 0; i < inst.players.size(); ++i) {
      const UndirectedGraph g =
          opts.mode == ClassMode::majority
              ? auxiliary_graph(
                    equivalence_classes(inst.players[i].monitoring,
                                        ClassMode::majority))
              : support_graph(inst.players[i].monitoring);
      json gj = graph_to(g);
      gj["player"] = inst.players[i].name;
      aux.push_back(std::move(gj));
    }
    graphs["auxiliary"] = std::move(aux);
    graphs["bi_auxiliary"] = graph_to(bi_auxiliary_graph(inst, opts.mode));
    report["graphs"] = std::move(graphs);
  }

  const EssentialRecoding rec = essential_recoding(inst, opts.mode);
  const Distribution r_dist = essential_distribution(inst, rec);
  {
    json rj;
    json cmap = json::object();
    for (const auto& q : inst.mediator_signals()) cmap[q] = rec.coloring.at(q);
    rj["coloring"] = std::move(cmap);
    rj["essential_alphabet"] = rec.essential_alphabet;
    json dist = json::object();
    for (size_t r = 0; r < r_dist.size(); ++r)
      dist[r_dist.labels()[r]] = scalar_to(r_dist.mass(r));
    rj["essential_distribution"] = std::move(dist);
    report["recoding"] = std::move(rj);
  }
  const double essential_entropy = entropy(r_dist);
  report["essential_entropy_bits"] = essential_entropy;

  {
    json arr = json::array();
    for (size_t i = 0; i < inst.players.size(); ++i) {
      const auto transition = induced_transition(inst, rec, i);
      json tj;
      tj["player"] = inst.players[i].name;
      tj["inputs"] = transition.channel.inputs();
      tj["outputs"] = transition.channel.outputs();
      json rows = json::array();
      for (size_t r = 0; r < transition.channel.inputs().size(); ++r) {
        json row = json::array();
        for (size_t s = 0; s < transition.channel.outputs().size(); ++s)
          row.push_back(scalar_to(transition.channel.prob(r, s)));
        rows.push_back(std::move(row));
      }
      tj["rows"] = std::move(rows);
      tj["dropped"] = transition.dropped;
      arr.push_back(std::move(tj));
    }
    report["transitions"] = std::move(arr);
  }

  const EssentialRate rate = essential_rate(inst, rec);
  {
    json rj;
    rj["per_player_bits"] = rate.per_player;
    rj["H_bits"] = rate.rate;
    report["essential_rate"] = std::move(rj);
  }

  const PriceReport price = prices(inst, rec);
  report["prices"] = prices_to(price);

  {
    const auto painting = check_painting(inst);
    json pj;
    pj["holds"] = painting.holds;
    json viols = json::array();
    for (const auto& v : painting.violations)
      viols.push_back({{"player", inst.players[v.player].name},
                       {"a", v.a},
                       {"b", v.b}});
    pj["violations"] = std::move(viols);
    report["painting"] = std::move(pj);
  }

  std::optional<CapacityResult> capacity;
  if (inst.broadcast) {
    std::vector<Channel> marginals;
    for (size_t i = 0; i < inst.players.size(); ++i)
      marginals.push_back(broadcast_marginal(inst, i));
    capacity = common_message_capacity(marginals);
    json cj;
    cj["C0_bits"] = capacity->C0;
    json input = json::object();
    for (size_t x = 0; x < capacity->optimal_input.size(); ++x)
      input[capacity->optimal_input.labels()[x]] =
          capacity->optimal_input.mass(x).value();
    cj["optimal_input"] = std::move(input);
    cj["per_player_mi_bits"] = capacity->per_player_mi;
    cj["iterations"] = capacity->iterations;
    cj["certified_gap"] = capacity->certified_gap;
    cj["rate_condition"] = check_rate_condition(rate.rate, *capacity);
    report["capacity"] = std::move(cj);
  }

  // Verdicts.
  json verdicts = json::object();
  std::string primary = "coloring";
  bool primary_holds = all_coloring_hold;
  if (inst.broadcast) {
    const auto perfect = check_perfect(inst);
    verdicts["perfect"] = verdict_to(perfect, inst);
    primary = "perfect";
    primary_holds = perfect.holds;
    if (opts.epsilon) {
      const auto eps = check_epsilon_perfect(inst, *opts.epsilon);
      json v = verdict_to(eps, inst);
      v["epsilon"] = scalar_to(*opts.epsilon);
      verdicts["epsilon_perfect"] = std::move(v);
      primary = "epsilon_perfect";
      primary_holds = eps.holds;
    }
    if (opts.one_shot) {
      // Without a target epsilon the verdict reports the achievable bound
      // and checks the structural conditions alone.
      const Scalar eps = opts.epsilon ? *opts.epsilon : Scalar::exact(1);
      const auto oneshot = check_one_shot(inst, eps);
      json v = verdict_to(oneshot, inst);
      v["epsilon"] = opts.epsilon ? scalar_to(*opts.epsilon) : json(nullptr);
      verdicts["one_shot"] = std::move(v);
      primary = "one_shot";
      primary_holds = oneshot.holds;
    }
  }
  report["verdicts"] = std::move(verdicts);
  report["primary_verdict"] = primary;

  // Documented reference figures, confirmed or flagged.
  if (!doc.reference.empty()) {
    std::map<std::string, double> computed{
        {"strategy_entropy_bits", source_bits},
        {"essential_entropy_bits", essential_entropy},
        {"essential_rate_bits", rate.rate},
        {"epsilon_bound", epsilon_bound.value()},
        {"preepm_oneshot", price.preepm_oneshot},
    };
    if (price.preepm_infinity) {
      computed["preepm_infinity"] = *price.preepm_infinity;
      computed["prpm_infinity"] = *price.prpm_infinity;
    }
    if (capacity) computed["C0_bits"] = capacity->C0;
    json checks = json::array();
    for (const auto& ref : doc.reference) {
      json rj;
      rj["name"] = ref.name;
      rj["documented"] = ref.value;
      auto it = computed.find(ref.name);
      if (it == computed.end()) {
        rj["status"] = "unknown-metric";
      } else {
        rj["computed"] = it->second;
        rj["status"] = std::abs(it->second - ref.value) <= ref.tolerance
                           ? "matches"
                           : "differs";
      }
      if (!ref.note.empty()) rj["note"] = ref.note;
      checks.push_back(std::move(rj));
    }
    report["reference_check"] = std::move(checks);
  }
  if (!doc.notes.empty()) report["notes"] = doc.notes;

  if (opts.simulate_trials) {
    const auto sim = simulate_one_shot(inst, rec, *opts.simulate_trials,
                                       opts.seed, opts.threads,
                                       opts.trial_records);
    json sj;
    sj["trials"] = sim.trials;
    sj["seed"] = sim.seed;
    json players = json::array();
    for (size_t i = 0; i < inst.players.size(); ++i) {
      json pj;
      pj["player"] = inst.players[i].name;
      pj["errors"] = sim.error_counts[i];
      pj["error_rate"] = sim.error_rates[i];
      if (!sim.half_width_99.empty())
        pj["half_width_99"] = sim.half_width_99[i];
      players.push_back(std::move(pj));
    }
    sj["per_player"] = std::move(players);
    sj["bound"] = scalar_to(sim.bound);
    sj["x"] = scalar_to(sim.x);
    sj["y"] = scalar_to(sim.y);
    sj["z"] = scalar_to(sim.z);
    report["simulation"] = std::move(sj);
  }

  return AnalyzeResult{report.dump(2) + "\n", primary_holds, primary};
}

}  // namespace remon
