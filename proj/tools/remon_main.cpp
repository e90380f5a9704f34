// remon: decides whether a mediator relay can re-establish perfect or
// almost-perfect monitoring for a game's players, and prices the signalling.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "remon/confusion.hpp"
#include "remon/graph.hpp"
#include "remon/instance_io.hpp"
#include "remon/powergame.hpp"
#include "remon/report.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitNotEstablished = 1;
constexpr int kExitError = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

void export_dot(const remon::InstanceDocument& doc, remon::ClassMode mode,
                const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const auto& inst = doc.instance;
  for (const auto& player : inst.players) {
    const remon::UndirectedGraph g =
        mode == remon::ClassMode::majority
            ? remon::auxiliary_graph(remon::equivalence_classes(
                  player.monitoring, remon::ClassMode::majority))
            : remon::support_graph(player.monitoring);
    std::ofstream out(fs::path(dir) / ("auxiliary_" + player.name + ".dot"));
    out << g.to_dot("auxiliary_" + player.name);
  }
  std::ofstream out(fs::path(dir) / "bi_auxiliary.dot");
  out << remon::bi_auxiliary_graph(inst, mode).to_dot("bi_auxiliary");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monitoring-structure analysis with a mediator relay"};
  app.require_subcommand(1);

  std::string file, output, mode_name = "majority", epsilon_text, dot_dir;
  std::string trial_csv;
  bool force_float = false, oneshot = false;
  double tolerance = 1e-9;
  uint64_t trials = 0, seed = 0;
  unsigned threads = 1;

  auto* validate = app.add_subcommand("validate", "check an instance file");
  validate->add_option("file", file, "instance JSON")->required();
  validate->add_flag("--float", force_float, "parse all values as doubles");
  validate->add_option("--tolerance", tolerance,
                       "stochasticity tolerance for float data");

  auto* analyze = app.add_subcommand("analyze", "analyze an instance file");
  analyze->add_option("file", file, "instance JSON")->required();
  analyze->add_option("--mode", mode_name, "majority|support")
      ->check(CLI::IsMember({"majority", "support"}));
  analyze->add_option("--epsilon", epsilon_text,
                      "target precision, e.g. 19/100 or 0.19");
  analyze->add_flag("--oneshot", oneshot, "check one-shot reconstruction");
  analyze->add_option("--simulate", trials, "Monte Carlo trials");
  analyze->add_option("--seed", seed, "simulation seed");
  analyze->add_option("--threads", threads, "simulation threads");
  analyze->add_option("--trial-csv", trial_csv,
                      "write per-trial simulation outcomes here");
  analyze->add_flag("--float", force_float, "parse all values as doubles");
  analyze->add_option("--tolerance", tolerance,
                      "stochasticity tolerance for float data");
  analyze->add_option("--dot-graphs", dot_dir,
                      "directory for DOT exports of the graphs");
  analyze->add_option("-o,--output", output, "write the report here");

  auto* example = app.add_subcommand("example", "emit a bundled example");
  example->require_subcommand(1);

  std::string x_text = "1/10", xp_text = "1/10", y_text = "1/10";
  std::string broadcast_kind = "noiseless";
  auto* pd = example->add_subcommand("pd", "the bundled dilemma instance");
  pd->add_option("--x", x_text, "player 1 monitoring noise");
  pd->add_option("--xp", xp_text, "player 2 monitoring noise");
  pd->add_option("--y", y_text, "mediator observation noise");
  pd->add_option("--broadcast", broadcast_kind,
                 "noiseless | bsc:<flip> | none");
  pd->add_option("-o,--output", output, "write the instance here");

  double p1 = 0.0, p2 = 0.0;
  remon::PowerGameParams params;
  auto* powergame =
      example->add_subcommand("powergame", "energy-efficiency utilities");
  powergame->add_option("--p1", p1, "transmit power of player 1")->required();
  powergame->add_option("--p2", p2, "transmit power of player 2")->required();
  powergame->add_option("--M", params.m_symbols, "sigmoid exponent");
  powergame->add_option("--N", params.spreading, "spreading factor");
  powergame->add_option("--g1", params.gain1_sq, "squared gain of player 1");
  powergame->add_option("--g2", params.gain2_sq, "squared gain of player 2");
  powergame->add_option("--sigma2", params.noise_var, "noise variance");

  CLI11_PARSE(app, argc, argv);

  try {
    const remon::ParseOptions parse_opts{force_float, tolerance};

    if (validate->parsed()) {
      try {
        remon::load_instance(file, parse_opts);
      } catch (const std::exception& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kExitError;
      }
      std::cout << "valid\n";
      return kExitHolds;
    }

    if (analyze->parsed()) {
      const auto doc = remon::load_instance(file, parse_opts);
      remon::AnalyzeOptions opts;
      opts.mode = mode_name == "support" ? remon::ClassMode::support
                                         : remon::ClassMode::majority;
      if (!epsilon_text.empty()) opts.epsilon = remon::Scalar::parse(epsilon_text);
      opts.one_shot = oneshot;
      if (trials > 0) opts.simulate_trials = trials;
      opts.seed = seed;
      opts.threads = threads;
      std::vector<remon::TrialRecord> records;
      if (!trial_csv.empty() && trials > 0) opts.trial_records = &records;
      const auto result = remon::analyze(doc, opts);
      if (!dot_dir.empty()) export_dot(doc, opts.mode, dot_dir);
      if (opts.trial_records) {
        std::ofstream csv(trial_csv);
        if (!csv) throw std::invalid_argument("cannot write '" + trial_csv + "'");
        csv << "trial,action";
        for (const auto& p : doc.instance.players)
          csv << ",decoded_" << p.name;
        csv << "\n";
        for (const auto& r : records) {
          csv << r.trial << "," << r.action;
          for (const auto& d : r.decoded) csv << "," << d;
          csv << "\n";
        }
      }
      write_output(result.report_json, output);
      return result.primary_holds ? kExitHolds : kExitNotEstablished;
    }

    if (pd->parsed()) {
      remon::PdOptions opts;
      opts.x = remon::Scalar::parse(x_text);
      opts.xp = remon::Scalar::parse(xp_text);
      opts.y = remon::Scalar::parse(y_text);
      if (broadcast_kind == "none") {
        opts.broadcast = remon::PdBroadcast::none;
      } else if (broadcast_kind == "noiseless") {
        opts.broadcast = remon::PdBroadcast::noiseless;
      } else if (broadcast_kind.rfind("bsc:", 0) == 0) {
        opts.broadcast = remon::PdBroadcast::bsc;
        opts.bsc_flip = remon::Scalar::parse(broadcast_kind.substr(4));
      } else {
        throw std::invalid_argument("unknown broadcast kind '" +
                                    broadcast_kind + "'");
      }
      write_output(remon::serialize_instance(remon::pd_document(opts)),
                   output);
      return kExitHolds;
    }

    if (powergame->parsed()) {
      const auto r = remon::evaluate_power_game(p1, p2, params);
      nlohmann::ordered_json j;
      j["p1"] = p1;
      j["p2"] = p2;
      j["sinr1"] = r.sinr1;
      j["sinr2"] = r.sinr2;
      j["u1"] = r.u1;
      j["u2"] = r.u2;
      std::cout << j.dump(2) << "\n";
      return kExitHolds;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
