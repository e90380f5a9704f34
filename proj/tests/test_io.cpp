#include <doctest.h>

#include <json.hpp>

#include "remon/info.hpp"
#include "remon/instance_io.hpp"
#include "remon/powergame.hpp"
#include "remon/report.hpp"
#include "test_util.hpp"

using namespace remon;
using test::q;
using json = nlohmann::json;

TEST_CASE("bundled instance round-trips and validates") {
  const auto doc = pd_document();
  const auto text = serialize_instance(doc);
  const auto parsed = parse_instance(text);
  CHECK(parsed.instance.actions == doc.instance.actions);
  CHECK(parsed.instance.mediator.prob("CC", "q1") == q(9, 10));
  CHECK(parsed.instance.broadcast.has_value());
  CHECK(parsed.reference.size() == doc.reference.size());
  CHECK(serialize_instance(parsed) == text);
}

TEST_CASE("bundled instance emits for other legal parameters") {
  for (const auto& [x, y] : std::initializer_list<std::pair<Scalar, Scalar>>{
           {q(0), q(0)}, {q(1, 4), q(1, 5)}, {q(2, 5), q(1, 10)}}) {
    PdOptions opts;
    opts.x = x;
    opts.xp = x;
    opts.y = y;
    const auto doc = pd_document(opts);
    CHECK_NOTHROW(parse_instance(serialize_instance(doc)));
  }
}

TEST_CASE("parse failures carry the first violation") {
  auto doc = json::parse(serialize_instance(pd_document()));

  SUBCASE("row not stochastic") {
    doc["players"][0]["monitoring"][0][0] = 0.5;
    doc["players"][0]["monitoring"][0][1] = 0.4;
    CHECK_THROWS_WITH_AS(parse_instance(doc.dump()),
                         doctest::Contains("sum"), std::invalid_argument);
  }
  SUBCASE("strategy of the wrong length") {
    doc["strategy"] = {"1/2", "1/2"};
    CHECK_THROWS_AS(parse_instance(doc.dump()), std::invalid_argument);
  }
  SUBCASE("missing key") {
    doc.erase("mediator");
    CHECK_THROWS_WITH_AS(parse_instance(doc.dump()),
                         doctest::Contains("mediator"), std::invalid_argument);
  }
  SUBCASE("malformed rational") {
    doc["strategy"][0] = "4/0";
    CHECK_THROWS_AS(parse_instance(doc.dump()), std::invalid_argument);
  }
  SUBCASE("broadcast width mismatch") {
    doc["broadcast"]["transition"][0] = {"1", "0", "0"};
    CHECK_THROWS_AS(parse_instance(doc.dump()), std::invalid_argument);
  }
}

TEST_CASE("force-float parsing degrades every cell") {
  const auto text = serialize_instance(pd_document());
  ParseOptions opts;
  opts.force_float = true;
  const auto doc = parse_instance(text, opts);
  CHECK_FALSE(doc.instance.strategy.mass(0).is_exact());
  CHECK(doc.instance.strategy.mass(0).value() ==
        doctest::Approx(4.0 / 9.0));
}

TEST_CASE("analysis report carries the exact rationals and the reference "
          "flag") {
  const auto doc = pd_document();
  AnalyzeOptions opts;
  opts.epsilon = q(19, 100);
  const auto result = analyze(doc, opts);
  CHECK(result.primary_holds);
  CHECK(result.primary_verdict == "epsilon_perfect");

  CHECK(result.report_json.find("\"49/90\"") != std::string::npos);
  CHECK(result.report_json.find("\"41/90\"") != std::string::npos);
  CHECK(result.report_json.find("\"353/490\"") != std::string::npos);

  const auto report = json::parse(result.report_json);
  CHECK(report["epsilon_bound"] == "19/100");
  CHECK(report["verdicts"]["epsilon_perfect"]["holds"] == true);
  CHECK(report["verdicts"]["perfect"]["holds"] == false);

  bool rate_flagged = false, entropy_matched = false;
  for (const auto& ref : report["reference_check"]) {
    if (ref["name"] == "essential_rate_bits") {
      CHECK(ref["status"] == "differs");
      CHECK(ref.contains("note"));
      rate_flagged = true;
    }
    if (ref["name"] == "strategy_entropy_bits") {
      CHECK(ref["status"] == "matches");
      entropy_matched = true;
    }
  }
  CHECK(rate_flagged);
  CHECK(entropy_matched);
}

TEST_CASE("reports are byte-stable across runs") {
  const auto doc = pd_document();
  AnalyzeOptions opts;
  opts.epsilon = q(19, 100);
  opts.simulate_trials = 2000;
  opts.seed = 5;
  const auto a = analyze(doc, opts);
  const auto b = analyze(doc, opts);
  CHECK(a.report_json == b.report_json);

  opts.threads = 4;
  const auto c = analyze(doc, opts);
  CHECK(a.report_json == c.report_json);
}

TEST_CASE("noiseless bundle: the perfect-monitoring verdict drives the exit") {
  PdOptions pd_opts;
  pd_opts.x = pd_opts.xp = pd_opts.y = q(0);
  const auto doc = pd_document(pd_opts);
  const auto result = analyze(doc, AnalyzeOptions{});
  CHECK(result.primary_verdict == "perfect");
  CHECK(result.primary_holds);
  const auto report = json::parse(result.report_json);
  CHECK(report["prices"]["prpm_infinity"].get<double>() ==
        doctest::Approx(0.5).epsilon(1e-3));
  for (const auto& ref : report["reference_check"])
    CHECK(ref["status"] == "matches");
}

TEST_CASE("one-shot analysis over a BSC broadcast reports the 0.271 bound") {
  PdOptions pd_opts;
  pd_opts.broadcast = PdBroadcast::bsc;
  pd_opts.bsc_flip = q(1, 10);
  const auto doc = pd_document(pd_opts);
  AnalyzeOptions opts;
  opts.one_shot = true;
  opts.epsilon = q(271, 1000);
  const auto result = analyze(doc, opts);
  const auto report = json::parse(result.report_json);
  CHECK(report["verdicts"]["one_shot"]["epsilon_bound"] == "271/1000");
  CHECK(report["verdicts"]["one_shot"]["holds"] == true);
  CHECK(result.primary_verdict == "one_shot");
}

TEST_CASE("analysis without a broadcast falls back to the coloring verdict") {
  PdOptions pd_opts;
  pd_opts.broadcast = PdBroadcast::none;
  const auto doc = pd_document(pd_opts);
  const auto result = analyze(doc, AnalyzeOptions{});
  CHECK(result.primary_verdict == "coloring");
  CHECK(result.primary_holds);
  const auto report = json::parse(result.report_json);
  CHECK(report["verdicts"].empty());
  CHECK_FALSE(report.contains("capacity"));
}

TEST_CASE("power game utilities") {
  const auto symmetric = evaluate_power_game(1.0, 1.0);
  CHECK(symmetric.sinr1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(symmetric.u1 == doctest::Approx(symmetric.u2).epsilon(1e-12));
  CHECK(symmetric.u1 == doctest::Approx(0.23676290005054274).epsilon(1e-9));

  // No interference when the other player is silent-ish: SINR -> p g^2 / s^2.
  PowerGameParams params;
  params.spreading = 2.0;
  const auto lopsided = evaluate_power_game(1.0, 1e-12, params);
  CHECK(lopsided.sinr1 == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(evaluate_power_game(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_power_game(1.0, -2.0), std::invalid_argument);
}
