#include <doctest.h>

#include <cmath>

#include "remon/distribution.hpp"
#include "remon/info.hpp"
#include "test_util.hpp"

using namespace remon;
using test::q;

TEST_CASE("scalar parses rationals and decimals") {
  CHECK(Scalar::parse("353/490") == q(353, 490));
  CHECK(Scalar::parse("3").is_exact());
  CHECK(Scalar::parse("3") == q(3));
  CHECK_FALSE(Scalar::parse("0.9").is_exact());
  CHECK(Scalar::parse("0.9").value() == doctest::Approx(0.9));
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("banana"), std::invalid_argument);
  CHECK(Scalar::parse(" 2/4 ").str() == "1/2");
}

TEST_CASE("scalar arithmetic keeps exactness and drops it on mixing") {
  const Scalar a = q(1, 3), b = q(1, 6);
  CHECK((a + b) == q(1, 2));
  CHECK((a + b).is_exact());
  CHECK((a * b) == q(1, 18));
  CHECK_FALSE((a + Scalar::real(0.5)).is_exact());
  CHECK((q(1) - q(19, 100)) == q(81, 100));
  CHECK_THROWS_AS(a / q(0), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::real(1.0).rational(), std::logic_error);
}

TEST_CASE("distribution invariants") {
  CHECK_THROWS_AS(Distribution({"a", "b"}, {q(1, 2), q(1, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Distribution({"a", "a"}, {q(1, 2), q(1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Distribution({"a", "b"}, {q(3, 2), q(-1, 2)}),
                  std::invalid_argument);
  // Float mode tolerates 1e-9 slack, no more.
  CHECK_NOTHROW(Distribution({"a", "b"},
                             {Scalar::real(0.5), Scalar::real(0.5 + 5e-10)}));
  CHECK_THROWS_AS(
      Distribution({"a", "b"}, {Scalar::real(0.5), Scalar::real(0.41)}),
      std::invalid_argument);
}

TEST_CASE("entropy matches the worked values") {
  const Distribution pd({"CC", "CD", "DC", "DD"},
                        {q(4, 9), q(2, 9), q(2, 9), q(1, 9)});
  CHECK(entropy(pd) ==
        doctest::Approx(std::log2(9.0) - 4.0 / 3.0).epsilon(1e-12));
  CHECK(entropy(pd) == doctest::Approx(1.8366).epsilon(1e-4));

  CHECK(entropy(Distribution({"a", "b"}, {q(1), q(0)})) == 0.0);

  const Distribution r({"r1", "r2"}, {q(49, 90), q(41, 90)});
  CHECK(entropy(r) == doctest::Approx(0.9943).epsilon(1e-3));
}

TEST_CASE("conditional entropy on simple joints") {
  // Independent fair coins.
  const JointDistribution coins(
      {{"x", {"h", "t"}}, {"y", {"h", "t"}}},
      {q(1, 4), q(1, 4), q(1, 4), q(1, 4)});
  CHECK(conditional_entropy(coins, "x", "y") == doctest::Approx(1.0));

  // Perfectly correlated pair.
  const JointDistribution same({{"x", {"h", "t"}}, {"y", {"h", "t"}}},
                               {q(1, 2), q(0), q(0), q(1, 2)});
  CHECK(conditional_entropy(same, "x", "y") == doctest::Approx(0.0));

  CHECK_THROWS_AS(conditional_entropy(same, "x", "nope"),
                  std::invalid_argument);
}

TEST_CASE("conditional entropy of the dilemma (R,S1) joint, exact oracle") {
  // Four-cell joint enumerated independently: {353,217,137,193}/900.
  const JointDistribution j(
      {{"r", {"r1", "r2"}}, {"s", {"s1", "s1'"}}},
      {q(353, 900), q(137, 900), q(217, 900), q(193, 900)});
  // Oracle: H(R,S) - H(S) computed from closed-form terms.
  auto term = [](double p) { return p > 0 ? -p * std::log2(p) : 0.0; };
  const double joint_h = term(353.0 / 900) + term(137.0 / 900) +
                         term(217.0 / 900) + term(193.0 / 900);
  const double s_h = term(570.0 / 900) + term(330.0 / 900);
  CHECK(conditional_entropy(j, "r", "s") ==
        doctest::Approx(joint_h - s_h).epsilon(1e-12));
  CHECK(conditional_entropy(j, "r", "s") ==
        doctest::Approx(0.9660859201081202).epsilon(1e-9));
}

TEST_CASE("mutual information") {
  const auto labels = std::vector<std::string>{"0", "1"};
  CHECK(mutual_information(Distribution::uniform(labels),
                           Channel::identity(labels)) == doctest::Approx(1.0));

  // Constant-output channel.
  const Channel constant(labels, {"y"}, {{q(1)}, {q(1)}});
  CHECK(mutual_information(Distribution::uniform(labels), constant) ==
        doctest::Approx(0.0));

  CHECK(mutual_information(Distribution::uniform(labels),
                           test::bsc(q(1, 10))) ==
        doctest::Approx(1.0 - test::binary_entropy(0.1)).epsilon(1e-12));

  CHECK_THROWS_AS(
      mutual_information(Distribution::uniform({"a", "b"}), constant),
      std::invalid_argument);
}

TEST_CASE("compose and push_forward") {
  const auto labels = std::vector<std::string>{"0", "1"};
  const Channel ch = test::bsc(q(1, 10));
  CHECK(compose(Channel::identity(labels), ch) == ch);

  // Two cascaded symmetric channels: flip 2*(1/10)*(9/10) = 18/100.
  const Channel twice = compose(ch, ch);
  CHECK(twice.prob("0", "1") == q(18, 100));
  CHECK(twice.prob("0", "0") == q(82, 100));

  // Column merge of the dilemma mediator rows.
  const Channel m({"CC", "CD", "DC", "DD"}, {"q1", "q2", "q3"},
                  {{q(9, 10), q(1, 10), q(0)},
                   {q(1, 10), q(9, 10), q(0)},
                   {q(0), q(9, 10), q(1, 10)},
                   {q(0), q(1, 10), q(9, 10)}});
  const Channel merged =
      push_forward(m, {{"q1", "r1"}, {"q2", "r2"}, {"q3", "r1"}});
  CHECK(merged.outputs() == std::vector<std::string>{"r1", "r2"});
  CHECK(merged.prob("CC", "r1") == q(9, 10));
  CHECK(merged.prob("CC", "r2") == q(1, 10));

  CHECK_THROWS_AS(push_forward(m, {{"q1", "r1"}, {"q2", "r2"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose(ch, m), std::invalid_argument);
}

TEST_CASE("joint marginalization recovers factors") {
  const JointDistribution j(
      {{"a", {"x", "y"}}, {"b", {"u", "v", "w"}}},
      {q(1, 6), q(1, 6), q(1, 6), q(1, 6), q(1, 6), q(1, 6)});
  const auto da = j.marginal("a");
  CHECK(da.mass("x") == q(1, 2));
  const auto db = j.marginal("b");
  CHECK(db.mass("w") == q(1, 3));
  CHECK_THROWS_AS(j.marginal("c"), std::invalid_argument);
}
