#include "remon/info.hpp"

#include <cmath>

namespace remon {
namespace {

double entropy_terms(const std::vector<Scalar>& mass) {
  double h = 0.0;
  for (const auto& m : mass) {
    const double p = m.value();
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

double entropy(const Distribution& d) { return entropy_terms(d.masses()); }

double entropy(const JointDistribution& j) { return entropy_terms(j.masses()); }

double conditional_entropy(const JointDistribution& j, std::string_view target,
                           std::string_view given) {
  std::vector<std::string> pair{std::string(target), std::string(given)};
  const double joint = entropy(j.marginal_joint(pair));
  return joint - entropy(j.marginal(given));
}

double mutual_information(const Distribution& input, const Channel& ch) {
  const Distribution output = push_through(input, ch);
  double cond = 0.0;  // H(Y|X)
  for (size_t a = 0; a < input.size(); ++a) {
    const double pa = input.mass(a).value();
    if (pa <= 0.0) continue;
    cond += pa * entropy(ch.row(a));
  }
  double mi = entropy(output) - cond;
  return mi < 0.0 ? 0.0 : mi;  // clamp tiny negative float residue
}

}  // namespace remon
