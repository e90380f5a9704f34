#include "remon/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace remon {
namespace {

void check_labels(const std::vector<std::string>& labels, const char* what) {
  if (labels.empty())
    throw std::invalid_argument(std::string(what) + ": empty alphabet");
  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw std::invalid_argument(std::string(what) + ": duplicate label '" +
                                  l + "'");
}

bool all_exact(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_exact(); });
}

void check_mass_vector(const std::vector<Scalar>& mass, double tol,
                       const char* what) {
  for (const auto& m : mass)
    if (m.is_negative())
      throw std::invalid_argument(std::string(what) + ": negative mass " +
                                  m.str());
  if (all_exact(mass)) {
    Scalar sum = Scalar::exact(0);
    for (const auto& m : mass) sum += m;
    if (sum != Scalar::exact(1))
      throw std::invalid_argument(std::string(what) +
                                  ": exact masses sum to " + sum.str());
  } else {
    double sum = 0.0;
    for (const auto& m : mass) sum += m.value();
    if (!(std::abs(sum - 1.0) <= tol))  // also rejects NaN
      throw std::invalid_argument(std::string(what) + ": masses sum to " +
                                  std::to_string(sum));
  }
}

}  // namespace

Distribution::Distribution(std::vector<std::string> labels,
                           std::vector<Scalar> mass, double tol)
    : labels_(std::move(labels)), mass_(std::move(mass)) {
  check_labels(labels_, "distribution");
  if (labels_.size() != mass_.size())
    throw std::invalid_argument("distribution: label/mass length mismatch");
  check_mass_vector(mass_, tol, "distribution");
}

Distribution Distribution::point_mass(std::vector<std::string> labels,
                                      std::string_view at) {
  std::vector<Scalar> mass(labels.size(), Scalar::exact(0));
  auto it = std::find(labels.begin(), labels.end(), at);
  if (it == labels.end())
    throw std::invalid_argument("point_mass: unknown label '" +
                                std::string(at) + "'");
  mass[static_cast<size_t>(it - labels.begin())] = Scalar::exact(1);
  return Distribution(std::move(labels), std::move(mass));
}

Distribution Distribution::uniform(std::vector<std::string> labels) {
  const auto n = static_cast<long long>(labels.size());
  std::vector<Scalar> mass(labels.size(), Scalar::exact(1, n));
  return Distribution(std::move(labels), std::move(mass));
}

const Scalar& Distribution::mass(std::string_view label) const {
  auto idx = index_of(label);
  if (!idx)
    throw std::invalid_argument("distribution: unknown label '" +
                                std::string(label) + "'");
  return mass_[*idx];
}

std::optional<size_t> Distribution::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<size_t>(it - labels_.begin());
}

bool Distribution::is_exact() const { return all_exact(mass_); }

Channel::Channel(std::vector<std::string> inputs,
                 std::vector<std::string> outputs,
                 std::vector<std::vector<Scalar>> rows, double tol)
    : inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      rows_(std::move(rows)) {
  check_labels(inputs_, "channel inputs");
  check_labels(outputs_, "channel outputs");
  if (rows_.size() != inputs_.size())
    throw std::invalid_argument("channel: one row per input required");
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != outputs_.size())
      throw std::invalid_argument("channel: row '" + inputs_[i] +
                                  "' has wrong width");
    check_mass_vector(rows_[i], tol, ("channel row '" + inputs_[i] + "'").c_str());
  }
}

Channel Channel::identity(std::vector<std::string> labels) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    std::vector<Scalar> row(labels.size(), Scalar::exact(0));
    row[i] = Scalar::exact(1);
    rows.push_back(std::move(row));
  }
  return Channel(labels, labels, std::move(rows));
}

Channel Channel::deterministic(std::vector<std::string> inputs,
                               std::vector<std::string> outputs,
                               const std::map<std::string, std::string>& map) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(inputs.size());
  for (const auto& in : inputs) {
    auto it = map.find(in);
    if (it == map.end())
      throw std::invalid_argument("deterministic channel: no image for '" +
                                  in + "'");
    auto out = std::find(outputs.begin(), outputs.end(), it->second);
    if (out == outputs.end())
      throw std::invalid_argument("deterministic channel: image '" +
                                  it->second + "' not an output label");
    std::vector<Scalar> row(outputs.size(), Scalar::exact(0));
    row[static_cast<size_t>(out - outputs.begin())] = Scalar::exact(1);
    rows.push_back(std::move(row));
  }
  return Channel(std::move(inputs), std::move(outputs), std::move(rows));
}

const Scalar& Channel::prob(size_t in, size_t out) const {
  return rows_.at(in).at(out);
}

const Scalar& Channel::prob(std::string_view in, std::string_view out) const {
  return rows_[input_index(in)][output_index(out)];
}

Distribution Channel::row(size_t in) const {
  return Distribution(outputs_, rows_.at(in));
}

Distribution Channel::row(std::string_view in) const {
  return row(input_index(in));
}

size_t Channel::input_index(std::string_view label) const {
  auto it = std::find(inputs_.begin(), inputs_.end(), label);
  if (it == inputs_.end())
    throw std::invalid_argument("channel: unknown input '" +
                                std::string(label) + "'");
  return static_cast<size_t>(it - inputs_.begin());
}

size_t Channel::output_index(std::string_view label) const {
  auto it = std::find(outputs_.begin(), outputs_.end(), label);
  if (it == outputs_.end())
    throw std::invalid_argument("channel: unknown output '" +
                                std::string(label) + "'");
  return static_cast<size_t>(it - outputs_.begin());
}

bool Channel::is_exact() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const auto& r) { return all_exact(r); });
}

bool Channel::operator==(const Channel& o) const {
  return inputs_ == o.inputs_ && outputs_ == o.outputs_ && rows_ == o.rows_;
}

Channel compose(const Channel& ch1, const Channel& ch2) {
  if (ch1.outputs() != ch2.inputs())
    throw std::invalid_argument("compose: intermediate alphabets differ");
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(ch1.inputs().size());
  for (size_t a = 0; a < ch1.inputs().size(); ++a) {
    std::vector<Scalar> row(ch2.outputs().size(), Scalar::exact(0));
    for (size_t b = 0; b < ch1.outputs().size(); ++b) {
      if (ch1.prob(a, b).is_zero()) continue;
      for (size_t c = 0; c < ch2.outputs().size(); ++c)
        row[c] += ch1.prob(a, b) * ch2.prob(b, c);
    }
    rows.push_back(std::move(row));
  }
  return Channel(ch1.inputs(), ch2.outputs(), std::move(rows));
}

Channel push_forward(const Channel& ch,
                     const std::map<std::string, std::string>& map) {
  std::vector<std::string> merged;
  std::vector<size_t> column;  // original output index -> merged index
  column.reserve(ch.outputs().size());
  for (const auto& out : ch.outputs()) {
    auto it = map.find(out);
    if (it == map.end())
      throw std::invalid_argument("push_forward: map not total, missing '" +
                                  out + "'");
    auto pos = std::find(merged.begin(), merged.end(), it->second);
    if (pos == merged.end()) {
      merged.push_back(it->second);
      column.push_back(merged.size() - 1);
    } else {
      column.push_back(static_cast<size_t>(pos - merged.begin()));
    }
  }
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(ch.inputs().size());
  for (size_t a = 0; a < ch.inputs().size(); ++a) {
    std::vector<Scalar> row(merged.size(), Scalar::exact(0));
    for (size_t b = 0; b < ch.outputs().size(); ++b)
      row[column[b]] += ch.prob(a, b);
    rows.push_back(std::move(row));
  }
  return Channel(ch.inputs(), std::move(merged), std::move(rows));
}

Channel product_channel(const Channel& a, const Channel& b) {
  if (a.inputs() != b.inputs())
    throw std::invalid_argument("product_channel: input alphabets differ");
  std::vector<std::string> outputs;
  outputs.reserve(a.outputs().size() * b.outputs().size());
  for (const auto& s : a.outputs())
    for (const auto& t : b.outputs()) outputs.push_back(s + "," + t);
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(a.inputs().size());
  for (size_t i = 0; i < a.inputs().size(); ++i) {
    std::vector<Scalar> row;
    row.reserve(outputs.size());
    for (size_t s = 0; s < a.outputs().size(); ++s)
      for (size_t t = 0; t < b.outputs().size(); ++t)
        row.push_back(a.prob(i, s) * b.prob(i, t));
    rows.push_back(std::move(row));
  }
  return Channel(a.inputs(), std::move(outputs), std::move(rows));
}

Distribution push_through(const Distribution& input, const Channel& ch) {
  if (input.labels() != ch.inputs())
    throw std::invalid_argument("push_through: input alphabet mismatch");
  std::vector<Scalar> mass(ch.outputs().size(), Scalar::exact(0));
  for (size_t a = 0; a < input.size(); ++a) {
    if (input.mass(a).is_zero()) continue;
    for (size_t y = 0; y < ch.outputs().size(); ++y)
      mass[y] += input.mass(a) * ch.prob(a, y);
  }
  return Distribution(ch.outputs(), std::move(mass));
}

JointDistribution::JointDistribution(std::vector<Factor> factors,
                                     std::vector<Scalar> mass, double tol)
    : factors_(std::move(factors)), mass_(std::move(mass)) {
  if (factors_.empty())
    throw std::invalid_argument("joint distribution: no factors");
  std::set<std::string_view> names;
  size_t cells = 1;
  for (const auto& f : factors_) {
    check_labels(f.labels, ("factor '" + f.name + "'").c_str());
    if (!names.insert(f.name).second)
      throw std::invalid_argument("joint distribution: duplicate factor '" +
                                  f.name + "'");
    cells *= f.labels.size();
  }
  if (mass_.size() != cells)
    throw std::invalid_argument("joint distribution: wrong cell count");
  check_mass_vector(mass_, tol, "joint distribution");
  strides_.assign(factors_.size(), 1);
  for (size_t i = factors_.size(); i-- > 1;)
    strides_[i - 1] = strides_[i] * factors_[i].labels.size();
}

size_t JointDistribution::factor_index(std::string_view name) const {
  for (size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].name == name) return i;
  throw std::invalid_argument("joint distribution: unknown factor '" +
                              std::string(name) + "'");
}

const Scalar& JointDistribution::mass_at(std::span<const size_t> indices) const {
  if (indices.size() != factors_.size())
    throw std::invalid_argument("joint distribution: index arity mismatch");
  size_t flat = 0;
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= factors_[i].labels.size())
      throw std::out_of_range("joint distribution: index out of range");
    flat += indices[i] * strides_[i];
  }
  return mass_[flat];
}

JointDistribution JointDistribution::marginal_joint(
    std::span<const std::string> keep) const {
  std::vector<size_t> kept;
  for (const auto& name : keep) kept.push_back(factor_index(name));
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("marginal: repeated factor");
  if (kept.empty()) throw std::invalid_argument("marginal: no factors kept");

  std::vector<Factor> out_factors;
  std::vector<size_t> out_strides;
  size_t cells = 1;
  for (size_t k : kept) {
    out_factors.push_back(factors_[k]);
    cells *= factors_[k].labels.size();
  }
  out_strides.assign(kept.size(), 1);
  for (size_t i = kept.size(); i-- > 1;)
    out_strides[i - 1] = out_strides[i] * out_factors[i].labels.size();

  std::vector<Scalar> out_mass(cells, Scalar::exact(0));
  std::vector<size_t> idx(factors_.size(), 0);
  for (size_t flat = 0; flat < mass_.size(); ++flat) {
    size_t rem = flat;
    for (size_t i = 0; i < factors_.size(); ++i) {
      idx[i] = rem / strides_[i];
      rem %= strides_[i];
    }
    size_t out_flat = 0;
    for (size_t i = 0; i < kept.size(); ++i)
      out_flat += idx[kept[i]] * out_strides[i];
    out_mass[out_flat] += mass_[flat];
  }
  return JointDistribution(std::move(out_factors), std::move(out_mass));
}

Distribution JointDistribution::marginal(std::string_view factor) const {
  std::vector<std::string> keep{std::string(factor)};
  auto j = marginal_joint(keep);
  return Distribution(j.factors()[0].labels, j.masses());
}

bool JointDistribution::is_exact() const { return all_exact(mass_); }

}  // namespace remon
