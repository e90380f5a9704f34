#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "remon/scalar.hpp"

namespace remon {

/// Tolerance for stochasticity checks on float-mode data. Exact-mode data
/// must sum to one exactly.
inline constexpr double kProbTolerance = 1e-9;

/// Probability vector over an ordered, labelled finite alphabet.
class Distribution {
 public:
  Distribution(std::vector<std::string> labels, std::vector<Scalar> mass,
               double tol = kProbTolerance);

  static Distribution point_mass(std::vector<std::string> labels,
                                 std::string_view at);
  static Distribution uniform(std::vector<std::string> labels);

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Scalar>& masses() const { return mass_; }
  const Scalar& mass(size_t i) const { return mass_.at(i); }
  const Scalar& mass(std::string_view label) const;
  std::optional<size_t> index_of(std::string_view label) const;

  /// True when every mass is carried exactly.
  bool is_exact() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Scalar> mass_;
};

/// Row-stochastic transition matrix between two labelled alphabets.
class Channel {
 public:
  Channel(std::vector<std::string> inputs, std::vector<std::string> outputs,
          std::vector<std::vector<Scalar>> rows, double tol = kProbTolerance);

  static Channel identity(std::vector<std::string> labels);
  /// Channel realizing a total map input -> output with probability one.
  static Channel deterministic(std::vector<std::string> inputs,
                               std::vector<std::string> outputs,
                               const std::map<std::string, std::string>& map);

  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  const Scalar& prob(size_t in, size_t out) const;
  const Scalar& prob(std::string_view in, std::string_view out) const;
  Distribution row(size_t in) const;
  Distribution row(std::string_view in) const;
  size_t input_index(std::string_view label) const;
  size_t output_index(std::string_view label) const;

  bool is_exact() const;
  bool operator==(const Channel& o) const;

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::vector<std::vector<Scalar>> rows_;
};

/// (ch2 o ch1)(c|a) = sum_b ch2(c|b) ch1(b|a). ch1's outputs must equal
/// ch2's inputs, labels and order included.
Channel compose(const Channel& ch1, const Channel& ch2);

/// Merges output columns through a total label map; the new output alphabet
/// is ordered by first occurrence of the mapped labels.
Channel push_forward(const Channel& ch,
                     const std::map<std::string, std::string>& map);

/// Product channel over a shared input: (a x b)(s,t|i) = a(s|i) b(t|i).
/// Output labels are "s,t".
Channel product_channel(const Channel& a, const Channel& b);

/// Output distribution of a channel fed with the given input distribution.
Distribution push_through(const Distribution& input, const Channel& ch);

struct Factor {
  std::string name;
  std::vector<std::string> labels;
};

/// Joint distribution over named finite factors, mass stored row-major.
class JointDistribution {
 public:
  JointDistribution(std::vector<Factor> factors, std::vector<Scalar> mass,
                    double tol = kProbTolerance);

  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<Scalar>& masses() const { return mass_; }
  size_t factor_index(std::string_view name) const;
  size_t cell_count() const { return mass_.size(); }
  const Scalar& mass_at(std::span<const size_t> indices) const;

  /// Marginal joint over the named factors, kept in their original order.
  JointDistribution marginal_joint(std::span<const std::string> keep) const;
  Distribution marginal(std::string_view factor) const;

  bool is_exact() const;

 private:
  std::vector<Factor> factors_;
  std::vector<size_t> strides_;
  std::vector<Scalar> mass_;
};

}  // namespace remon
