#pragma once

#include <string>
#include <vector>

#include "remon/instance.hpp"

namespace remon {

/// A documented figure for an instance, checked against the computed value
/// when the instance is analyzed.
struct ReferenceValue {
  std::string name;         // metric key, e.g. "essential_rate_bits"
  double value = 0.0;       // documented figure
  double tolerance = 5e-4;  // |computed - documented| allowed for a match
  std::string note;         // optional caveat carried into the report
};

/// On-disk instance: the monitoring structure plus optional documentation
/// data (reference figures and free-text notes).
struct InstanceDocument {
  MonitoringInstance instance;
  std::vector<ReferenceValue> reference;
  std::vector<std::string> notes;
};

struct ParseOptions {
  bool force_float = false;          // parse every cell as a double
  double tolerance = kProbTolerance; // stochasticity check for float data
};

/// Parses the JSON instance document; throws std::invalid_argument with the
/// first violation on malformed or inconsistent input.
InstanceDocument parse_instance(const std::string& json_text,
                                const ParseOptions& opts = {});
InstanceDocument load_instance(const std::string& path,
                               const ParseOptions& opts = {});

/// Serializes back to JSON; exact cells as "p/q" strings, floats as numbers.
std::string serialize_instance(const InstanceDocument& doc, int indent = 2);

enum class PdBroadcast { none, noiseless, bsc };

struct PdOptions {
  Scalar x = Scalar::exact(1, 10);
  Scalar xp = Scalar::exact(1, 10);
  Scalar y = Scalar::exact(1, 10);
  PdBroadcast broadcast = PdBroadcast::noiseless;
  Scalar bsc_flip = Scalar::exact(1, 10);
};

/// The bundled dilemma instance: pd_instance(x, xp, y) with an optional
/// broadcast sized to the instance's essential alphabet, plus documented
/// reference figures at the two canonical parameter points.
InstanceDocument pd_document(const PdOptions& opts = {});

}  // namespace remon
