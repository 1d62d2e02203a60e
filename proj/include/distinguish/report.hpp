#pragma once

#include <optional>

#include "distinguish/io.hpp"
#include "distinguish/labelling.hpp"

namespace distinguish {

struct ActionRequest {
  bool exact = false;
  bool construct = false;
  std::optional<Label> k_max;
};

struct GraphRequest {
  bool exact = false;
  bool tree = false;
  bool construct = false;
  AutomorphismLimits limits;
};

/// Runs the requested solvers (exact search when nothing is requested) and
/// returns the JSON report. Every emitted labelling is checked to be
/// distinguishing first. `input` is the parsed document, hashed into the
/// report. The report ends with "timing_ms", its only nondeterministic field.
Json action_report(const Json& input, const ActionRequest& request);
Json graph_report(const Json& input, const GraphRequest& request);

}  // namespace distinguish
