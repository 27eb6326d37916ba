#pragma once

#include <filesystem>
#include <optional>

#include "radloc/geometry.hpp"
#include "radloc/scenario.hpp"
#include "radloc/sweep.hpp"

namespace radloc {

// Contents of a scenario config file: the scenario itself plus an optional
// initial guess for the solver.
struct ScenarioFile {
  Scenario scenario;
  std::optional<Point2> initial;
};

// Loads a JSON scenario file. Required: "anchors" (array of [x, y]).
// Optional: "source" [x, y], "ranges" (array; derived from source when
// absent), "label" (defaults to the file stem), "initial" [x, y]. Unknown
// keys and schema violations throw std::invalid_argument with the path.
ScenarioFile load_scenario(const std::filesystem::path& path);

// Loads a JSON sweep config. Every field is optional and defaults to the
// SweepConfig defaults; see the README for the schema.
SweepConfig load_sweep_config(const std::filesystem::path& path);

}  // namespace radloc
