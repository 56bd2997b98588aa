#pragma once

#include <string>
#include <vector>

#include "artifact.hpp"
#include "config.hpp"

namespace pdmplab::cli {

struct OptionSpec {
  std::string key;
  std::string default_value;
  std::string help;
};

struct ExperimentInfo {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
};

/// Options shared by every experiment.
const std::vector<OptionSpec>& common_options();

/// The experiment registry, in CLI order.
const std::vector<ExperimentInfo>& experiments();

/// Run the experiment named by config key "experiment". Checks against the
/// acceptance thresholds are evaluated when "check" is true.
ArtifactData run_experiment(const ExperimentConfig& config);

}  // namespace pdmplab::cli
