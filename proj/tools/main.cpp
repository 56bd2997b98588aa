#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "artifact.hpp"
#include "config.hpp"
#include "experiments.hpp"
#include "pdmplab/errors.hpp"
#include "pdmplab/version.hpp"

namespace {

using pdmplab::cli::ArtifactData;
using pdmplab::cli::ExperimentConfig;
using pdmplab::cli::OptionSpec;

// Exit codes: 0 success, 1 usage/config error, 2 numerical failure,
// 3 acceptance-threshold violation in --check mode.
enum ExitCode { kOk = 0, kUsage = 1, kNumerical = 2, kCheckFailed = 3 };

struct SubcommandState {
  std::string name;
  std::map<std::string, std::string> cli_values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;
  bool check = false;
};

ExperimentConfig resolve_config(const SubcommandState& state) {
  ExperimentConfig config;
  // defaults < config file < explicit command-line flags
  for (const auto& spec : pdmplab::cli::common_options())
    config.set(spec.key, spec.default_value);
  for (const auto& info : pdmplab::cli::experiments()) {
    if (info.name != state.name) continue;
    for (const auto& spec : info.options) config.set(spec.key, spec.default_value);
  }
  if (!state.config_path.empty()) {
    std::ifstream in(state.config_path);
    if (!in) throw pdmplab::UsageError("cannot read config file: " + state.config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const ExperimentConfig file_config =
        ExperimentConfig::from_text(buffer.str());
    for (const auto& [key, value] : file_config.entries()) {
      if (key == "experiment") continue;  // fixed by the subcommand
      if (!config.contains(key))
        throw pdmplab::UsageError("config file key '" + key +
                                  "' is not an option of " + state.name);
      config.set(key, value);
    }
  }
  for (const auto& [key, option] : state.options) {
    if (option->count() > 0) config.set(key, state.cli_values.at(key));
  }
  config.set("experiment", state.name);
  config.set("check", state.check ? "true" : "false");
  config.set("version", pdmplab::kVersion);
  return config;
}

int run_subcommand(const SubcommandState& state) {
  const ExperimentConfig config = resolve_config(state);
  const ArtifactData artifact = pdmplab::cli::run_experiment(config);

  const std::string format = config.get_string("format");
  if (format != "csv" && format != "json")
    throw pdmplab::UsageError("format must be csv or json");
  std::string output = config.get_string("output");
  if (output.empty()) output = state.name + "." + format;
  pdmplab::cli::write_file(
      output, format == "csv" ? to_csv(artifact) : to_json(artifact));
  std::printf("wrote %s\n", output.c_str());

  const std::string svg = config.get_string("svg");
  if (!svg.empty()) {
    pdmplab::cli::write_file(svg, to_svg(artifact));
    std::printf("wrote %s\n", svg.c_str());
  }

  bool all_pass = true;
  for (const auto& check : artifact.checks) {
    std::printf("check %-4s %s (%s)\n", check.pass ? "ok" : "FAIL",
                check.name.c_str(), check.detail.c_str());
    all_pass = all_pass && check.pass;
  }
  return all_pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("pdmplab ") + pdmplab::kVersion +
               " - exact samplers, couplings and bound evaluators for the "
               "TCP window-size process and related PDMPs"};
  app.require_subcommand(1);

  std::vector<std::unique_ptr<SubcommandState>> states;
  for (const auto& info : pdmplab::cli::experiments()) {
    auto* sub = app.add_subcommand(info.name, info.help);
    auto state = std::make_unique<SubcommandState>();
    state->name = info.name;
    for (const auto& spec : pdmplab::cli::common_options()) {
      auto* option = sub->add_option("--" + spec.key,
                                     state->cli_values[spec.key], spec.help);
      if (spec.key == "threads") option->envname("PDMPLAB_THREADS");
      state->options[spec.key] = option;
    }
    for (const auto& spec : info.options) {
      state->options[spec.key] = sub->add_option(
          "--" + spec.key, state->cli_values[spec.key], spec.help);
    }
    sub->add_option("--config", state->config_path,
                    "flat key = value config file; flags override it");
    sub->add_flag("--check", state->check,
                  "compare outputs with the acceptance thresholds; exit 3 on "
                  "violation");
    states.push_back(std::move(state));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& state : states) {
      if (app.get_subcommand(state->name)->parsed())
        return run_subcommand(*state);
    }
    std::fprintf(stderr, "no experiment selected\n");
    return kUsage;
  } catch (const pdmplab::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const pdmplab::ScheduleInfeasibleError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kUsage;
  } catch (const pdmplab::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumerical;
  }
}
