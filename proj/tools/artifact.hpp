#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace pdmplab::cli {

/// One table of an experiment artifact: fixed column names, numeric rows.
struct Series {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ArtifactData {
  ExperimentConfig config;  // resolved config, echoed into every artifact
  std::vector<Series> series;
  std::vector<CheckResult> checks;
};

/// CSV: '#'-prefixed provenance lines (tool version + resolved config),
/// then one header+rows block per series; blocks beyond the first are
/// introduced by a '# series: <name>' comment.
std::string to_csv(const ArtifactData& artifact);

/// JSON artifact with the same content, fixed key order.
std::string to_json(const ArtifactData& artifact);

/// Minimal standalone SVG line chart of the first series: every column
/// beyond the first is a polyline against the first column.
std::string to_svg(const ArtifactData& artifact);

void write_file(const std::string& path, const std::string& content);

}  // namespace pdmplab::cli
