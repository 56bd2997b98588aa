#include "artifact.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>

#include "pdmplab/errors.hpp"
#include "pdmplab/version.hpp"

namespace pdmplab::cli {

namespace {

const char* kTool = "pdmplab";

std::string fmt(double v) { return ExperimentConfig::format_double(v); }

}  // namespace

std::string to_csv(const ArtifactData& artifact) {
  std::string out;
  out += std::string("# ") + kTool + " " + kVersion + "\n";
  for (const auto& [key, value] : artifact.config.entries())
    out += "# " + key + " = " + value + "\n";
  bool first = true;
  for (const auto& series : artifact.series) {
    if (!first) out += "\n";
    if (!first || artifact.series.size() > 1)
      out += "# series: " + series.name + "\n";
    for (std::size_t c = 0; c < series.columns.size(); ++c) {
      if (c) out += ",";
      out += series.columns[c];
    }
    out += "\n";
    for (const auto& row : series.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ",";
        out += fmt(row[c]);
      }
      out += "\n";
    }
    first = false;
  }
  return out;
}

std::string to_json(const ArtifactData& artifact) {
  nlohmann::ordered_json doc;
  doc["tool"] = kTool;
  doc["version"] = kVersion;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : artifact.config.entries()) config[key] = value;
  doc["config"] = config;
  doc["series"] = nlohmann::ordered_json::array();
  for (const auto& series : artifact.series) {
    nlohmann::ordered_json s;
    s["name"] = series.name;
    s["columns"] = series.columns;
    s["rows"] = series.rows;
    doc["series"].push_back(s);
  }
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& check : artifact.checks) {
    nlohmann::ordered_json c;
    c["name"] = check.name;
    c["pass"] = check.pass;
    c["detail"] = check.detail;
    doc["checks"].push_back(c);
  }
  return doc.dump(2) + "\n";
}

std::string to_svg(const ArtifactData& artifact) {
  if (artifact.series.empty() || artifact.series[0].rows.empty())
    throw UsageError("nothing to plot");
  const Series& series = artifact.series[0];
  const std::size_t cols = series.columns.size();
  if (cols < 2) throw UsageError("plot needs at least two columns");

  const double width = 640, height = 420;
  const double ml = 60, mr = 20, mt = 20, mb = 40;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& row : series.rows) {
    xmin = std::min(xmin, row[0]);
    xmax = std::max(xmax, row[0]);
    for (std::size_t c = 1; c < cols; ++c) {
      ymin = std::min(ymin, row[c]);
      ymax = std::max(ymax, row[c]);
    }
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  const auto sx = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
  };
  const auto sy = [&](double y) {
    return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
  };

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#8c564b"};
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
         fmt(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(height - mb) + "\" x2=\"" +
         fmt(width - mr) + "\" y2=\"" + fmt(height - mb) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) +
         "\" y2=\"" + fmt(height - mb) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + fmt(ml) + "\" y=\"" + fmt(height - 10) +
         "\" font-size=\"12\">" + fmt(xmin) + "</text>\n";
  svg += "<text x=\"" + fmt(width - mr - 40) + "\" y=\"" + fmt(height - 10) +
         "\" font-size=\"12\">" + fmt(xmax) + "</text>\n";
  svg += "<text x=\"4\" y=\"" + fmt(height - mb) + "\" font-size=\"12\">" +
         fmt(ymin) + "</text>\n";
  svg += "<text x=\"4\" y=\"" + fmt(mt + 10) + "\" font-size=\"12\">" +
         fmt(ymax) + "</text>\n";
  for (std::size_t c = 1; c < cols; ++c) {
    const char* color = kColors[(c - 1) % 6];
    std::string points;
    for (const auto& row : series.rows) {
      points += fmt(sx(row[0])) + "," + fmt(sy(row[c])) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    svg += "<text x=\"" + fmt(width - mr - 120) + "\" y=\"" +
           fmt(mt + 16.0 * static_cast<double>(c)) + "\" fill=\"" + color +
           "\" font-size=\"12\">" + series.columns[c] + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << content;
  if (!out) throw UsageError("failed writing output file: " + path);
}

}  // namespace pdmplab::cli
