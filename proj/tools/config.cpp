#include "config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "pdmplab/errors.hpp"

namespace pdmplab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw UsageError("config key '" + key + "' is not a number: " + text);
  return v;
}

}  // namespace

std::string ExperimentConfig::format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void ExperimentConfig::set(const std::string& key, std::string value) {
  values_[key] = std::move(value);
}

void ExperimentConfig::set_double(const std::string& key, double value) {
  values_[key] = format_double(value);
}

bool ExperimentConfig::contains(const std::string& key) const {
  return values_.count(key) > 0;
}

std::string ExperimentConfig::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw UsageError("missing config key: " + key);
  return it->second;
}

double ExperimentConfig::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

std::uint64_t ExperimentConfig::get_u64(const std::string& key) const {
  const std::string text = get_string(key);
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0')
    throw UsageError("config key '" + key + "' is not an integer: " + text);
  return v;
}

int ExperimentConfig::get_int(const std::string& key) const {
  return static_cast<int>(get_u64(key));
}

bool ExperimentConfig::get_bool(const std::string& key) const {
  const std::string text = get_string(key);
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw UsageError("config key '" + key + "' is not a boolean: " + text);
}

std::vector<double> ExperimentConfig::get_list(const std::string& key) const {
  const std::string text = get_string(key);
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw UsageError("config key '" + key + "' is an empty list");
  return out;
}

std::vector<double> ExperimentConfig::get_grid(const std::string& key) const {
  const std::string text = get_string(key);
  double start = 0.0, stop = 0.0, step = 0.0;
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw UsageError("config key '" + key + "' is not start:stop:step: " + text);
  start = parse_double(key, trim(text.substr(0, first)));
  stop = parse_double(key, trim(text.substr(first + 1, second - first - 1)));
  step = parse_double(key, trim(text.substr(second + 1)));
  if (!(step > 0.0) || stop < start)
    throw UsageError("config key '" + key + "' is a malformed grid: " + text);
  std::vector<double> out;
  const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9));
  out.reserve(count + 1);
  for (int i = 0; i <= count; ++i) out.push_back(start + i * step);
  return out;
}

std::string ExperimentConfig::to_text() const {
  std::string out;
  for (const auto& [key, value] : values_) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

ExperimentConfig ExperimentConfig::from_text(const std::string& text) {
  ExperimentConfig config;
  std::stringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(line_no) +
                       " is not 'key = value': " + stripped);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw UsageError("config line " + std::to_string(line_no) +
                       " has an empty key");
    config.set(key, value);
  }
  return config;
}

}  // namespace pdmplab::cli
