#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pdmplab::cli {

/// Flat key = value experiment configuration. Keys are sorted on emission and
/// doubles are carried as %.17g strings, so a config round-trips through its
/// textual form losslessly and artifacts embedding it are byte-stable.
class ExperimentConfig {
 public:
  void set(const std::string& key, std::string value);
  void set_double(const std::string& key, double value);

  bool contains(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const { return values_; }

  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  int get_int(const std::string& key) const;
  bool get_bool(const std::string& key) const;

  /// Comma-separated list of reals; "inf" is accepted.
  std::vector<double> get_list(const std::string& key) const;

  /// "start:stop:step" inclusive grid.
  std::vector<double> get_grid(const std::string& key) const;

  std::string to_text() const;
  static ExperimentConfig from_text(const std::string& text);

  static std::string format_double(double value);

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace pdmplab::cli
