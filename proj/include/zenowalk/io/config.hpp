#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zenowalk/error.hpp"

namespace zenowalk::io {

/// Bad flag or config value. The message starts with the offending field.
class ValidationError : public InvalidParameter {
 public:
  ValidationError(const std::string& field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// min:max:step in degrees, max inclusive.
struct ThetaRange {
  double min = 0.0;
  double max = 90.0;
  double step = 1.0;

  std::vector<double> expand() const;
};

struct RunConfig {
  std::string command;
  /// Explicit list; present-but-empty means an empty grid.
  std::optional<std::vector<double>> theta;
  std::optional<ThetaRange> theta_range;
  std::vector<int> steps;
  std::vector<int> intervals;
  std::optional<std::string> kind;
  std::string out = "zenowalk";
  std::vector<std::string> formats;
  int workers = 1;
  std::optional<double> tolerance_deg;
  /// Reserved; the simulation is deterministic.
  std::optional<std::uint64_t> seed;

  /// Explicit theta list, else the expanded range, else empty.
  std::vector<double> theta_grid() const;
  bool has_format(std::string_view format) const;
};

std::vector<double> parse_double_list(const std::string& field, const std::string& text);
std::vector<int> parse_int_list(const std::string& field, const std::string& text);
ThetaRange parse_theta_range(const std::string& text);
/// Splits comma lists and lowercases; accepts csv, json, svg.
std::vector<std::string> parse_formats(const std::vector<std::string>& values);

/// Sets every key present in `doc` on `config`. Keys mirror the CLI flags
/// with dashes as underscores: theta, theta_range, steps, interval, kind,
/// out, format, workers, tolerance_deg, seed. Unknown keys are rejected.
void apply_json(RunConfig& config, const nlohmann::json& doc);

/// Fills defaults for the active command and rejects flags that do not
/// apply to it.
void validate(RunConfig& config);

}  // namespace zenowalk::io
