#include "zenowalk/io/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace zenowalk::io {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream ss(text);
  while (std::getline(ss, part, sep)) parts.push_back(trim(part));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& field, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw ValidationError(field, "'" + text + "' is not a finite number");
  }
  return v;
}

int parse_int(const std::string& field, const std::string& text) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size() || v < -1000000000L || v > 1000000000L) {
    throw ValidationError(field, "'" + text + "' is not an integer");
  }
  return static_cast<int>(v);
}

std::vector<double> json_doubles(const std::string& field, const nlohmann::json& v) {
  if (v.is_string()) return parse_double_list(field, v.get<std::string>());
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ValidationError(field, "expected a number, a list of numbers or a comma list");
  std::vector<double> out;
  for (const auto& item : v) {
    if (!item.is_number()) throw ValidationError(field, "list entries must be numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

std::vector<int> json_ints(const std::string& field, const nlohmann::json& v) {
  if (v.is_string()) return parse_int_list(field, v.get<std::string>());
  if (v.is_number_integer()) return {v.get<int>()};
  if (!v.is_array()) throw ValidationError(field, "expected an integer, a list of integers or a comma list");
  std::vector<int> out;
  for (const auto& item : v) {
    if (!item.is_number_integer()) throw ValidationError(field, "list entries must be integers");
    out.push_back(item.get<int>());
  }
  return out;
}

std::string json_string(const std::string& field, const nlohmann::json& v) {
  if (!v.is_string()) throw ValidationError(field, "expected a string");
  return v.get<std::string>();
}

void require_single(const std::string& field, const std::vector<int>& values) {
  if (values.size() != 1) throw ValidationError(field, "exactly one value required for this command");
}

void require_even_interval(const std::vector<int>& intervals, const std::vector<int>& steps) {
  for (int interval : intervals) {
    if (interval < 2 || interval % 2 != 0) {
      throw ValidationError("interval", std::to_string(interval) +
                                            " is not an even integer >= 2; the origin carries no amplitude "
                                            "after an odd number of steps");
    }
    for (int s : steps) {
      if (s % interval != 0) {
        throw ValidationError("interval", std::to_string(interval) + " does not divide steps " + std::to_string(s));
      }
    }
  }
}

void require_even_steps(const std::vector<int>& steps) {
  for (int s : steps) {
    if (s < 2 || s % 2 != 0) throw ValidationError("steps", std::to_string(s) + " is not an even integer >= 2");
  }
}

void allow_formats(RunConfig& config, std::set<std::string> allowed, const std::string& fallback) {
  if (config.formats.empty()) config.formats.push_back(fallback);
  for (const auto& f : config.formats) {
    if (!allowed.contains(f)) throw ValidationError("format", "'" + f + "' is not available for " + config.command);
  }
}

void forbid(bool present, const std::string& field, const std::string& command) {
  if (present) throw ValidationError(field, "does not apply to " + command);
}

}  // namespace

ValidationError::ValidationError(const std::string& field, const std::string& message)
    : InvalidParameter(field + ": " + message), field_(field) {}

std::vector<double> ThetaRange::expand() const {
  std::vector<double> grid;
  const double span = max - min;
  const auto count = static_cast<long>(std::floor(span / step + 1e-9));
  grid.reserve(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) grid.push_back(min + static_cast<double>(i) * step);
  return grid;
}

std::vector<double> RunConfig::theta_grid() const {
  if (theta) return *theta;
  if (theta_range) return theta_range->expand();
  return {};
}

bool RunConfig::has_format(std::string_view format) const {
  return std::find(formats.begin(), formats.end(), format) != formats.end();
}

std::vector<double> parse_double_list(const std::string& field, const std::string& text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(field, part));
  return out;
}

std::vector<int> parse_int_list(const std::string& field, const std::string& text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(field, part));
  return out;
}

ThetaRange parse_theta_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ValidationError("theta-range", "expected min:max:step, got '" + text + "'");
  ThetaRange r{parse_double("theta-range", parts[0]), parse_double("theta-range", parts[1]),
               parse_double("theta-range", parts[2])};
  if (!(r.step > 0.0)) throw ValidationError("theta-range", "step must be positive");
  if (r.max < r.min) throw ValidationError("theta-range", "max must not be below min");
  return r;
}

std::vector<std::string> parse_formats(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const auto& value : values) {
    for (auto part : split(value, ',')) {
      std::transform(part.begin(), part.end(), part.begin(), [](unsigned char c) { return std::tolower(c); });
      if (part != "csv" && part != "json" && part != "svg") {
        throw ValidationError("format", "unknown format '" + part + "' (expected csv, json or svg)");
      }
      if (std::find(out.begin(), out.end(), part) == out.end()) out.push_back(part);
    }
  }
  return out;
}

void apply_json(RunConfig& config, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("config", "top level must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "theta") {
      config.theta = json_doubles("theta", value);
      config.theta_range.reset();
    } else if (key == "theta_range") {
      config.theta_range = parse_theta_range(json_string("theta_range", value));
      config.theta.reset();
    } else if (key == "steps") {
      config.steps = json_ints("steps", value);
    } else if (key == "interval") {
      config.intervals = json_ints("interval", value);
    } else if (key == "kind") {
      config.kind = json_string("kind", value);
    } else if (key == "out") {
      config.out = json_string("out", value);
    } else if (key == "format") {
      std::vector<std::string> raw;
      if (value.is_string()) {
        raw.push_back(value.get<std::string>());
      } else if (value.is_array()) {
        for (const auto& item : value) raw.push_back(json_string("format", item));
      } else {
        throw ValidationError("format", "expected a string or a list of strings");
      }
      config.formats = parse_formats(raw);
    } else if (key == "workers") {
      if (!value.is_number_integer()) throw ValidationError("workers", "expected an integer");
      config.workers = value.get<int>();
    } else if (key == "tolerance_deg") {
      if (!value.is_number()) throw ValidationError("tolerance_deg", "expected a number");
      config.tolerance_deg = value.get<double>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ValidationError("seed", "expected a non-negative integer");
      config.seed = value.get<std::uint64_t>();
    } else {
      throw ValidationError(key, "unknown configuration key");
    }
  }
}

void validate(RunConfig& config) {
  const std::string& cmd = config.command;
  if (config.workers < 1) throw ValidationError("workers", "must be >= 1");
  if (config.out.empty()) throw ValidationError("out", "output prefix must not be empty");
  if (config.theta && config.theta_range) {
    throw ValidationError("theta", "give either --theta or --theta-range, not both");
  }
  for (double t : config.theta.value_or(std::vector<double>{})) {
    if (!std::isfinite(t)) throw ValidationError("theta", "values must be finite");
  }

  if (cmd == "distribution" || cmd == "transient") {
    if (config.theta_grid().empty()) throw ValidationError("theta", "at least one angle is required");
    require_single("steps", config.steps);
    const int min_steps = cmd == "distribution" ? 1 : 2;
    if (config.steps[0] < min_steps) {
      throw ValidationError("steps", "must be >= " + std::to_string(min_steps) + " for " + cmd);
    }
    forbid(!config.intervals.empty(), "interval", cmd);
    forbid(config.kind.has_value(), "kind", cmd);
    forbid(config.tolerance_deg.has_value(), "tolerance-deg", cmd);
    allow_formats(config, {"csv", "svg"}, "csv");
  } else if (cmd == "zeno" || cmd == "sweep") {
    if (!config.theta && !config.theta_range) config.theta_range = ThetaRange{0.0, 90.0, 1.0};
    if (config.steps.empty()) throw ValidationError("steps", "at least one step count is required");
    if (cmd == "sweep") require_single("steps", config.steps);
    require_even_steps(config.steps);
    if (config.intervals.empty()) config.intervals = {2};
    require_even_interval(config.intervals, config.steps);
    forbid(config.kind.has_value(), "kind", cmd);
    forbid(config.tolerance_deg.has_value(), "tolerance-deg", cmd);
    if (cmd == "zeno") {
      allow_formats(config, {"csv", "svg"}, "csv");
    } else {
      allow_formats(config, {"csv", "json"}, "csv");
    }
  } else if (cmd == "critical") {
    if (!config.kind) throw ValidationError("kind", "required for critical (theta or n)");
    if (config.steps.empty()) throw ValidationError("steps", "at least one step count is required");
    require_even_steps(config.steps);
    if (*config.kind == "theta") {
      forbid(config.theta.has_value() || config.theta_range.has_value(), "theta", "critical --kind theta");
      if (config.intervals.empty()) config.intervals = {2};
      require_even_interval(config.intervals, config.steps);
      if (!config.tolerance_deg) config.tolerance_deg = 0.01;
      if (!(*config.tolerance_deg > 0.0)) throw ValidationError("tolerance-deg", "must be positive");
    } else if (*config.kind == "n") {
      if (config.theta_grid().empty()) throw ValidationError("theta", "required for critical --kind n");
      forbid(!config.intervals.empty(), "interval", "critical --kind n");
      forbid(config.tolerance_deg.has_value(), "tolerance-deg", "critical --kind n");
    } else {
      throw ValidationError("kind", "'" + *config.kind + "' is not one of theta, n");
    }
    allow_formats(config, {"json"}, "json");
  } else {
    throw ValidationError("command", "unknown subcommand '" + cmd + "'");
  }
}

}  // namespace zenowalk::io
