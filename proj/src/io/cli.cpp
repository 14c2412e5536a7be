#include "zenowalk/io/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zenowalk/io/parallel.hpp"
#include "zenowalk/io/svg.hpp"
#include "zenowalk/measurement.hpp"

namespace zenowalk::io {
namespace {

namespace fs = std::filesystem;

std::string angle_label(double deg) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", deg);
  return buf;
}

/// Output files opened before any computation so an unwritable path fails fast.
class OutputSet {
 public:
  std::ofstream& open(const fs::path& path) {
    auto& slot = files_.emplace_back(path, std::ofstream(path, std::ios::binary | std::ios::trunc));
    if (!slot.second) throw IoError("cannot open '" + path.string() + "' for writing");
    return slot.second;
  }

  std::vector<fs::path> close() {
    std::vector<fs::path> written;
    for (auto& [path, stream] : files_) {
      stream.flush();
      if (!stream) throw IoError("failed writing '" + path.string() + "'");
      stream.close();
      written.push_back(path);
    }
    return written;
  }

 private:
  std::deque<std::pair<fs::path, std::ofstream>> files_;
};

fs::path with_suffix(const RunConfig& config, const std::string& suffix) { return fs::path(config.out + suffix); }

nlohmann::json scan_json(const std::vector<GapSample>& scan) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : scan) out.push_back({{"abscissa", s.abscissa}, {"gap", s.gap}});
  return out;
}

nlohmann::json nullable(double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); }

}  // namespace

std::vector<fs::path> cmd_distribution(const RunConfig& config) {
  const std::vector<double> grid = config.theta_grid();
  const int steps = config.steps.at(0);

  OutputSet outputs;
  std::vector<std::ofstream*> csv_streams;
  if (config.has_format("csv")) {
    for (double theta : grid) csv_streams.push_back(&outputs.open(with_suffix(config, "_theta" + angle_label(theta) + ".csv")));
  }
  std::ofstream* svg_stream = config.has_format("svg") ? &outputs.open(with_suffix(config, ".svg")) : nullptr;

  std::vector<PositionDistribution> dists(grid.size());
  parallel_for_index(grid.size(), config.workers, [&](std::size_t i) {
    const WalkState s = evolve(initial_state(steps), build_coin(CoinParams::unbiased_degrees(grid[i])), steps);
    dists[i] = position_distribution(s);
  });

  for (std::size_t i = 0; i < csv_streams.size(); ++i) {
    Table table{{"x", "probability"}, {}};
    for (const auto& row : dists[i].rows) table.rows.push_back({double(row.x), row.probability});
    write_csv(*csv_streams[i], table);
  }
  if (svg_stream) {
    LinePlot plot{"Position distribution after " + std::to_string(steps) + " steps", "x", "P(x, t)", {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Series series{"theta = " + angle_label(grid[i]) + " deg", {}, false};
      for (const auto& row : dists[i].rows)
        if (row.x % 2 == 0) series.points.emplace_back(row.x, row.probability);
      plot.series.push_back(std::move(series));
    }
    *svg_stream << render_svg(plot);
  }
  return outputs.close();
}

std::vector<fs::path> cmd_transient(const RunConfig& config) {
  const std::vector<double> grid = config.theta_grid();
  const int steps = config.steps.at(0);

  OutputSet outputs;
  std::ofstream* csv_stream = config.has_format("csv") ? &outputs.open(with_suffix(config, ".csv")) : nullptr;
  std::ofstream* svg_stream = config.has_format("svg") ? &outputs.open(with_suffix(config, ".svg")) : nullptr;

  std::vector<std::vector<TransientSample>> series(grid.size());
  parallel_for_index(grid.size(), config.workers, [&](std::size_t i) {
    series[i] = transient_series(CoinParams::unbiased_degrees(grid[i]), steps);
  });

  if (csv_stream) {
    Table table{{"theta_deg", "t", "p_transient"}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (const auto& s : series[i]) table.rows.push_back({grid[i], double(s.t), s.probability});
    write_csv(*csv_stream, table);
  }
  if (svg_stream) {
    LinePlot plot{"Transient probability", "t", "P_tr(t)", {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Series line{"theta = " + angle_label(grid[i]) + " deg", {}, false};
      for (const auto& s : series[i]) line.points.emplace_back(s.t, s.probability);
      plot.series.push_back(std::move(line));
    }
    *svg_stream << render_svg(plot);
  }
  return outputs.close();
}

Table zeno_table(const std::vector<SweepRow>& rows) {
  Table table{{"theta_deg", "steps", "interval", "n", "p_undisturbed", "p_disturbed"}, {}};
  for (const auto& r : rows)
    table.rows.push_back({r.theta_deg, double(r.steps), double(r.interval), double(r.n), r.p_undisturbed, r.p_disturbed});
  return table;
}

Table sweep_table(const std::vector<SweepRow>& rows) {
  Table table{{"theta_deg", "steps", "interval", "n", "p_undisturbed", "p_disturbed", "transient", "variance", "ok"}, {}};
  for (const auto& r : rows) {
    table.rows.push_back({r.theta_deg, double(r.steps), double(r.interval), double(r.n), r.p_undisturbed,
                          r.p_disturbed, r.transient, r.variance, r.ok ? 1.0 : 0.0});
  }
  return table;
}

std::vector<fs::path> cmd_zeno(const RunConfig& config) {
  OutputSet outputs;
  std::ofstream* csv_stream = config.has_format("csv") ? &outputs.open(with_suffix(config, ".csv")) : nullptr;
  std::ofstream* svg_stream = config.has_format("svg") ? &outputs.open(with_suffix(config, ".svg")) : nullptr;

  std::vector<SweepRow> rows;
  for (int steps : config.steps) {
    SweepSpec spec{config.theta_grid(), steps, config.intervals, {true, true, false, false}};
    auto part = run_parallel(spec, config.workers);
    rows.insert(rows.end(), part.begin(), part.end());
  }

  if (csv_stream) write_csv(*csv_stream, zeno_table(rows));
  if (svg_stream) {
    LinePlot plot{"Survival probability at the origin", "theta (deg)", "survival", {}};
    std::map<std::pair<int, int>, Series> disturbed;
    std::map<int, Series> undisturbed;
    const int first_interval = *std::min_element(config.intervals.begin(), config.intervals.end());
    for (const auto& r : rows) {
      auto& d = disturbed[{r.steps, r.interval}];
      d.label = "P(0," + std::to_string(r.interval) + ")^" + std::to_string(r.n);
      d.points.emplace_back(r.theta_deg, r.p_disturbed);
      if (r.interval == first_interval) {
        auto& u = undisturbed[r.steps];
        u.label = "P(0," + std::to_string(r.steps) + ")";
        u.dashed = true;
        u.points.emplace_back(r.theta_deg, r.p_undisturbed);
      }
    }
    for (auto& [key, s] : disturbed) plot.series.push_back(std::move(s));
    for (auto& [key, s] : undisturbed) plot.series.push_back(std::move(s));
    *svg_stream << render_svg(plot);
  }
  return outputs.close();
}

std::vector<fs::path> cmd_critical(const RunConfig& config) {
  OutputSet outputs;
  std::ofstream& json_stream = outputs.open(with_suffix(config, ".json"));

  struct Job {
    int steps;
    int interval;
    double theta_deg;
  };
  const bool by_theta = *config.kind == "theta";
  std::vector<Job> jobs;
  for (int steps : config.steps) {
    if (by_theta) {
      for (int interval : config.intervals) jobs.push_back({steps, interval, 0.0});
    } else {
      for (double theta : config.theta_grid()) jobs.push_back({steps, 0, theta});
    }
  }

  std::vector<nlohmann::json> reports(jobs.size());
  parallel_for_index(jobs.size(), config.workers, [&](std::size_t i) {
    const Job& job = jobs[i];
    nlohmann::json report;
    report["kind"] = by_theta ? "theta_c" : "n_c";
    report["steps"] = job.steps;
    if (by_theta) {
      report["interval"] = job.interval;
      report["tolerance_deg"] = *config.tolerance_deg;
    } else {
      report["theta_deg"] = job.theta_deg;
      report["admissible"] = admissible_counts(job.steps);
    }
    try {
      const CriticalPoint p = by_theta ? critical_theta(job.steps, job.interval, *config.tolerance_deg)
                                       : critical_n(job.steps, CoinParams::unbiased_degrees(job.theta_deg));
      report["status"] = "ok";
      report["value"] = p.value;
      report["bracket"] = {p.bracket.first, p.bracket.second};
      report["gap_at_value"] = p.gap_at_value;
      report["scan"] = scan_json(p.scan);
    } catch (const NoTransition& e) {
      report["status"] = "no_transition";
      report["message"] = e.what();
      report["value"] = nullptr;
      report["bracket"] = nullptr;
      report["gap_at_value"] = nullptr;
      report["scan"] = scan_json(e.scan());
    }
    reports[i] = std::move(report);
  });

  json_stream << nlohmann::json(reports).dump(2) << '\n';
  return outputs.close();
}

std::vector<fs::path> cmd_sweep(const RunConfig& config) {
  OutputSet outputs;
  std::ofstream* csv_stream = config.has_format("csv") ? &outputs.open(with_suffix(config, ".csv")) : nullptr;
  std::ofstream* json_stream = config.has_format("json") ? &outputs.open(with_suffix(config, ".json")) : nullptr;

  const SweepSpec spec{config.theta_grid(), config.steps.at(0), config.intervals, {}};
  const std::vector<SweepRow> rows = run_parallel(spec, config.workers);

  if (csv_stream) write_csv(*csv_stream, sweep_table(rows));
  if (json_stream) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) {
      doc.push_back({{"theta_deg", r.theta_deg}, {"steps", r.steps}, {"interval", r.interval}, {"n", r.n},
                     {"p_undisturbed", nullable(r.p_undisturbed)}, {"p_disturbed", nullable(r.p_disturbed)},
                     {"transient", nullable(r.transient)}, {"variance", nullable(r.variance)}, {"ok", r.ok},
                     {"error", r.error}});
    }
    *json_stream << doc.dump(2) << '\n';
  }
  return outputs.close();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete-time quantum walk with periodic measurement at the origin", "zenowalk"};
  app.require_subcommand(1);

  struct Flags {
    std::optional<std::string> theta, theta_range, steps, interval, kind, out, config, workers, tolerance, seed;
    std::vector<std::string> formats;
  };
  std::map<std::string, Flags> flags;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"distribution", "position distribution P(x, t) per theta"},
      {"transient", "transient probability 1 - P(0, t) over even t"},
      {"zeno", "disturbed vs undisturbed survival over a theta grid"},
      {"critical", "critical coin angle or measurement count"},
      {"sweep", "full sweep table over theta and intervals"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    Flags& f = flags[name];
    sub->add_option("--theta", f.theta, "coin angles in degrees, comma separated");
    sub->add_option("--theta-range", f.theta_range, "min:max:step in degrees");
    sub->add_option("--steps", f.steps, "walk length(s), comma separated");
    sub->add_option("--interval", f.interval, "measurement interval(s), even, comma separated");
    sub->add_option("--kind", f.kind, "critical point kind: theta or n");
    sub->add_option("--out", f.out, "output path prefix");
    sub->add_option("--format", f.formats, "csv, json or svg (repeatable)")->allow_extra_args(false);
    sub->add_option("--config", f.config, "JSON file with the same keys as the flags");
    sub->add_option("--workers", f.workers, "worker threads");
    sub->add_option("--tolerance-deg", f.tolerance, "bisection tolerance in degrees");
    sub->add_option("--seed", f.seed, "reserved");
  }

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string name;
  for (const auto& [cmd, help] : commands)
    if (app.got_subcommand(cmd)) name = cmd;
  const Flags& f = flags[name];

  try {
    RunConfig config;
    config.command = name;
    if (f.config) {
      std::ifstream in(*f.config);
      if (!in) throw IoError("cannot read config file '" + *f.config + "'");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("config", std::string("malformed JSON: ") + e.what());
      }
      apply_json(config, doc);
    }
    if (f.theta) {
      config.theta = parse_double_list("theta", *f.theta);
      config.theta_range.reset();
    }
    if (f.theta_range) {
      config.theta_range = parse_theta_range(*f.theta_range);
      config.theta.reset();
    }
    if (f.theta && f.theta_range) throw ValidationError("theta", "give either --theta or --theta-range, not both");
    if (f.steps) config.steps = parse_int_list("steps", *f.steps);
    if (f.interval) config.intervals = parse_int_list("interval", *f.interval);
    if (f.kind) config.kind = *f.kind;
    if (f.out) config.out = *f.out;
    if (!f.formats.empty()) config.formats = parse_formats(f.formats);
    if (f.workers) {
      const auto w = parse_int_list("workers", *f.workers);
      if (w.size() != 1) throw ValidationError("workers", "expected one integer");
      config.workers = w[0];
    }
    if (f.tolerance) {
      const auto t = parse_double_list("tolerance-deg", *f.tolerance);
      if (t.size() != 1) throw ValidationError("tolerance-deg", "expected one number");
      config.tolerance_deg = t[0];
    }
    if (f.seed) {
      const auto s = parse_int_list("seed", *f.seed);
      if (s.size() != 1 || s[0] < 0) throw ValidationError("seed", "expected one non-negative integer");
      config.seed = static_cast<std::uint64_t>(s[0]);
    }
    validate(config);

    std::vector<fs::path> written;
    if (name == "distribution") written = cmd_distribution(config);
    else if (name == "transient") written = cmd_transient(config);
    else if (name == "zeno") written = cmd_zeno(config);
    else if (name == "critical") written = cmd_critical(config);
    else written = cmd_sweep(config);
    for (const auto& p : written) out << p.string() << '\n';
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "zenowalk: invalid " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "zenowalk: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "zenowalk: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace zenowalk::io
