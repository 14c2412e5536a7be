#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "zenowalk/analysis.hpp"
#include "zenowalk/io/config.hpp"
#include "zenowalk/io/csv.hpp"

namespace zenowalk::io {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitIo = 3 };

/// Each command validates first, opens every output file, then computes.
/// Returns the paths written.
std::vector<std::filesystem::path> cmd_distribution(const RunConfig& config);
std::vector<std::filesystem::path> cmd_transient(const RunConfig& config);
std::vector<std::filesystem::path> cmd_zeno(const RunConfig& config);
std::vector<std::filesystem::path> cmd_critical(const RunConfig& config);
std::vector<std::filesystem::path> cmd_sweep(const RunConfig& config);

/// theta_deg,steps,interval,n,p_undisturbed,p_disturbed
Table zeno_table(const std::vector<SweepRow>& rows);
/// theta_deg,steps,interval,n,p_undisturbed,p_disturbed,transient,variance,ok
Table sweep_table(const std::vector<SweepRow>& rows);

/// Whole `zenowalk` command line; argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zenowalk::io
