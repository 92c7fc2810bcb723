#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqr::cli {

enum ExitCode : int { ok = 0, verified_failure = 1, usage_error = 2 };

/// Runs one command line (without the program name) and returns the exit code.
/// Reports go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs every experiment of a suite file, writing one report per experiment
/// and summary.json into `out_dir`.
int run_suite(const std::string& config_path, const std::string& out_dir, std::ostream& out, std::ostream& err);

}  // namespace tqr::cli
