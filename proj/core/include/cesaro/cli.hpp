#pragma once

#include <string>

#include "cesaro/io.hpp"

namespace cesaro {

/// Options shared by the CLI commands. Empty paths mean stdout / no dump.
struct CliOptions {
    std::string config_path;
    std::string input_path;
    std::string out_path;
    std::string dump_prefix;   // plot-ready CSV curves (f, fhat, Awf, Bwf, g...)
    bool with_oracle = false;
    bool has_eps = false;
    bool has_eta = false;
    bool has_seed = false;
    double eps = 0.0;
    double eta = 0.0;
    std::uint64_t seed = 0;
    int n_max = 8;             // l1-escape
};

/// Run one subcommand (norm, dual-norm, majorant, duality, slice,
/// l1-escape, validate-weight). Returns the process exit code:
/// 0 success, 2 input validation failure, 3 numerical failure.
/// Honors the CESARO_LOG environment variable for progress notes on stderr.
int run_command(const std::string& command, const CliOptions& opts);

} // namespace cesaro
