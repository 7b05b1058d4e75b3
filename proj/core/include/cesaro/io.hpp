#pragma once

#include <cstdint>
#include <string>

#include "cesaro/witness.hpp"

namespace cesaro {

struct OracleResult;

/// Read a sampled function from CSV (`x,value` header, strictly ascending
/// x). Errors name the offending row. l is the right endpoint the grid
/// must respect.
SampledFunction read_function_csv(const std::string& path, double l);

void write_function_csv(const std::string& path, const SampledFunction& f);

/// Parsed run configuration: the weight, grid generation parameters, and
/// command defaults. Table weights load their CSV relative to the config.
struct RunConfig {
    WeightSpec weight = WeightSpec::power(-1.0, 2.0, 1.0);
    std::size_t grid_n = 10000;
    GridScheme grid_scheme = GridScheme::GeometricNearZero;
    double grid_x_min = 0.0;  // zero means: derive a default
    double grid_x_max = 0.0;
    double eps = 0.1;
    double eta = 0.5;
    std::uint64_t seed = 42;

    GridPtr build_grid() const;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text,
                            const std::string& base_dir);

/// JSON renderings of the reports emitted by the CLI.
std::string to_json(const NormReport& r);
std::string dual_norm_json(const NormReport& segment, const NormReport& quad,
                           const OracleResult* oracle);
std::string to_json(const Majorant& m);
std::string to_json(const WitnessReport& r, bool slice);
std::string l1_escape_json(const std::vector<L1EscapeReport>& rows);
std::string to_json(const WeightDiagnosis& d);

} // namespace cesaro
