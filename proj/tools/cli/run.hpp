#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "table.hpp"
#include "tabular.hpp"

namespace hdconc::cli {

enum class Command {
    simulate_minkowski,
    simulate_chebyshev,
    simulate_cosine,
    simulate_pca,
    analyze,
    pca_spectrum,
    density,
    theory,
};

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kNumericalFailure = 3 };

/// Everything one invocation needs. Fields a command does not use are ignored.
struct RunConfig {
    Command command = Command::theory;

    // Monte Carlo grid (simulate-*), also dims/ks/n/s/t for theory
    std::size_t n = 100;
    std::vector<double> ks{1.0, 2.0, 3.0};
    std::vector<std::size_t> dims{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    std::size_t trials = 8;
    std::uint64_t seed = 42;
    double s = 0.0;
    double t = 1.0;
    unsigned threads = 0;
    /// Emit per-dim aggregates instead of per-trial rows.
    bool summary = false;

    // analyze / pca-spectrum
    std::optional<std::filesystem::path> input;
    TabularOptions tabular;
    std::string metric = "minkowski";
    double k = 2.0;
    /// origin | centroid | row:<i> | comma-separated coordinates
    std::string query = "centroid";
    bool pairwise = false;
    bool ascending = false;
    double threshold = 0.9;

    // density
    std::uint64_t intervals = 4;
    std::uint64_t max_dim = 10;

    std::optional<std::filesystem::path> output;
    OutputFormat format = OutputFormat::csv;
};

/// Throws ParameterError on the first invalid field. Called before any work.
void validate(const RunConfig& config);

/// Computes the result table for `config` without touching the output.
Table build_table(const RunConfig& config);

/// validate + build_table + emit_table. Errors go to `err` and map to
/// ExitCode; nothing is written to the output on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and calls run().
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdconc::cli
