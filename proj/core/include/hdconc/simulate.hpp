#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hdconc {

/// Monte Carlo plan: every (dim, trial) cell draws its own dataset from
/// cell_seed(base_seed, dim, trial), so cells are independent of each
/// other and of the grid they sit in.
struct ExperimentGrid {
    std::vector<std::size_t> dims{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    std::size_t trials = 8;
    std::uint64_t base_seed = 42;
    std::size_t n = 100;
    /// Norm orders, Minkowski experiments only.
    std::vector<double> ks{1.0};
    /// Coordinate range for Chebyshev, cosine and PCA experiments.
    double s = 0.0;
    double t = 1.0;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;

    /// Throws ParameterError if dims are not strictly ascending and positive,
    /// trials or n is zero, or s >= t.
    void validate() const;
};

/// One (dim, trial[, k]) cell. Fields not produced by an experiment stay empty.
struct ExperimentRow {
    std::size_t dim = 0;
    std::size_t trial = 0;
    std::size_t n = 0;
    std::optional<double> k;

    double d_min = 0.0;
    double d_max = 0.0;
    std::optional<double> rdr;
    double mean = 0.0;
    double variance = 0.0;

    std::optional<double> limit;
    std::optional<double> lower_bound;
    std::optional<double> upper_bound;
    std::optional<double> expected_max;

    // PCA experiments
    std::optional<std::size_t> zero_count;
    std::optional<std::size_t> pcs_90;
    /// Descending CCR after min(n, dim) components.
    std::optional<double> ccr_top_n;
    /// Ascending CCR over the dim - n smallest eigenvalues (dim > n only).
    std::optional<double> ccr_bottom;
};

/// U(0,1) data, origin query; per k: RDR statistics, rdr_bounds, normalized limit.
/// Rows ordered by (dim, trial, k in grid order).
std::vector<ExperimentRow> run_minkowski_experiment(const ExperimentGrid& grid);

/// U(s,t) data with 0 <= s, origin query; Chebyshev distance statistics plus
/// the single-point expected maximum. `limit` holds t.
std::vector<ExperimentRow> run_chebyshev_experiment(const ExperimentGrid& grid);

/// U(s,t) data; statistics over all pairwise cosine similarities plus the
/// cosine limit.
std::vector<ExperimentRow> run_cosine_experiment(const ExperimentGrid& grid);

/// U(s,t) data; covariance spectrum via the Gram path. `mean` holds
/// (1/d) sum lambda and `limit` the eigen_mean_limit reference.
std::vector<ExperimentRow> run_pca_experiment(const ExperimentGrid& grid);

/// Per-(dim, k) aggregate over trials.
struct DimSummary {
    std::size_t dim = 0;
    std::optional<double> k;
    std::size_t trials = 0;
    double mean_d_min = 0.0;
    double mean_d_max = 0.0;
    double mean_mean = 0.0;
    double mean_variance = 0.0;
    /// Mean, min and max RDR over trials with a defined RDR.
    std::optional<double> mean_rdr;
    std::optional<double> min_rdr;
    std::optional<double> max_rdr;
};

/// Groups rows by (dim, k) in first-appearance order.
std::vector<DimSummary> summarize_trials(const std::vector<ExperimentRow>& rows);

}  // namespace hdconc
