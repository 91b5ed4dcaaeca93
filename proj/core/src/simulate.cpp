#include "hdconc/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "hdconc/error.hpp"
#include "hdconc/metrics.hpp"
#include "hdconc/pca.hpp"
#include "hdconc/random.hpp"
#include "hdconc/theory.hpp"

namespace hdconc {

namespace {

using CellFn = std::function<std::vector<ExperimentRow>(std::size_t dim, std::size_t trial)>;

// Runs every (dim, trial) cell, possibly on several threads, and
// concatenates the per-cell rows in (dim, trial) order.
std::vector<ExperimentRow> run_cells(const ExperimentGrid& grid, const CellFn& cell) {
    const std::size_t cells = grid.dims.size() * grid.trials;
    std::vector<std::vector<ExperimentRow>> results(cells);

    unsigned workers = grid.threads != 0 ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < cells; i = next.fetch_add(1)) {
            try {
                results[i] = cell(grid.dims[i / grid.trials], i % grid.trials);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(cells);
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<ExperimentRow> rows;
    for (auto& r : results) {
        rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
    return rows;
}

Dataset cell_data(const ExperimentGrid& grid, double s, double t, std::size_t dim, std::size_t trial) {
    return generate_uniform(grid.n, dim, UniformSpec(s, t, cell_seed(grid.base_seed, dim, trial)));
}

ExperimentRow base_row(const ExperimentGrid& grid, std::size_t dim, std::size_t trial, const ConcentrationStats& st) {
    ExperimentRow row;
    row.dim = dim;
    row.trial = trial;
    row.n = grid.n;
    row.d_min = st.d_min;
    row.d_max = st.d_max;
    row.rdr = st.rdr;
    row.mean = st.mean;
    row.variance = st.variance;
    return row;
}

}  // namespace

void ExperimentGrid::validate() const {
    if (dims.empty()) {
        throw ParameterError("dimension grid is empty");
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] == 0) {
            throw ParameterError("dimensions must be positive");
        }
        if (i > 0 && dims[i] <= dims[i - 1]) {
            throw ParameterError("dimensions must be strictly ascending");
        }
    }
    if (trials == 0) {
        throw ParameterError("trials must be >= 1");
    }
    if (n == 0) {
        throw ParameterError("sample count must be >= 1");
    }
    if (!std::isfinite(s) || !std::isfinite(t) || !(s < t)) {
        throw ParameterError("coordinate range requires s < t");
    }
    for (double k : ks) {
        if (!(k >= 1.0) || !std::isfinite(k)) {
            throw ParameterError("Minkowski orders must be >= 1");
        }
    }
}

std::vector<ExperimentRow> run_minkowski_experiment(const ExperimentGrid& grid) {
    grid.validate();
    if (grid.ks.empty()) {
        throw ParameterError("at least one Minkowski order is required");
    }
    if (grid.n < 2) {
        throw ParameterError("Minkowski experiment needs n >= 2");
    }
    return run_cells(grid, [&](std::size_t dim, std::size_t trial) {
        const Dataset data = cell_data(grid, 0.0, 1.0, dim, trial);
        const QueryPoint origin = QueryPoint::origin(dim);
        std::vector<ExperimentRow> rows;
        for (double k : grid.ks) {
            ExperimentRow row = base_row(grid, dim, trial, concentration_stats(data, origin, Metric::minkowski(k)));
            const auto bounds = theory::rdr_bounds(k, grid.n, dim);
            row.k = k;
            row.limit = theory::minkowski_normalized_limit(k);
            row.lower_bound = bounds.lower;
            row.upper_bound = bounds.upper;
            rows.push_back(row);
        }
        return rows;
    });
}

std::vector<ExperimentRow> run_chebyshev_experiment(const ExperimentGrid& grid) {
    grid.validate();
    if (grid.s < 0.0) {
        throw ParameterError("Chebyshev experiment requires s >= 0");
    }
    if (grid.n < 2) {
        throw ParameterError("Chebyshev experiment needs n >= 2");
    }
    return run_cells(grid, [&](std::size_t dim, std::size_t trial) {
        const Dataset data = cell_data(grid, grid.s, grid.t, dim, trial);
        ExperimentRow row =
            base_row(grid, dim, trial, concentration_stats(data, QueryPoint::origin(dim), Metric::chebyshev()));
        row.expected_max = theory::chebyshev_expected_max(grid.s, grid.t, dim);
        row.limit = grid.t;
        return std::vector<ExperimentRow>{row};
    });
}

std::vector<ExperimentRow> run_cosine_experiment(const ExperimentGrid& grid) {
    grid.validate();
    if (grid.n < 2) {
        throw ParameterError("cosine experiment needs n >= 2");
    }
    return run_cells(grid, [&](std::size_t dim, std::size_t trial) {
        const Dataset data = cell_data(grid, grid.s, grid.t, dim, trial);
        ExperimentRow row = base_row(grid, dim, trial, pairwise_cosine_stats(data));
        row.limit = theory::cosine_limit(grid.s, grid.t);
        return std::vector<ExperimentRow>{row};
    });
}

std::vector<ExperimentRow> run_pca_experiment(const ExperimentGrid& grid) {
    grid.validate();
    if (grid.n < 2) {
        throw ParameterError("PCA experiment needs n >= 2");
    }
    return run_cells(grid, [&](std::size_t dim, std::size_t trial) {
        const Dataset data = cell_data(grid, grid.s, grid.t, dim, trial);
        const EigenSpectrum sp = spectrum_hdlss(data);

        ExperimentRow row;
        row.dim = dim;
        row.trial = trial;
        row.n = grid.n;
        row.d_min = sp.smallest();
        row.d_max = sp.largest();
        row.mean = sp.total() / static_cast<double>(dim);
        row.limit = theory::eigen_mean_limit(grid.n, theory::uniform_variance(grid.s, grid.t));
        row.zero_count = sp.zero_count;
        if (!sp.ccr.empty()) {
            row.pcs_90 = pcs_to_reach(sp, 0.9);
            row.ccr_top_n = sp.ccr[std::min(grid.n, dim) - 1];
            if (dim > grid.n) {
                row.ccr_bottom = ccr_curve(sp, true)[dim - grid.n - 1];
            }
        }
        return std::vector<ExperimentRow>{row};
    });
}

std::vector<DimSummary> summarize_trials(const std::vector<ExperimentRow>& rows) {
    std::vector<DimSummary> out;
    std::vector<std::size_t> rdr_counts;
    for (const auto& row : rows) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const DimSummary& s) { return s.dim == row.dim && s.k == row.k; });
        if (it == out.end()) {
            DimSummary fresh;
            fresh.dim = row.dim;
            fresh.k = row.k;
            out.push_back(fresh);
            rdr_counts.push_back(0);
            it = out.end() - 1;
        }
        auto& sum = *it;
        auto& rdr_count = rdr_counts[static_cast<std::size_t>(it - out.begin())];
        sum.trials += 1;
        sum.mean_d_min += row.d_min;
        sum.mean_d_max += row.d_max;
        sum.mean_mean += row.mean;
        sum.mean_variance += row.variance;
        if (row.rdr) {
            const double r = *row.rdr;
            sum.mean_rdr = sum.mean_rdr.value_or(0.0) + r;
            sum.min_rdr = sum.min_rdr ? std::min(*sum.min_rdr, r) : r;
            sum.max_rdr = sum.max_rdr ? std::max(*sum.max_rdr, r) : r;
            ++rdr_count;
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double t = static_cast<double>(out[i].trials);
        out[i].mean_d_min /= t;
        out[i].mean_d_max /= t;
        out[i].mean_mean /= t;
        out[i].mean_variance /= t;
        if (out[i].mean_rdr) {
            *out[i].mean_rdr /= static_cast<double>(rdr_counts[i]);
        }
    }
    return out;
}

}  // namespace hdconc
