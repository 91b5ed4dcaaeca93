#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdconc/dataset.hpp"

namespace hdconc {

/// L_k distance (sum |a_i - b_i|^k)^(1/k) for real k >= 1.
/// Coordinates are divided by the largest |a_i - b_i| before powering so
/// large k cannot overflow.
double minkowski_distance(std::span<const double> a, std::span<const double> b, double k);

/// max_i |a_i - b_i|
double chebyshev_distance(std::span<const double> a, std::span<const double> b);

/// <a, b> / (|a|_2 |b|_2), clamped to [-1, 1].
///
/// This is a similarity: 1 for parallel vectors, 0 for orthogonal ones.
/// Texts on distance concentration often call the same quantity the
/// "cosine distance"; no 1 - cos conversion is applied here.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

enum class MetricKind { minkowski, chebyshev, cosine };

class Metric {
public:
    static Metric minkowski(double k);
    static Metric chebyshev() { return Metric(MetricKind::chebyshev, 0.0); }
    static Metric cosine() { return Metric(MetricKind::cosine, 0.0); }

    MetricKind kind() const noexcept { return kind_; }
    /// Norm order; meaningful for minkowski only.
    double k() const noexcept { return k_; }
    std::string name() const;

    double operator()(std::span<const double> a, std::span<const double> b) const;

private:
    Metric(MetricKind kind, double k) : kind_(kind), k_(k) {}

    MetricKind kind_;
    double k_;
};

/// Summary of a set of distances (or similarities).
struct ConcentrationStats {
    std::size_t dim = 0;  ///< feature count
    std::size_t n = 0;    ///< sample count
    double d_min = 0.0;
    double d_max = 0.0;
    /// (d_max - d_min) / d_min; empty when d_min <= 0.
    std::optional<double> rdr;
    double mean = 0.0;
    double variance = 0.0;  ///< population (1/N)

    bool rdr_defined() const noexcept { return rdr.has_value(); }
};

/// Element i is metric(sample_i, q). For cosine the stored value is the
/// similarity. Kernel errors are rethrown with the sample index.
std::vector<double> query_distances(const Dataset& data, const QueryPoint& q, const Metric& m);

/// Min, max, mean, population variance and relative distance ratio of a
/// value list. `dim` and `n` are copied into the result.
ConcentrationStats summarize_values(std::span<const double> values, std::size_t dim, std::size_t n);

/// Statistics of query_distances(). Needs at least two samples.
ConcentrationStats concentration_stats(const Dataset& data, const QueryPoint& q, const Metric& m);

/// Statistics over the n(n-1)/2 unordered sample-pair cosine similarities.
ConcentrationStats pairwise_cosine_stats(const Dataset& data);

}  // namespace hdconc
