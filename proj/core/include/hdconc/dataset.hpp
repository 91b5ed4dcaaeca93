#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdconc/matrix.hpp"

namespace hdconc {

/// One broken invariant found by validate_dataset().
struct Violation {
    enum class Kind { empty_dataset, non_finite_entry, label_count_mismatch };

    Kind kind;
    std::size_t row = 0;
    std::size_t col = 0;
    std::string message;
};

/// Checks the Dataset invariants on raw parts. Returns every violation found;
/// an empty list means the parts form a valid Dataset.
std::vector<Violation> validate_dataset(const Matrix& values,
                                        const std::optional<std::vector<std::string>>& labels = std::nullopt);

/// n_samples x n_features real matrix with optional per-sample labels.
///
/// Samples are rows and features are columns. Every covariance and Gram
/// formula in this library is written against that layout; a d x n
/// "columns are samples" matrix must be transposed before it is wrapped.
/// Immutable once constructed.
class Dataset {
public:
    /// Throws ValidationError listing the violations if the parts are invalid.
    explicit Dataset(Matrix values, std::optional<std::vector<std::string>> labels = std::nullopt);

    std::size_t n_samples() const noexcept { return values_.rows(); }
    std::size_t n_features() const noexcept { return values_.cols(); }

    const Matrix& values() const noexcept { return values_; }
    std::span<const double> sample(std::size_t i) const noexcept { return values_.row(i); }
    const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

    /// Dataset restricted to the first `count` features (labels kept).
    Dataset leading_features(std::size_t count) const;
    /// Per-feature mean.
    std::vector<double> centroid() const;

private:
    Matrix values_;
    std::optional<std::vector<std::string>> labels_;
};

/// Parameters of an IID U(s, t) generator. Requires finite s < t.
class UniformSpec {
public:
    UniformSpec(double s, double t, std::uint64_t seed);

    double lower() const noexcept { return s_; }
    double upper() const noexcept { return t_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// (t - s)^2 / 12
    double variance() const noexcept;
    /// (s + t) / 2
    double mean() const noexcept;

private:
    double s_;
    double t_;
    std::uint64_t seed_;
};

/// A query location in feature space; all coordinates finite.
class QueryPoint {
public:
    explicit QueryPoint(std::vector<double> coords);

    static QueryPoint origin(std::size_t dim);

    std::size_t size() const noexcept { return coords_.size(); }
    std::span<const double> coords() const noexcept { return coords_; }

private:
    std::vector<double> coords_;
};

}  // namespace hdconc
