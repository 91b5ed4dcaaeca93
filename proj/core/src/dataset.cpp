#include "hdconc/dataset.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "hdconc/error.hpp"

namespace hdconc {

std::vector<Violation> validate_dataset(const Matrix& values,
                                        const std::optional<std::vector<std::string>>& labels) {
    std::vector<Violation> found;
    if (values.empty()) {
        found.push_back({Violation::Kind::empty_dataset, 0, 0, "empty dataset"});
    }
    for (std::size_t i = 0; i < values.rows(); ++i) {
        for (std::size_t j = 0; j < values.cols(); ++j) {
            if (!std::isfinite(values(i, j))) {
                std::ostringstream msg;
                msg << "non-finite entry at (" << i << "," << j << ")";
                found.push_back({Violation::Kind::non_finite_entry, i, j, msg.str()});
            }
        }
    }
    if (labels && labels->size() != values.rows()) {
        std::ostringstream msg;
        msg << "label count " << labels->size() << " does not match sample count " << values.rows();
        found.push_back({Violation::Kind::label_count_mismatch, 0, 0, msg.str()});
    }
    return found;
}

Dataset::Dataset(Matrix values, std::optional<std::vector<std::string>> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
    const auto violations = validate_dataset(values_, labels_);
    if (!violations.empty()) {
        std::string msg = "invalid dataset: " + violations.front().message;
        if (violations.size() > 1) {
            msg += " (and " + std::to_string(violations.size() - 1) + " more)";
        }
        throw ValidationError(msg);
    }
}

Dataset Dataset::leading_features(std::size_t count) const {
    if (count == 0 || count > n_features()) {
        throw DimensionError("feature prefix length out of range");
    }
    Matrix m(n_samples(), count);
    for (std::size_t i = 0; i < n_samples(); ++i) {
        const auto src = sample(i);
        auto dst = m.row(i);
        for (std::size_t j = 0; j < count; ++j) {
            dst[j] = src[j];
        }
    }
    return Dataset(std::move(m), labels_);
}

std::vector<double> Dataset::centroid() const {
    std::vector<double> mu(n_features(), 0.0);
    for (std::size_t i = 0; i < n_samples(); ++i) {
        const auto x = sample(i);
        for (std::size_t j = 0; j < mu.size(); ++j) {
            mu[j] += x[j];
        }
    }
    for (double& v : mu) {
        v /= static_cast<double>(n_samples());
    }
    return mu;
}

UniformSpec::UniformSpec(double s, double t, std::uint64_t seed) : s_(s), t_(t), seed_(seed) {
    if (!std::isfinite(s) || !std::isfinite(t)) {
        throw ValidationError("uniform bounds must be finite");
    }
    if (!(s < t)) {
        throw ValidationError("uniform lower bound must be below upper bound");
    }
}

double UniformSpec::variance() const noexcept { return (t_ - s_) * (t_ - s_) / 12.0; }

double UniformSpec::mean() const noexcept { return 0.5 * (s_ + t_); }

QueryPoint::QueryPoint(std::vector<double> coords) : coords_(std::move(coords)) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i])) {
            throw ValidationError("query coordinate " + std::to_string(i) + " is not finite");
        }
    }
}

QueryPoint QueryPoint::origin(std::size_t dim) { return QueryPoint(std::vector<double>(dim, 0.0)); }

}  // namespace hdconc
