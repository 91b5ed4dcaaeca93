#include "hdconc/theory.hpp"

#include <cmath>
#include <numbers>

#include "hdconc/error.hpp"

namespace hdconc::theory {

namespace {

void require_k(double k) {
    if (!(k >= 1.0) || !std::isfinite(k)) {
        throw ParameterError("norm order k must be a finite value >= 1");
    }
}

void require_chebyshev_range(double s, double t) {
    if (!std::isfinite(s) || !std::isfinite(t) || s < 0.0 || s > t) {
        throw ParameterError("Chebyshev predictors require 0 <= s <= t");
    }
}

void require_positive_dim(std::size_t d) {
    if (d == 0) {
        throw ParameterError("dimension must be >= 1");
    }
}

}  // namespace

double minkowski_normalized_limit(double k) {
    require_k(k);
    return std::pow(1.0 / (k + 1.0), 1.0 / k);
}

RdrBounds rdr_bounds(double k, std::size_t n, std::size_t d) {
    require_k(k);
    require_positive_dim(d);
    if (n < 2) {
        throw ParameterError("RDR bounds need n >= 2");
    }
    const double denom = std::sqrt(std::numbers::pi * static_cast<double>(d) * (2.0 * k + 1.0));
    const double nn = static_cast<double>(n);
    return {2.0 / denom, nn * (nn - 1.0) / denom, d, k, n};
}

double chebyshev_expected_max(double s, double t, std::size_t d) {
    require_chebyshev_range(s, t);
    require_positive_dim(d);
    const double dd = static_cast<double>(d);
    return (t * dd + s) / (dd + 1.0);
}

double chebyshev_variance(double s, double t, std::size_t d) {
    require_chebyshev_range(s, t);
    require_positive_dim(d);
    const double dd = static_cast<double>(d);
    const double w = t - s;
    return w * w * dd / ((dd + 1.0) * (dd + 1.0) * (dd + 2.0));
}

double cosine_limit(double s, double t) {
    if (!std::isfinite(s) || !std::isfinite(t) || !(s < t)) {
        throw ParameterError("cosine limit requires s < t");
    }
    const double st = s * t;
    return 0.75 * (1.0 + st / (s * s + st + t * t));
}

double eigen_mean_limit(std::size_t n, double var_x) {
    if (n < 2) {
        throw ParameterError("eigenvalue mean limit needs n >= 2");
    }
    if (!(var_x >= 0.0) || !std::isfinite(var_x)) {
        throw ParameterError("variance must be finite and non-negative");
    }
    const double nn = static_cast<double>(n);
    return (nn - 1.0) / nn * var_x;
}

double uniform_variance(double s, double t) {
    if (!(s <= t)) {
        throw ParameterError("uniform variance requires s <= t");
    }
    return (t - s) * (t - s) / 12.0;
}

}  // namespace hdconc::theory
