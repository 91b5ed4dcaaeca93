#pragma once

#include <cstddef>

namespace hdconc::theory {

// Closed-form predictors for IID uniform coordinates. Each function throws
// ParameterError outside its documented domain.

/// lim D / d^(1/k) for U(0,1) coordinates and an origin query:
/// (1 / (k + 1))^(1/k). Requires k >= 1.
double minkowski_normalized_limit(double k);

/// Asymptotic envelope of the relative distance ratio.
struct RdrBounds {
    double lower;  ///< 2 / sqrt(pi d (2k + 1))
    double upper;  ///< n (n - 1) / sqrt(pi d (2k + 1))
    std::size_t d;
    double k;
    std::size_t n;
};

/// Only expected to contain simulated RDR for large d (>= 100 or so).
RdrBounds rdr_bounds(double k, std::size_t n, std::size_t d);

/// E[max_i a_i] for one point with d coordinates a_i ~ U(s, t):
/// (t d + s) / (d + 1). Requires 0 <= s <= t.
double chebyshev_expected_max(double s, double t, std::size_t d);

/// Var[max_i a_i] for the same point: (t - s)^2 d / ((d + 1)^2 (d + 2)).
double chebyshev_variance(double s, double t, std::size_t d);

/// lim cos<A, B> for independent A, B with U(s, t) coordinates:
/// 3/4 (1 + s t / (s^2 + s t + t^2)). Requires s < t.
double cosine_limit(double s, double t);

/// lim (1/d) sum of covariance eigenvalues: (n - 1) / n * var_x.
double eigen_mean_limit(std::size_t n, double var_x);

/// Variance of U(s, t): (t - s)^2 / 12.
double uniform_variance(double s, double t);

}  // namespace hdconc::theory
