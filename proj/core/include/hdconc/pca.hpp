#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hdconc/dataset.hpp"
#include "hdconc/matrix.hpp"

namespace hdconc {

/// Square, finite matrix symmetric to within 1e-12 of its largest entry.
class CovarianceMatrix {
public:
    /// Throws ValidationError if `values` is not square, finite and symmetric.
    explicit CovarianceMatrix(Matrix values);

    const Matrix& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.rows(); }
    double trace() const noexcept;

private:
    Matrix values_;
};

/// Eigenvalues sorted in descending order, with derived quantities.
struct EigenSpectrum {
    std::vector<double> eigenvalues;
    /// Descending cumulative contribution ratio; empty when all eigenvalues are 0.
    std::vector<double> ccr;
    std::size_t zero_count = 0;
    /// Column j is the unit eigenvector of eigenvalues[j]. Only filled on request.
    std::optional<Matrix> eigenvectors;

    double total() const noexcept;
    double largest() const noexcept { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
    double smallest() const noexcept { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

/// Builds the derived fields (sorting, ccr, zero_count) from raw eigenvalues.
/// Eigenvalues below -1e-10 * max|lambda| raise ValidationError (not PSD);
/// smaller negative values are rounding and are clamped to 0.
EigenSpectrum make_spectrum(std::vector<double> eigenvalues);

/// Population covariance c_ij = 1/n sum_l (x_li - mu_i)(x_lj - mu_j) over
/// the feature columns. Needs at least two samples.
CovarianceMatrix covariance(const Dataset& data);

struct JacobiOptions {
    bool eigenvectors = false;
    int max_sweeps = 100;
    /// Stop once the off-diagonal Frobenius norm falls below
    /// tolerance * (initial Frobenius norm).
    double tolerance = 1e-12;
};

/// Full spectrum by cyclic Jacobi rotations. Throws NumericalError when
/// max_sweeps is exhausted.
EigenSpectrum eigen_symmetric(const CovarianceMatrix& m, const JacobiOptions& options = {});

/// Covariance spectrum computed through the n x n Gram matrix
/// (1/n) X~ X~^T of centred samples when d > n; the remaining d - n
/// eigenvalues are exactly zero and are appended. Falls back to
/// eigen_symmetric(covariance(data)) when d <= n.
EigenSpectrum spectrum_hdlss(const Dataset& data);

/// Cumulative eigenvalue sums divided by the total, in descending or
/// ascending eigenvalue order. Throws DegenerateInputError if the total is 0.
std::vector<double> ccr_curve(const EigenSpectrum& spectrum, bool ascending);

/// Relative cutoff used to call an eigenvalue zero.
inline constexpr double kZeroEigenvalueRatio = 1e-10;

/// Number of eigenvalues below 1e-10 * lambda_max; the whole length for an
/// identically zero spectrum.
std::size_t zero_eigenvalue_count(const EigenSpectrum& spectrum);

/// Smallest number of leading components whose descending CCR reaches
/// `threshold` (in (0, 1]).
std::size_t pcs_to_reach(const EigenSpectrum& spectrum, double threshold);

/// Element j (0-based) is lambda_min / sum(lambda) for the covariance of the
/// first j + 1 features, in native column order. Nonincreasing by Cauchy
/// interlacing. Throws DegenerateInputError if a prefix has zero variance.
std::vector<double> smallest_contribution_curve(const Dataset& data);

}  // namespace hdconc
