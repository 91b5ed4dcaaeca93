#include "hdconc/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "hdconc/error.hpp"

namespace hdconc {

namespace {

// Jacobi sweep result before sorting. `vectors_by_row` holds V^T (row j is
// the eigenvector paired with values[j]) when requested.
struct RawEigen {
    std::vector<double> values;
    std::optional<Matrix> vectors_by_row;
};

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto row = a.row(i);
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            sum += row[j] * row[j];
        }
    }
    return std::sqrt(2.0 * sum);
}

double off_diagonal_abs_sum(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto row = a.row(i);
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            sum += std::abs(row[j]);
        }
    }
    return sum;
}

// Rotation in the (p, q) plane that annihilates a(p, q):
// a <- J^T a J with J = [[c, s], [-s, c]] embedded at rows/cols p, q.
void rotate(Matrix& a, std::optional<Matrix>& vt, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) {
        t = -t;
    }
    if (!std::isfinite(t)) {
        t = 0.5 / theta;  // theta*theta overflowed
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = a.rows();
    auto row_p = a.row(p);
    auto row_q = a.row(q);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) {
            continue;
        }
        const double akp = row_p[k];
        const double akq = row_q[k];
        const double new_p = c * akp - s * akq;
        const double new_q = s * akp + c * akq;
        row_p[k] = new_p;
        row_q[k] = new_q;
        a(k, p) = new_p;
        a(k, q) = new_q;
    }
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    if (vt) {
        auto vp = vt->row(p);
        auto vq = vt->row(q);
        for (std::size_t k = 0; k < n; ++k) {
            const double x = vp[k];
            const double y = vq[k];
            vp[k] = c * x - s * y;
            vq[k] = s * x + c * y;
        }
    }
}

RawEigen jacobi(Matrix a, const JacobiOptions& options) {
    const std::size_t n = a.rows();
    RawEigen out;
    if (options.eigenvectors) {
        out.vectors_by_row = Matrix::identity(n);
    }

    const double target = options.tolerance * frobenius_norm(a);
    bool converged = false;
    for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) {
            converged = true;
            break;
        }
        if (sweep == options.max_sweeps) {
            break;
        }
        // Early sweeps skip rotations below a coarse threshold; later sweeps
        // zero entries that no longer change either diagonal element.
        const double nn = static_cast<double>(n);
        const double threshold = sweep < 3 ? 0.2 * off_diagonal_abs_sum(a) / (nn * nn) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                const double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + g == std::abs(a(q, q))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                if (apq == 0.0 || std::abs(apq) <= threshold) {
                    continue;
                }
                rotate(a, out.vectors_by_row, p, q);
            }
        }
    }
    if (!converged) {
        throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) +
                             " sweeps");
    }
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a(i, i);
    }
    return out;
}

// Descending order, ties broken by original index so results are stable.
std::vector<std::size_t> descending_order(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
    return order;
}

void clamp_negative(std::vector<double>& values) {
    double scale = 0.0;
    for (double v : values) {
        scale = std::max(scale, std::abs(v));
    }
    for (double& v : values) {
        if (v < -kZeroEigenvalueRatio * scale) {
            throw ValidationError("matrix is not positive semidefinite (eigenvalue " + std::to_string(v) + ")");
        }
        v = std::max(v, 0.0);
    }
}

EigenSpectrum finish(EigenSpectrum sp) {
    if (sp.total() > 0.0) {
        sp.ccr = ccr_curve(sp, false);
    }
    sp.zero_count = zero_eigenvalue_count(sp);
    return sp;
}

// Centred copy of the data matrix.
Matrix centred(const Dataset& data) {
    const auto mu = data.centroid();
    Matrix x = data.values();
    for (std::size_t i = 0; i < x.rows(); ++i) {
        auto r = x.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            r[j] -= mu[j];
        }
    }
    return x;
}

void require_two_samples(const Dataset& data) {
    if (data.n_samples() < 2) {
        throw InsufficientDataError("covariance needs at least 2 samples");
    }
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Matrix values) : values_(std::move(values)) {
    if (values_.rows() != values_.cols()) {
        throw ValidationError("covariance matrix must be square");
    }
    double scale = 0.0;
    for (double v : values_.values()) {
        if (!std::isfinite(v)) {
            throw ValidationError("covariance matrix has a non-finite entry");
        }
        scale = std::max(scale, std::abs(v));
    }
    const double tol = 1e-12 * scale;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (std::abs(values_(i, j) - values_(j, i)) > tol) {
                throw ValidationError("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) +
                                      ")");
            }
        }
    }
}

double CovarianceMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        t += values_(i, i);
    }
    return t;
}

double EigenSpectrum::total() const noexcept {
    double s = 0.0;
    for (double v : eigenvalues) {
        s += v;
    }
    return s;
}

EigenSpectrum make_spectrum(std::vector<double> eigenvalues) {
    clamp_negative(eigenvalues);
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    EigenSpectrum sp;
    sp.eigenvalues = std::move(eigenvalues);
    return finish(std::move(sp));
}

CovarianceMatrix covariance(const Dataset& data) {
    require_two_samples(data);
    const Matrix x = centred(data);
    const std::size_t d = x.cols();
    Matrix c(d, d);
    for (std::size_t l = 0; l < x.rows(); ++l) {
        const auto r = x.row(l);
        for (std::size_t i = 0; i < d; ++i) {
            const double ri = r[i];
            auto ci = c.row(i);
            for (std::size_t j = i; j < d; ++j) {
                ci[j] += ri * r[j];
            }
        }
    }
    const double inv_n = 1.0 / static_cast<double>(x.rows());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            c(i, j) *= inv_n;
            c(j, i) = c(i, j);
        }
    }
    return CovarianceMatrix(std::move(c));
}

EigenSpectrum eigen_symmetric(const CovarianceMatrix& m, const JacobiOptions& options) {
    RawEigen raw = jacobi(m.values(), options);
    clamp_negative(raw.values);
    const auto order = descending_order(raw.values);

    EigenSpectrum sp;
    sp.eigenvalues.reserve(order.size());
    for (std::size_t idx : order) {
        sp.eigenvalues.push_back(raw.values[idx]);
    }
    if (raw.vectors_by_row) {
        const std::size_t n = order.size();
        Matrix v(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto src = raw.vectors_by_row->row(order[j]);
            for (std::size_t i = 0; i < n; ++i) {
                v(i, j) = src[i];
            }
        }
        sp.eigenvectors = std::move(v);
    }
    return finish(std::move(sp));
}

EigenSpectrum spectrum_hdlss(const Dataset& data) {
    require_two_samples(data);
    const std::size_t n = data.n_samples();
    const std::size_t d = data.n_features();
    if (d <= n) {
        return eigen_symmetric(covariance(data));
    }

    const Matrix x = centred(data);
    Matrix g(n, n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto xa = x.row(a);
        for (std::size_t b = a; b < n; ++b) {
            const auto xb = x.row(b);
            double dot = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                dot += xa[j] * xb[j];
            }
            g(a, b) = dot * inv_n;
            g(b, a) = g(a, b);
        }
    }
    RawEigen raw = jacobi(std::move(g), JacobiOptions{});
    std::vector<double> values = std::move(raw.values);
    values.resize(d, 0.0);
    return make_spectrum(std::move(values));
}

std::vector<double> ccr_curve(const EigenSpectrum& spectrum, bool ascending) {
    if (!(spectrum.total() > 0.0)) {
        throw DegenerateInputError("degenerate spectrum: eigenvalues sum to zero");
    }
    std::vector<double> out(spectrum.eigenvalues.size());
    double running = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t src = ascending ? out.size() - 1 - i : i;
        running += spectrum.eigenvalues[src];
        out[i] = running;
    }
    for (double& v : out) {
        v /= running;
    }
    return out;
}

std::size_t zero_eigenvalue_count(const EigenSpectrum& spectrum) {
    const double lmax = spectrum.largest();
    if (!(lmax > 0.0)) {
        return spectrum.eigenvalues.size();
    }
    const double cutoff = kZeroEigenvalueRatio * lmax;
    return static_cast<std::size_t>(std::count_if(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                                                  [cutoff](double v) { return v < cutoff; }));
}

std::size_t pcs_to_reach(const EigenSpectrum& spectrum, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw ParameterError("CCR threshold must lie in (0, 1]");
    }
    const auto ccr = ccr_curve(spectrum, false);
    for (std::size_t j = 0; j < ccr.size(); ++j) {
        if (ccr[j] >= threshold) {
            return j + 1;
        }
    }
    return ccr.size();
}

std::vector<double> smallest_contribution_curve(const Dataset& data) {
    const CovarianceMatrix full = covariance(data);
    const std::size_t d = full.size();
    std::vector<double> curve(d);
    for (std::size_t len = 1; len <= d; ++len) {
        const EigenSpectrum sp = eigen_symmetric(CovarianceMatrix(full.values().leading_block(len)));
        const double total = sp.total();
        if (!(total > 0.0)) {
            throw DegenerateInputError("first " + std::to_string(len) + " feature(s) have zero variance", len - 1);
        }
        curve[len - 1] = sp.smallest() / total;
    }
    return curve;
}

}  // namespace hdconc
