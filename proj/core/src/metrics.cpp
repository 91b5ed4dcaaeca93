#include "hdconc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hdconc/error.hpp"

namespace hdconc {

namespace {

void require_same_length(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        std::ostringstream msg;
        msg << "vector lengths differ: " << a.size() << " vs " << b.size();
        throw DimensionError(msg.str());
    }
}

void require_valid_k(double k) {
    if (!(k >= 1.0) || !std::isfinite(k)) {
        throw ParameterError("Minkowski order k must be a finite value >= 1");
    }
}

double squared_norm(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) {
        s += v * v;
    }
    return s;
}

}  // namespace

double minkowski_distance(std::span<const double> a, std::span<const double> b, double k) {
    require_same_length(a, b);
    require_valid_k(k);

    if (k == 1.0) {
        double sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            sum += std::abs(a[i] - b[i]);
        }
        return sum;
    }

    double scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        scale = std::max(scale, std::abs(a[i] - b[i]));
    }
    if (scale == 0.0) {
        return 0.0;
    }
    double sum = 0.0;
    if (k == 2.0) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double r = (a[i] - b[i]) / scale;
            sum += r * r;
        }
        return scale * std::sqrt(sum);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::pow(std::abs(a[i] - b[i]) / scale, k);
    }
    return scale * std::pow(sum, 1.0 / k);
}

double chebyshev_distance(std::span<const double> a, std::span<const double> b) {
    require_same_length(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    require_same_length(a, b);
    const double na = std::sqrt(squared_norm(a));
    const double nb = std::sqrt(squared_norm(b));
    if (na == 0.0 || nb == 0.0) {
        throw DegenerateInputError("cosine similarity of a zero-norm vector");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
    }
    return std::clamp(dot / (na * nb), -1.0, 1.0);
}

Metric Metric::minkowski(double k) {
    require_valid_k(k);
    return Metric(MetricKind::minkowski, k);
}

std::string Metric::name() const {
    switch (kind_) {
        case MetricKind::minkowski:
            return "minkowski";
        case MetricKind::chebyshev:
            return "chebyshev";
        case MetricKind::cosine:
            return "cosine";
    }
    return "unknown";
}

double Metric::operator()(std::span<const double> a, std::span<const double> b) const {
    switch (kind_) {
        case MetricKind::minkowski:
            return minkowski_distance(a, b, k_);
        case MetricKind::chebyshev:
            return chebyshev_distance(a, b);
        case MetricKind::cosine:
            return cosine_similarity(a, b);
    }
    return 0.0;
}

std::vector<double> query_distances(const Dataset& data, const QueryPoint& q, const Metric& m) {
    if (q.size() != data.n_features()) {
        std::ostringstream msg;
        msg << "query has " << q.size() << " coordinates, dataset has " << data.n_features() << " features";
        throw DimensionError(msg.str());
    }
    if (m.kind() == MetricKind::cosine && squared_norm(q.coords()) == 0.0) {
        throw DegenerateInputError("cosine similarity against a zero-norm query point");
    }
    std::vector<double> out(data.n_samples());
    for (std::size_t i = 0; i < out.size(); ++i) {
        try {
            out[i] = m(data.sample(i), q.coords());
        } catch (const DegenerateInputError& e) {
            throw DegenerateInputError("sample " + std::to_string(i) + ": " + e.what(), i);
        }
    }
    return out;
}

ConcentrationStats summarize_values(std::span<const double> values, std::size_t dim, std::size_t n) {
    ConcentrationStats st;
    st.dim = dim;
    st.n = n;
    if (values.empty()) {
        throw InsufficientDataError("no values to summarize");
    }
    st.d_min = std::numeric_limits<double>::infinity();
    st.d_max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (double v : values) {
        st.d_min = std::min(st.d_min, v);
        st.d_max = std::max(st.d_max, v);
        sum += v;
    }
    const double count = static_cast<double>(values.size());
    st.mean = std::clamp(sum / count, st.d_min, st.d_max);
    double sq = 0.0;
    for (double v : values) {
        const double dv = v - st.mean;
        sq += dv * dv;
    }
    st.variance = sq / count;
    if (st.d_min > 0.0) {
        st.rdr = (st.d_max - st.d_min) / st.d_min;
    }
    return st;
}

ConcentrationStats concentration_stats(const Dataset& data, const QueryPoint& q, const Metric& m) {
    if (data.n_samples() < 2) {
        throw InsufficientDataError("concentration statistics need at least 2 samples");
    }
    const auto dist = query_distances(data, q, m);
    return summarize_values(dist, data.n_features(), data.n_samples());
}

ConcentrationStats pairwise_cosine_stats(const Dataset& data) {
    const std::size_t n = data.n_samples();
    if (n < 2) {
        throw InsufficientDataError("pairwise statistics need at least 2 samples");
    }
    std::vector<double> inv_norm(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double nrm = std::sqrt(squared_norm(data.sample(i)));
        if (nrm == 0.0) {
            throw DegenerateInputError("row " + std::to_string(i) + " has zero norm", i);
        }
        inv_norm[i] = 1.0 / nrm;
    }
    std::vector<double> sims;
    sims.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = data.sample(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto b = data.sample(j);
            double dot = 0.0;
            for (std::size_t c = 0; c < a.size(); ++c) {
                dot += a[c] * b[c];
            }
            sims.push_back(std::clamp(dot * inv_norm[i] * inv_norm[j], -1.0, 1.0));
        }
    }
    return summarize_values(sims, data.n_features(), n);
}

}  // namespace hdconc
