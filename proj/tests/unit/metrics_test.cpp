#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hdconc/error.hpp"
#include "hdconc/metrics.hpp"
#include "hdconc/random.hpp"

namespace hdconc {
namespace {

using Vec = std::vector<double>;

Vec random_vector(std::mt19937_64& rng, std::size_t d, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec v(d);
    for (double& x : v) {
        x = u(rng);
    }
    return v;
}

TEST(Minkowski, Examples) {
    EXPECT_DOUBLE_EQ(minkowski_distance(Vec{1, 2}, Vec{4, 6}, 2.0), 5.0);
    EXPECT_DOUBLE_EQ(minkowski_distance(Vec{1, 2}, Vec{4, 6}, 1.0), 7.0);
    for (double k : {1.0, 1.5, 2.0, 3.0, 64.0}) {
        EXPECT_EQ(minkowski_distance(Vec{0.3, 0.7, 0.1}, Vec{0.3, 0.7, 0.1}, k), 0.0);
    }
}

TEST(Minkowski, Errors) {
    EXPECT_THROW(minkowski_distance(Vec{1, 2}, Vec{1}, 2.0), DimensionError);
    EXPECT_THROW(minkowski_distance(Vec{1, 2}, Vec{1, 2}, 0.5), ParameterError);
    EXPECT_THROW(Metric::minkowski(0.9), ParameterError);
}

TEST(Minkowski, LargeOrderDoesNotOverflow) {
    const Vec a{1e200, 0.0};
    const Vec b{0.0, 1e200};
    const double d = minkowski_distance(a, b, 64.0);
    EXPECT_TRUE(std::isfinite(d));
    EXPECT_NEAR(d / 1e200, std::pow(2.0, 1.0 / 64.0), 1e-12);
}

TEST(Chebyshev, Examples) {
    EXPECT_EQ(chebyshev_distance(Vec{1, 2}, Vec{4, 6}), 4.0);
    EXPECT_EQ(chebyshev_distance(Vec{5, 5, 5}, Vec{5, 5, 5}), 0.0);
    EXPECT_EQ(chebyshev_distance(Vec{0, 0, 0}, Vec{0.2, 0.9, 0.4}), 0.9);
    EXPECT_THROW(chebyshev_distance(Vec{1}, Vec{1, 2}), DimensionError);
}

TEST(Cosine, Examples) {
    EXPECT_DOUBLE_EQ(cosine_similarity(Vec{1, 0}, Vec{0, 1}), 0.0);
    EXPECT_DOUBLE_EQ(cosine_similarity(Vec{1, 1}, Vec{2, 2}), 1.0);
    EXPECT_THROW(cosine_similarity(Vec{1, 0}, Vec{0, 0}), DegenerateInputError);
}

TEST(Cosine, ScaleInvariant) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> scale(1e-3, 1e3);
    for (int rep = 0; rep < 200; ++rep) {
        const Vec a = random_vector(rng, 1 + rep % 40);
        const Vec b = random_vector(rng, a.size());
        const double alpha = scale(rng);
        const double beta = scale(rng);
        Vec sa = a;
        Vec sb = b;
        for (double& x : sa) x *= alpha;
        for (double& x : sb) x *= beta;
        EXPECT_NEAR(cosine_similarity(sa, sb), cosine_similarity(a, b), 1e-12);
    }
}

TEST(MetricAxioms, RandomVectors) {
    std::mt19937_64 rng(2024);
    const std::vector<Metric> metrics{Metric::minkowski(1.0), Metric::minkowski(1.5), Metric::minkowski(2.0),
                                      Metric::minkowski(3.0), Metric::minkowski(7.0), Metric::chebyshev()};
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t d = 1 + static_cast<std::size_t>(rep % 25);
        const Vec a = random_vector(rng, d, -5, 5);
        const Vec b = random_vector(rng, d, -5, 5);
        const Vec c = random_vector(rng, d, -5, 5);
        for (const auto& m : metrics) {
            const double ab = m(a, b);
            EXPECT_GE(ab, 0.0);
            EXPECT_EQ(ab, m(b, a)) << m.name() << " k=" << m.k();
            EXPECT_EQ(m(a, a), 0.0);
            EXPECT_GT(ab, 0.0);
            EXPECT_LE(ab, m(a, c) + m(c, b) + 1e-12) << m.name() << " k=" << m.k();
        }
    }
}

// ||.||_k approaches ||.||_inf from above as k grows, with
// ||x||_k <= d^(1/k) ||x||_inf.
TEST(MetricAxioms, MinkowskiConvergesToChebyshev) {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t d = 1 + static_cast<std::size_t>(rep % 32);
        const Vec a = random_vector(rng, d);
        const Vec b = random_vector(rng, d);
        const double inf = chebyshev_distance(a, b);
        double previous = std::numeric_limits<double>::infinity();
        for (double k : {2.0, 4.0, 8.0, 16.0, 64.0}) {
            const double gap = std::abs(minkowski_distance(a, b, k) - inf);
            EXPECT_LE(gap, previous * (1 + 1e-12) + 1e-15) << "k=" << k;
            previous = gap;
        }
        const double rel = std::abs(minkowski_distance(a, b, 64.0) - inf) / inf;
        EXPECT_LE(rel, std::pow(static_cast<double>(d), 1.0 / 64.0) - 1.0 + 1e-12);
    }
}

TEST(QueryDistances, Examples) {
    const Dataset data(Matrix::from_rows({{3, 4}, {6, 8}}));
    const auto dist = query_distances(data, QueryPoint::origin(2), Metric::minkowski(2));
    ASSERT_EQ(dist.size(), 2u);
    EXPECT_DOUBLE_EQ(dist[0], 5.0);
    EXPECT_DOUBLE_EQ(dist[1], 10.0);

    const Dataset one(Matrix::from_rows({{1, 1}}));
    EXPECT_EQ(query_distances(one, QueryPoint({1, 1}), Metric::chebyshev()), (Vec{0.0}));

    EXPECT_THROW(query_distances(data, QueryPoint({1, 2, 3}), Metric::chebyshev()), DimensionError);
}

TEST(QueryDistances, CosineNamesZeroRow) {
    const Dataset data(Matrix::from_rows({{1, 0}, {0, 0}, {1, 1}}));
    try {
        query_distances(data, QueryPoint({1, 1}), Metric::cosine());
        FAIL() << "expected DegenerateInputError";
    } catch (const DegenerateInputError& e) {
        ASSERT_TRUE(e.index().has_value());
        EXPECT_EQ(*e.index(), 1u);
    }
    EXPECT_THROW(query_distances(data, QueryPoint::origin(2), Metric::cosine()), DegenerateInputError);
}

TEST(ConcentrationStatsTest, Examples) {
    const Dataset data(Matrix::from_rows({{3, 4}, {6, 8}}));
    const auto st = concentration_stats(data, QueryPoint::origin(2), Metric::minkowski(2));
    EXPECT_DOUBLE_EQ(st.d_min, 5.0);
    EXPECT_DOUBLE_EQ(st.d_max, 10.0);
    ASSERT_TRUE(st.rdr_defined());
    EXPECT_DOUBLE_EQ(*st.rdr, 1.0);
    EXPECT_DOUBLE_EQ(st.mean, 7.5);
    EXPECT_DOUBLE_EQ(st.variance, 6.25);

    const Dataset ortho(Matrix::from_rows({{1, 0}, {0, 1}}));
    const auto cs = concentration_stats(ortho, QueryPoint({1, 0}), Metric::cosine());
    EXPECT_EQ(cs.d_min, 0.0);
    EXPECT_FALSE(cs.rdr_defined());

    const Dataset twins(Matrix::from_rows({{1, 2}, {1, 2}}));
    const auto ts = concentration_stats(twins, QueryPoint({5, 5}), Metric::minkowski(1));
    ASSERT_TRUE(ts.rdr_defined());
    EXPECT_EQ(*ts.rdr, 0.0);
}

TEST(ConcentrationStatsTest, NeedsTwoSamples) {
    const Dataset one(Matrix::from_rows({{1, 2}}));
    EXPECT_THROW(concentration_stats(one, QueryPoint::origin(2), Metric::chebyshev()), InsufficientDataError);
}

// Re-derive the statistics from query_distances by brute force.
TEST(ConcentrationStatsTest, MatchesBruteForce) {
    std::mt19937_64 rng(5);
    const std::vector<Metric> metrics{Metric::minkowski(1), Metric::minkowski(2.5), Metric::chebyshev(),
                                      Metric::cosine()};
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rep % 13);
        const std::size_t d = 1 + static_cast<std::size_t>(rep % 7);
        const Dataset data = generate_uniform(n, d, UniformSpec(-1.0, 2.0, rng()));
        const QueryPoint q(random_vector(rng, d, 0.5, 1.5));
        for (const auto& m : metrics) {
            const auto dist = query_distances(data, q, m);
            double lo = dist[0], hi = dist[0], sum = 0.0;
            for (double v : dist) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                sum += v;
            }
            const double mean = sum / static_cast<double>(n);
            double var = 0.0;
            for (double v : dist) {
                var += (v - mean) * (v - mean) / static_cast<double>(n);
            }
            const auto st = concentration_stats(data, q, m);
            EXPECT_EQ(st.d_min, lo);
            EXPECT_EQ(st.d_max, hi);
            EXPECT_NEAR(st.mean, mean, 1e-12 * std::abs(mean) + 1e-15);
            EXPECT_NEAR(st.variance, var, 1e-10 * var + 1e-15);
            EXPECT_LE(st.d_min, st.mean);
            EXPECT_LE(st.mean, st.d_max);
            if (lo > 0.0) {
                ASSERT_TRUE(st.rdr_defined());
                EXPECT_EQ(*st.rdr, (hi - lo) / lo);
            } else {
                EXPECT_FALSE(st.rdr_defined());
            }
            EXPECT_EQ(st.n, n);
            EXPECT_EQ(st.dim, d);
        }
    }
}

TEST(PairwiseCosine, Examples) {
    const double s = 3.7;
    const Dataset three(Matrix::from_rows({{1, 0}, {0, 1}, {s, s}}));
    const auto st = pairwise_cosine_stats(three);
    EXPECT_NEAR(st.d_min, 0.0, 1e-15);
    EXPECT_NEAR(st.d_max, std::sqrt(2.0) / 2.0, 1e-15);

    const auto colinear = pairwise_cosine_stats(Dataset(Matrix::from_rows({{2, 0}, {3, 0}})));
    EXPECT_EQ(colinear.d_min, 1.0);
    EXPECT_EQ(colinear.d_max, 1.0);
    EXPECT_EQ(colinear.variance, 0.0);

    const auto anti = pairwise_cosine_stats(Dataset(Matrix::from_rows({{1, 0}, {-1, 0}})));
    EXPECT_EQ(anti.d_min, -1.0);
    EXPECT_EQ(anti.d_max, -1.0);
}

TEST(PairwiseCosine, ZeroRowIndexed) {
    try {
        pairwise_cosine_stats(Dataset(Matrix::from_rows({{1, 0}, {1, 1}, {0, 0}})));
        FAIL();
    } catch (const DegenerateInputError& e) {
        EXPECT_EQ(e.index().value(), 2u);
    }
}

TEST(PairwiseCosine, MatchesKernelOverAllPairs) {
    const Dataset data = generate_uniform(12, 5, UniformSpec(-1.0, 3.0, 77));
    double lo = 2.0, hi = -2.0, sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = i + 1; j < 12; ++j) {
            const double c = cosine_similarity(data.sample(i), data.sample(j));
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            sum += c;
            ++count;
        }
    }
    const auto st = pairwise_cosine_stats(data);
    EXPECT_NEAR(st.d_min, lo, 1e-14);
    EXPECT_NEAR(st.d_max, hi, 1e-14);
    EXPECT_NEAR(st.mean, sum / static_cast<double>(count), 1e-14);
}

}  // namespace
}  // namespace hdconc
