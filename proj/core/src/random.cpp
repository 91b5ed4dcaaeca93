#include "hdconc/random.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace hdconc {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t base_seed, std::uint64_t dim, std::uint64_t trial) noexcept {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ dim);
    return splitmix64(h ^ trial);
}

Dataset generate_uniform(std::size_t n, std::size_t d, const UniformSpec& spec) {
    const double s = spec.lower();
    const double t = spec.upper();
    const double width = t - s;
    constexpr double kTwoPowMinus53 = 0x1.0p-53;

    std::mt19937_64 engine(spec.seed());
    std::vector<double> values(n * d);
    for (double& v : values) {
        const double u = static_cast<double>(engine() >> 11) * kTwoPowMinus53;
        double x = s + width * u;
        if (x >= t) {
            x = std::nextafter(t, s);
        }
        v = x;
    }
    return Dataset(Matrix(n, d, std::move(values)));
}

}  // namespace hdconc
