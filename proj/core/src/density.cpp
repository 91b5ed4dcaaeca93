#include "hdconc/density.hpp"

#include <cmath>

#include "hdconc/error.hpp"

namespace hdconc {

SampleDensity sample_density(std::uint64_t n, std::uint64_t intervals_per_feature, std::uint64_t d) {
    if (n == 0 || intervals_per_feature == 0 || d == 0) {
        throw ParameterError("sample_density arguments must be positive");
    }
    const double log_m = std::log(static_cast<double>(intervals_per_feature));
    const double dd = static_cast<double>(d);
    const double log_value = std::log(static_cast<double>(n)) - dd * log_m;

    // pow is exact for small integer powers; beyond the double range fall
    // back to the log form, which underflows cleanly to 0.
    double value;
    if (dd * std::log2(static_cast<double>(intervals_per_feature)) < 1000.0) {
        value = static_cast<double>(n) / std::pow(static_cast<double>(intervals_per_feature), dd);
    } else {
        value = std::exp(log_value);
    }
    return {value, log_value};
}

}  // namespace hdconc
