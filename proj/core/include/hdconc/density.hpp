#pragma once

#include <cstdint>

namespace hdconc {

struct SampleDensity {
    double value;      ///< n / m^d, may underflow to 0
    double log_value;  ///< ln(n) - d ln(m), always finite
};

/// Samples per cell when each of d features is cut into m equal intervals.
/// Throws ParameterError if any argument is zero.
SampleDensity sample_density(std::uint64_t n, std::uint64_t intervals_per_feature, std::uint64_t d);

}  // namespace hdconc
