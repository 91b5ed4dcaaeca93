#pragma once

#include <cstddef>
#include <cstdint>

#include "hdconc/dataset.hpp"

namespace hdconc {

/// SplitMix64 finalizer (Steele, Lea & Flood). Bijective on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Stable seed for one Monte Carlo cell:
///   h = splitmix64(base); h = splitmix64(h ^ dim); h = splitmix64(h ^ trial)
/// The value is part of the reproducibility contract; do not change it.
std::uint64_t cell_seed(std::uint64_t base_seed, std::uint64_t dim, std::uint64_t trial) noexcept;

/// n x d matrix of IID U[s, t) draws.
///
/// Entries come from std::mt19937_64 seeded with spec.seed(), consumed in
/// row-major order; each 64-bit output keeps its top 53 bits as a uniform
/// u in [0, 1) and maps to s + (t - s) * u. Both steps are fully specified,
/// so the output is bit-identical on every conforming platform. A dataset
/// with fewer rows is a row prefix of one with more rows (same d and spec).
Dataset generate_uniform(std::size_t n, std::size_t d, const UniformSpec& spec);

}  // namespace hdconc
