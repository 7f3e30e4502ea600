#pragma once

#include "trendpaa/core.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace trendpaa::synthetic {

/// Standard Gaussian walk: cumulative sum of unit-normal steps.
TimeSeries gaussian_walk(std::size_t n, std::mt19937_64& rng);

/// count seeded walks of length n.
std::vector<TimeSeries> gaussian_walks(std::size_t count, std::size_t n, std::uint64_t seed);

} // namespace trendpaa::synthetic
