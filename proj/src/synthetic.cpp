#include "trendpaa/synthetic.hpp"

#include <utility>

namespace trendpaa::synthetic {

TimeSeries gaussian_walk(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> step(0.0, 1.0);
    std::vector<double> values(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += step(rng);
        values[i] = acc;
    }
    return TimeSeries(std::move(values));
}

std::vector<TimeSeries> gaussian_walks(std::size_t count, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TimeSeries> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(gaussian_walk(n, rng));
    return out;
}

} // namespace trendpaa::synthetic
