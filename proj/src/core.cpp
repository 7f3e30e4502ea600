#include "trendpaa/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace trendpaa {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("TimeSeries: length must be >= 1");
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("TimeSeries: values must be finite");
    }
}

Segmentation make_segmentation(std::size_t n, std::size_t w) {
    if (n == 0) throw std::invalid_argument("make_segmentation: n must be >= 1");
    if (w == 0) throw std::invalid_argument("make_segmentation: w must be >= 1");
    if (w > n)
        throw std::invalid_argument("make_segmentation: w (" + std::to_string(w) +
                                    ") exceeds n (" + std::to_string(n) + ")");
    Segmentation seg;
    seg.n = n;
    seg.w = w;
    seg.boundaries.resize(w + 1);
    for (std::size_t i = 0; i <= w; ++i) seg.boundaries[i] = i * n / w;
    return seg;
}

TimeSeries z_normalize(const TimeSeries& ts) {
    const std::size_t n = ts.size();
    double sum = 0.0;
    for (double v : ts.values()) sum += v;
    const double mean = sum / static_cast<double>(n);

    double sq = 0.0;
    for (double v : ts.values()) {
        const double d = v - mean;
        sq += d * d;
    }
    const double stddev = std::sqrt(sq / static_cast<double>(n));

    std::vector<double> out(n, 0.0);
    if (stddev >= 1e-12) {
        for (std::size_t i = 0; i < n; ++i) out[i] = (ts[i] - mean) / stddev;
    }
    return TimeSeries(std::move(out));
}

} // namespace trendpaa
