#pragma once

#include <cstddef>
#include <vector>

namespace trendpaa {

/// A fixed-length sequence of finite real-valued samples.
/// Construction validates the invariants (non-empty, no NaN/infinity);
/// instances are immutable afterwards.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    const double* data() const { return values_.data(); }

    bool operator==(const TimeSeries&) const = default;

private:
    std::vector<double> values_;
};

/// Partition of the index range [0, n) into w contiguous, non-empty segments.
/// boundaries holds w+1 monotone indices with boundaries[0] == 0 and
/// boundaries[w] == n.
struct Segmentation {
    std::size_t n = 0;
    std::size_t w = 0;
    std::vector<std::size_t> boundaries;

    std::size_t segment_begin(std::size_t i) const { return boundaries[i]; }
    std::size_t segment_end(std::size_t i) const { return boundaries[i + 1]; }
    std::size_t segment_length(std::size_t i) const { return boundaries[i + 1] - boundaries[i]; }

    bool operator==(const Segmentation&) const = default;
};

/// Split [0, n) into w segments with boundary i at floor(i*n/w).
/// When w divides n every segment has length exactly n/w; otherwise
/// lengths differ by at most one.
/// Throws std::invalid_argument when n == 0, w == 0 or w > n.
Segmentation make_segmentation(std::size_t n, std::size_t w);

/// Rescale to sample mean 0 and population standard deviation 1.
/// Series whose standard deviation falls below 1e-12 come back as all zeros.
TimeSeries z_normalize(const TimeSeries& ts);

} // namespace trendpaa
