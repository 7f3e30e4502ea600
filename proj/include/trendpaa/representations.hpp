#pragma once

#include "trendpaa/bitstring.hpp"
#include "trendpaa/core.hpp"

namespace trendpaa {

/// Piecewise aggregate approximation: one arithmetic mean per segment.
struct PaaRepr {
    Segmentation seg;
    std::vector<double> means;
};

/// Up/below split statistics of a single segment. up_mean is the mean of
/// (value - segment mean) over points at or above the segment mean,
/// below_mean the mean of (segment mean - value) over points strictly
/// below it (0 when that set is empty). Both are non-negative.
struct NtSegmentStats {
    double up_mean = 0.0;
    double below_mean = 0.0;
    std::size_t up_count = 0;
    std::size_t below_count = 0;
};

/// PAA means augmented with per-segment numerical trend statistics.
/// Points equal to the segment mean count as "up", so up_counts[i] >= 1
/// and up_counts[i] + below_counts[i] == segment length.
struct NtRepr {
    Segmentation seg;
    std::vector<double> means;
    std::vector<double> up_means;
    std::vector<double> below_means;
    std::vector<std::size_t> up_counts;
    std::vector<std::size_t> below_counts;

    NtSegmentStats segment_stats(std::size_t i) const {
        return {up_means[i], below_means[i], up_counts[i], below_counts[i]};
    }
};

/// PAA means augmented with a binary trend string: one bit per raw
/// sample, 1 iff the sample is at or above the mean of its segment.
struct BtRepr {
    Segmentation seg;
    std::vector<double> means;
    BitString bits;
};

/// Reduce ts to w segment means. Throws std::invalid_argument for w == 0
/// or w > n.
PaaRepr paa_transform(const TimeSeries& ts, std::size_t w);

/// Reduce ts to w segment means plus up-mean/below-mean trend statistics.
NtRepr nt_transform(const TimeSeries& ts, std::size_t w);

/// Reduce ts to w segment means plus the length-n binary trend string.
BtRepr bt_transform(const TimeSeries& ts, std::size_t w);

/// Expand a PAA representation back to length n as a step function:
/// every index of segment i holds means[i].
TimeSeries paa_reconstruct(const PaaRepr& repr);

} // namespace trendpaa
