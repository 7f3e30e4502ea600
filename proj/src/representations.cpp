#include "trendpaa/representations.hpp"

#include <utility>

namespace trendpaa {

namespace {

// Shared by all three transforms so their means agree bit-for-bit.
std::vector<double> segment_means(const TimeSeries& ts, const Segmentation& seg) {
    std::vector<double> means(seg.w);
    for (std::size_t i = 0; i < seg.w; ++i) {
        double sum = 0.0;
        for (std::size_t j = seg.segment_begin(i); j < seg.segment_end(i); ++j) sum += ts[j];
        means[i] = sum / static_cast<double>(seg.segment_length(i));
    }
    return means;
}

} // namespace

PaaRepr paa_transform(const TimeSeries& ts, std::size_t w) {
    Segmentation seg = make_segmentation(ts.size(), w);
    std::vector<double> means = segment_means(ts, seg);
    return {std::move(seg), std::move(means)};
}

NtRepr nt_transform(const TimeSeries& ts, std::size_t w) {
    NtRepr repr;
    repr.seg = make_segmentation(ts.size(), w);
    repr.means = segment_means(ts, repr.seg);
    repr.up_means.resize(w);
    repr.below_means.resize(w);
    repr.up_counts.resize(w);
    repr.below_counts.resize(w);

    for (std::size_t i = 0; i < w; ++i) {
        const double m = repr.means[i];
        double up_sum = 0.0, below_sum = 0.0;
        std::size_t up = 0, below = 0;
        for (std::size_t j = repr.seg.segment_begin(i); j < repr.seg.segment_end(i); ++j) {
            // Points exactly at the mean belong to the up set, so up >= 1 always.
            if (ts[j] >= m) {
                up_sum += ts[j] - m;
                ++up;
            } else {
                below_sum += m - ts[j];
                ++below;
            }
        }
        repr.up_means[i] = up_sum / static_cast<double>(up);
        repr.below_means[i] = below == 0 ? 0.0 : below_sum / static_cast<double>(below);
        repr.up_counts[i] = up;
        repr.below_counts[i] = below;
    }
    return repr;
}

BtRepr bt_transform(const TimeSeries& ts, std::size_t w) {
    Segmentation seg = make_segmentation(ts.size(), w);
    std::vector<double> means = segment_means(ts, seg);
    BitString bits(ts.size());
    for (std::size_t i = 0; i < w; ++i) {
        const double m = means[i];
        for (std::size_t j = seg.segment_begin(i); j < seg.segment_end(i); ++j) {
            if (ts[j] >= m) bits.set(j);
        }
    }
    return {std::move(seg), std::move(means), std::move(bits)};
}

TimeSeries paa_reconstruct(const PaaRepr& repr) {
    std::vector<double> out(repr.seg.n);
    for (std::size_t i = 0; i < repr.seg.w; ++i) {
        for (std::size_t j = repr.seg.segment_begin(i); j < repr.seg.segment_end(i); ++j)
            out[j] = repr.means[i];
    }
    return TimeSeries(std::move(out));
}

} // namespace trendpaa
