#include "trendpaa/distances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trendpaa {

namespace {

void require_same_segmentation(const Segmentation& a, const Segmentation& b, const char* who) {
    if (!(a == b)) throw std::invalid_argument(std::string(who) + ": segmentation mismatch");
}

// Sum over segments of len_i * (a_i - b_i)^2, the squared length-weighted
// mean distance shared by the PAA, NT and BIT measures.
double weighted_mean_sq(const Segmentation& seg, const std::vector<double>& a,
                        const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < seg.w; ++i) {
        const double d = a[i] - b[i];
        acc += static_cast<double>(seg.segment_length(i)) * d * d;
    }
    return acc;
}

double nt_segment_sq(const NtSegmentStats& q, const NtSegmentStats& c, NtCountPolicy policy) {
    std::size_t u = 0, b = 0;
    switch (policy) {
        case NtCountPolicy::query:
            u = q.up_count;
            b = q.below_count;
            break;
        case NtCountPolicy::reference:
            u = c.up_count;
            b = c.below_count;
            break;
        case NtCountPolicy::min:
            u = std::min(q.up_count, c.up_count);
            b = std::min(q.below_count, c.below_count);
            break;
        case NtCountPolicy::max:
            u = std::max(q.up_count, c.up_count);
            b = std::max(q.below_count, c.below_count);
            break;
    }
    const double du = q.up_mean - c.up_mean;
    const double db = q.below_mean - c.below_mean;
    return static_cast<double>(u) * du * du + static_cast<double>(b) * db * db;
}

} // namespace

double euclidean(const TimeSeries& q, const TimeSeries& p) {
    if (q.size() != p.size()) throw std::invalid_argument("euclidean: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double d = q[i] - p[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double paa_distance(const PaaRepr& q, const PaaRepr& p) {
    require_same_segmentation(q.seg, p.seg, "paa_distance");
    return std::sqrt(weighted_mean_sq(q.seg, q.means, p.means));
}

double nt_segment_distance(const NtSegmentStats& q, const NtSegmentStats& c,
                           NtCountPolicy policy) {
    return std::sqrt(nt_segment_sq(q, c, policy));
}

double nt_distance(const NtRepr& q, const NtRepr& c, NtCountPolicy policy) {
    require_same_segmentation(q.seg, c.seg, "nt_distance");
    double acc = weighted_mean_sq(q.seg, q.means, c.means);
    for (std::size_t i = 0; i < q.seg.w; ++i)
        acc += nt_segment_sq(q.segment_stats(i), c.segment_stats(i), policy);
    return std::sqrt(acc);
}

double bt_distance(const BtRepr& q, const BtRepr& p) {
    require_same_segmentation(q.seg, p.seg, "bt_distance");
    const std::size_t diff = xor_count(q.bits, p.bits);
    return std::sqrt(static_cast<double>(q.seg.w) * static_cast<double>(diff) /
                     static_cast<double>(q.seg.n));
}

double bit_dist(const BtRepr& q, const BtRepr& p) {
    require_same_segmentation(q.seg, p.seg, "bit_dist");
    return std::sqrt(weighted_mean_sq(q.seg, q.means, p.means)) + bt_distance(q, p);
}

double cosine_distance(const PaaRepr& q, const PaaRepr& p) {
    require_same_segmentation(q.seg, p.seg, "cosine_distance");
    double dot = 0.0, qq = 0.0, pp = 0.0;
    for (std::size_t i = 0; i < q.means.size(); ++i) {
        dot += q.means[i] * p.means[i];
        qq += q.means[i] * q.means[i];
        pp += p.means[i] * p.means[i];
    }
    if (qq == 0.0 || pp == 0.0)
        throw std::domain_error("cosine_distance: zero-magnitude representation");
    return 1.0 - dot / (std::sqrt(qq) * std::sqrt(pp));
}

double tightness(double approx_dist, double ed) {
    if (!(ed > 0.0)) throw std::domain_error("tightness: Euclidean distance must be > 0");
    return approx_dist / ed;
}

} // namespace trendpaa
