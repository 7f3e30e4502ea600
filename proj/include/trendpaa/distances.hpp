#pragma once

#include "trendpaa/representations.hpp"

namespace trendpaa {

/// Which segment's up/below counts weight the numerical trend term when
/// the two series split a segment differently. `query` and `reference`
/// take the counts of the first or second argument and are asymmetric;
/// `min` (the default) and `max` combine both and stay symmetric.
enum class NtCountPolicy { query, reference, min, max };

/// Straight-line distance between two equal-length series.
/// Throws std::invalid_argument on length mismatch.
double euclidean(const TimeSeries& q, const TimeSeries& p);

/// sqrt(sum_i len_i * (q_mean_i - p_mean_i)^2). With equal segment
/// lengths this is the classic sqrt(n/w)-weighted PAA distance.
/// Throws std::invalid_argument when the segmentations differ.
double paa_distance(const PaaRepr& q, const PaaRepr& p);

/// Trend distance of one segment:
/// sqrt(u*(q_up - c_up)^2 + b*(q_below - c_below)^2), with (u, b) chosen
/// from the two segments' counts by the policy.
double nt_segment_distance(const NtSegmentStats& q, const NtSegmentStats& c,
                           NtCountPolicy policy = NtCountPolicy::min);

/// Numerical-trend distance: the PAA term and all per-segment trend
/// terms combined under one radical.
double nt_distance(const NtRepr& q, const NtRepr& c,
                   NtCountPolicy policy = NtCountPolicy::min);

/// Binary-trend distance: sqrt((w/n) * popcount(bits_q XOR bits_p)).
double bt_distance(const BtRepr& q, const BtRepr& p);

/// PAA distance on the representations' means plus the binary-trend
/// distance (two separate radicals summed).
double bit_dist(const BtRepr& q, const BtRepr& p);

/// 1 - cosine similarity of the two mean vectors, in [0, 2].
/// Throws std::domain_error when either mean vector is all-zero.
double cosine_distance(const PaaRepr& q, const PaaRepr& p);

/// Ratio approx_dist / ed. Throws std::domain_error when ed is not
/// strictly positive (identical series have no defined tightness).
double tightness(double approx_dist, double ed);

} // namespace trendpaa
