#pragma once

#include "trendpaa/distances.hpp"

#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace trendpaa {

/// Equal-length series with one integer class label each (UCR style).
struct LabeledDataset {
    std::vector<TimeSeries> series;
    std::vector<int> labels;

    std::size_t size() const { return series.size(); }
    std::size_t length() const { return series.empty() ? 0 : series.front().size(); }

    /// Throws std::invalid_argument unless non-empty, label-aligned and
    /// uniform in length.
    void validate() const;

    /// Distinct labels, ascending.
    std::vector<int> distinct_labels() const;
};

enum class Measure { ed, cosine, paa, nt_paa, bt_paa };

/// Canonical names: ED, COSINE, PAA, NT_PAA, BT_PAA.
std::string measure_name(Measure m);

/// Accepts the CLI tokens ed|cosine|paa|nt|bt (case-insensitive) and the
/// canonical names. Throws std::invalid_argument otherwise.
Measure measure_from_string(const std::string& s);

/// A similarity measure plus its parameters. s is the reduction ratio
/// (raw points per segment); the segment count follows as
/// w = max(1, floor(n/s)). s is ignored for ED.
struct MeasureConfig {
    Measure measure = Measure::ed;
    std::size_t s = 1;
    NtCountPolicy nt_policy = NtCountPolicy::min;

    std::size_t segment_count(std::size_t n) const;
};

/// Per-series representation under one measure. ED keeps the raw series;
/// PAA and COSINE reduce to segment means; NT_PAA and BT_PAA carry their
/// trend data.
using MeasureRepr = std::variant<TimeSeries, PaaRepr, NtRepr, BtRepr>;

/// Transforms series once and evaluates pairwise distances under a fixed
/// MeasureConfig. Immutable after construction; safe for concurrent use.
class MeasureContext {
public:
    MeasureContext(const MeasureConfig& cfg, std::size_t series_length);

    const MeasureConfig& config() const { return cfg_; }
    std::size_t series_length() const { return n_; }
    std::size_t segment_count() const { return w_; }

    MeasureRepr transform(const TimeSeries& ts) const;
    double distance(const MeasureRepr& query, const MeasureRepr& reference) const;

private:
    MeasureConfig cfg_;
    std::size_t n_;
    std::size_t w_;
};

/// Row-major m*m matrix of pairwise distances under cfg. Symmetric for
/// every measure except NT_PAA under the query/reference policies.
std::vector<double> pairwise_distance_matrix(const std::vector<TimeSeries>& data,
                                             const MeasureConfig& cfg);

struct ClassMetrics {
    int label = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
};

/// Metrics bundle filled by the evaluation entry points. Classification
/// runs leave auc NaN; anomaly runs leave the classification fields NaN
/// or empty. notes records protocol choices the numbers depend on.
struct EvalReport {
    double error_rate = std::numeric_limits<double>::quiet_NaN();
    std::vector<ClassMetrics> per_class;
    double macro_f1 = std::numeric_limits<double>::quiet_NaN();
    double auc = std::numeric_limits<double>::quiet_NaN();
    std::size_t chosen_s = 0;
    std::size_t chosen_k = 0;
    double wall_clock_seconds = 0.0;
    std::string notes;
};

/// Majority label among the k nearest training series under cfg.
/// Neighbor-set ties at the k-th distance resolve toward the smaller
/// label (so training order never matters); vote ties break first by
/// smaller summed distance within the tied classes, then by smaller
/// label. Throws std::invalid_argument on empty train, k == 0,
/// k > train size or length mismatch.
int knn_classify(const LabeledDataset& train, const TimeSeries& query,
                 const MeasureConfig& cfg, std::size_t k);

/// Classify every test series against train and fill error rate plus
/// per-class and macro precision/recall/F1.
EvalReport evaluate_classification(const LabeledDataset& train, const LabeledDataset& test,
                                   const MeasureConfig& cfg, std::size_t k);

/// Leave-one-out k-NN sweep of the reduction ratio over [s_min, s_max];
/// returns the s with the lowest LOOCV error on train, ties toward the
/// smaller s.
std::size_t select_s_by_cv(const LabeledDataset& train, Measure measure, std::size_t k,
                           std::size_t s_min, std::size_t s_max,
                           NtCountPolicy policy = NtCountPolicy::min);

/// Local outlier factor of every series under cfg.measure, per the
/// classic k-distance / reachability-distance / local-reachability-
/// density definitions. Scores near 1 mean density-homogeneous, > 1
/// means outlying. Local reachability density is capped at 1e12 so
/// duplicate points keep finite, equal scores.
/// Throws std::invalid_argument when k_neighbors == 0 or
/// k_neighbors >= data size.
std::vector<double> lof_scores(const std::vector<TimeSeries>& data,
                               const MeasureConfig& cfg, std::size_t k_neighbors);

/// Rank-based (Mann-Whitney) AUC with average ranks for ties: the
/// probability that a random anomaly outscores a random normal.
/// Throws std::invalid_argument unless both classes are present.
double auc(const std::vector<double>& scores, const std::vector<bool>& is_anomaly);

/// LOF + AUC protocol on a two-class test split: the minority class of
/// the test split is the anomaly class (tie toward the larger label),
/// LOF scores are computed on the test series only, and the LOF
/// neighbor count is swept over [k_min, k_max] keeping the best AUC.
EvalReport evaluate_anomaly(const LabeledDataset& train, const LabeledDataset& test,
                            const MeasureConfig& cfg, std::size_t k_min, std::size_t k_max);

} // namespace trendpaa
