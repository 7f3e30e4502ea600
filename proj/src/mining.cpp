#include "trendpaa/mining.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace trendpaa {

namespace {

constexpr double kLrdCap = 1e12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Majority vote over the k nearest candidates. Sorting by (distance,
// label) makes the neighbor set independent of candidate order; class
// ties break by smaller summed distance, then smaller label.
int vote_k_nearest(std::vector<std::pair<double, int>>& candidates, std::size_t k) {
    std::sort(candidates.begin(), candidates.end());
    std::map<int, std::pair<std::size_t, double>> votes; // label -> (count, summed distance)
    for (std::size_t i = 0; i < k; ++i) {
        auto& v = votes[candidates[i].second];
        v.first += 1;
        v.second += candidates[i].first;
    }
    int best_label = votes.begin()->first;
    std::pair<std::size_t, double> best = votes.begin()->second;
    for (const auto& [label, v] : votes) {
        if (v.first > best.first || (v.first == best.first && v.second < best.second)) {
            best = v;
            best_label = label;
        }
    }
    return best_label;
}

} // namespace

void LabeledDataset::validate() const {
    if (series.empty()) throw std::invalid_argument("LabeledDataset: empty dataset");
    if (series.size() != labels.size())
        throw std::invalid_argument("LabeledDataset: series/label count mismatch");
    const std::size_t n = series.front().size();
    for (const TimeSeries& ts : series) {
        if (ts.size() != n)
            throw std::invalid_argument("LabeledDataset: series lengths are not uniform");
    }
}

std::vector<int> LabeledDataset::distinct_labels() const {
    std::set<int> s(labels.begin(), labels.end());
    return {s.begin(), s.end()};
}

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::ed: return "ED";
        case Measure::cosine: return "COSINE";
        case Measure::paa: return "PAA";
        case Measure::nt_paa: return "NT_PAA";
        case Measure::bt_paa: return "BT_PAA";
    }
    return "?";
}

Measure measure_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "ed") return Measure::ed;
    if (t == "cosine") return Measure::cosine;
    if (t == "paa") return Measure::paa;
    if (t == "nt" || t == "nt_paa") return Measure::nt_paa;
    if (t == "bt" || t == "bt_paa") return Measure::bt_paa;
    throw std::invalid_argument("unknown measure '" + s + "' (expected ed|cosine|paa|nt|bt)");
}

std::size_t MeasureConfig::segment_count(std::size_t n) const {
    if (s == 0) throw std::invalid_argument("MeasureConfig: s must be >= 1");
    return std::max<std::size_t>(1, n / s);
}

MeasureContext::MeasureContext(const MeasureConfig& cfg, std::size_t series_length)
    : cfg_(cfg), n_(series_length) {
    if (n_ == 0) throw std::invalid_argument("MeasureContext: series length must be >= 1");
    w_ = cfg_.measure == Measure::ed ? n_ : cfg_.segment_count(n_);
}

MeasureRepr MeasureContext::transform(const TimeSeries& ts) const {
    if (ts.size() != n_)
        throw std::invalid_argument("MeasureContext: series length mismatch");
    switch (cfg_.measure) {
        case Measure::ed: return ts;
        case Measure::cosine:
        case Measure::paa: return paa_transform(ts, w_);
        case Measure::nt_paa: return nt_transform(ts, w_);
        case Measure::bt_paa: return bt_transform(ts, w_);
    }
    throw std::logic_error("MeasureContext: unreachable");
}

double MeasureContext::distance(const MeasureRepr& query, const MeasureRepr& reference) const {
    switch (cfg_.measure) {
        case Measure::ed:
            return euclidean(std::get<TimeSeries>(query), std::get<TimeSeries>(reference));
        case Measure::cosine:
            return cosine_distance(std::get<PaaRepr>(query), std::get<PaaRepr>(reference));
        case Measure::paa:
            return paa_distance(std::get<PaaRepr>(query), std::get<PaaRepr>(reference));
        case Measure::nt_paa:
            return nt_distance(std::get<NtRepr>(query), std::get<NtRepr>(reference), cfg_.nt_policy);
        case Measure::bt_paa:
            return bit_dist(std::get<BtRepr>(query), std::get<BtRepr>(reference));
    }
    throw std::logic_error("MeasureContext: unreachable");
}

std::vector<double> pairwise_distance_matrix(const std::vector<TimeSeries>& data,
                                             const MeasureConfig& cfg) {
    if (data.empty()) throw std::invalid_argument("pairwise_distance_matrix: empty input");
    const std::size_t m = data.size();
    MeasureContext ctx(cfg, data.front().size());
    std::vector<MeasureRepr> reprs;
    reprs.reserve(m);
    for (const TimeSeries& ts : data) reprs.push_back(ctx.transform(ts));

    const bool symmetric = !(cfg.measure == Measure::nt_paa &&
                             (cfg.nt_policy == NtCountPolicy::query ||
                              cfg.nt_policy == NtCountPolicy::reference));
    std::vector<double> matrix(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = symmetric ? i + 1 : 0; j < m; ++j) {
            if (i == j) continue;
            const double d = ctx.distance(reprs[i], reprs[j]);
            matrix[i * m + j] = d;
            if (symmetric) matrix[j * m + i] = d;
        }
    }
    return matrix;
}

int knn_classify(const LabeledDataset& train, const TimeSeries& query,
                 const MeasureConfig& cfg, std::size_t k) {
    train.validate();
    if (k == 0) throw std::invalid_argument("knn_classify: k must be >= 1");
    if (k > train.size()) throw std::invalid_argument("knn_classify: k exceeds training size");
    if (query.size() != train.length())
        throw std::invalid_argument("knn_classify: query length mismatch");

    MeasureContext ctx(cfg, train.length());
    const MeasureRepr q = ctx.transform(query);
    std::vector<std::pair<double, int>> candidates;
    candidates.reserve(train.size());
    for (std::size_t i = 0; i < train.size(); ++i)
        candidates.emplace_back(ctx.distance(q, ctx.transform(train.series[i])), train.labels[i]);
    return vote_k_nearest(candidates, k);
}

EvalReport evaluate_classification(const LabeledDataset& train, const LabeledDataset& test,
                                   const MeasureConfig& cfg, std::size_t k) {
    train.validate();
    test.validate();
    if (train.length() != test.length())
        throw std::invalid_argument("evaluate_classification: train/test length mismatch");
    if (k == 0 || k > train.size())
        throw std::invalid_argument("evaluate_classification: k out of range");

    const auto t0 = Clock::now();
    MeasureContext ctx(cfg, train.length());
    std::vector<MeasureRepr> train_reprs;
    train_reprs.reserve(train.size());
    for (const TimeSeries& ts : train.series) train_reprs.push_back(ctx.transform(ts));

    std::vector<int> predicted(test.size());
    std::vector<std::pair<double, int>> candidates(train.size());
    for (std::size_t t = 0; t < test.size(); ++t) {
        const MeasureRepr q = ctx.transform(test.series[t]);
        for (std::size_t i = 0; i < train.size(); ++i)
            candidates[i] = {ctx.distance(q, train_reprs[i]), train.labels[i]};
        predicted[t] = vote_k_nearest(candidates, k);
    }

    EvalReport report;
    std::size_t wrong = 0;
    for (std::size_t t = 0; t < test.size(); ++t)
        if (predicted[t] != test.labels[t]) ++wrong;
    report.error_rate = static_cast<double>(wrong) / static_cast<double>(test.size());

    // Per-class metrics over every label present in the truth or the
    // predictions; macro-F1 is their unweighted mean.
    std::set<int> label_set(test.labels.begin(), test.labels.end());
    label_set.insert(predicted.begin(), predicted.end());
    double f1_sum = 0.0;
    for (int label : label_set) {
        std::size_t tp = 0, fp = 0, fn = 0, support = 0;
        for (std::size_t t = 0; t < test.size(); ++t) {
            const bool actual = test.labels[t] == label;
            const bool pred = predicted[t] == label;
            support += actual;
            if (actual && pred) ++tp;
            if (!actual && pred) ++fp;
            if (actual && !pred) ++fn;
        }
        ClassMetrics cm;
        cm.label = label;
        cm.support = support;
        cm.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
        cm.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
        cm.f1 = cm.precision + cm.recall == 0.0
                    ? 0.0
                    : 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall);
        f1_sum += cm.f1;
        report.per_class.push_back(cm);
    }
    report.macro_f1 = f1_sum / static_cast<double>(label_set.size());
    report.chosen_s = cfg.measure == Measure::ed ? 0 : cfg.s;
    report.wall_clock_seconds = seconds_since(t0);
    report.notes = "macro-F1 = unweighted mean of per-class F1 over labels present in truth or predictions";
    return report;
}

std::size_t select_s_by_cv(const LabeledDataset& train, Measure measure, std::size_t k,
                           std::size_t s_min, std::size_t s_max, NtCountPolicy policy) {
    train.validate();
    if (s_min == 0 || s_min > s_max) throw std::invalid_argument("select_s_by_cv: empty s range");
    if (s_max > train.length())
        throw std::invalid_argument("select_s_by_cv: s range exceeds series length");
    const std::size_t m = train.size();
    if (m < 2) throw std::invalid_argument("select_s_by_cv: need at least two training series");
    const std::size_t k_eff = std::min(k, m - 1);
    if (k_eff == 0) throw std::invalid_argument("select_s_by_cv: k must be >= 1");

    std::size_t best_s = s_min;
    std::size_t best_errors = m + 1;
    for (std::size_t s = s_min; s <= s_max; ++s) {
        MeasureConfig cfg{measure, s, policy};
        const std::vector<double> matrix = pairwise_distance_matrix(train.series, cfg);
        std::size_t errors = 0;
        std::vector<std::pair<double, int>> candidates;
        for (std::size_t i = 0; i < m; ++i) {
            candidates.clear();
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                candidates.emplace_back(matrix[i * m + j], train.labels[j]);
            }
            if (vote_k_nearest(candidates, k_eff) != train.labels[i]) ++errors;
        }
        if (errors < best_errors) {
            best_errors = errors;
            best_s = s;
        }
    }
    return best_s;
}

namespace {

// Per point: every other point's (distance, index), ascending.
std::vector<std::vector<std::pair<double, std::size_t>>>
sorted_neighbor_lists(const std::vector<double>& matrix, std::size_t m) {
    std::vector<std::vector<std::pair<double, std::size_t>>> lists(m);
    for (std::size_t i = 0; i < m; ++i) {
        lists[i].reserve(m - 1);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) lists[i].emplace_back(matrix[i * m + j], j);
        std::sort(lists[i].begin(), lists[i].end());
    }
    return lists;
}

std::vector<double> lof_from_lists(
    const std::vector<std::vector<std::pair<double, std::size_t>>>& lists, std::size_t k) {
    const std::size_t m = lists.size();
    std::vector<double> k_dist(m);
    std::vector<std::size_t> neighbor_count(m);
    for (std::size_t i = 0; i < m; ++i) {
        k_dist[i] = lists[i][k - 1].first;
        // All points within the k-distance belong to the neighborhood, so
        // ties can push its size past k.
        std::size_t c = k;
        while (c < lists[i].size() && lists[i][c].first == k_dist[i]) ++c;
        neighbor_count[i] = c;
    }

    std::vector<double> lrd(m);
    for (std::size_t i = 0; i < m; ++i) {
        double reach_sum = 0.0;
        for (std::size_t j = 0; j < neighbor_count[i]; ++j) {
            const auto& [d, o] = lists[i][j];
            reach_sum += std::max(k_dist[o], d);
        }
        lrd[i] = reach_sum == 0.0
                     ? kLrdCap
                     : std::min(kLrdCap, static_cast<double>(neighbor_count[i]) / reach_sum);
    }

    std::vector<double> lof(m);
    for (std::size_t i = 0; i < m; ++i) {
        double lrd_sum = 0.0;
        for (std::size_t j = 0; j < neighbor_count[i]; ++j) lrd_sum += lrd[lists[i][j].second];
        lof[i] = lrd_sum / (static_cast<double>(neighbor_count[i]) * lrd[i]);
    }
    return lof;
}

} // namespace

std::vector<double> lof_scores(const std::vector<TimeSeries>& data, const MeasureConfig& cfg,
                               std::size_t k_neighbors) {
    if (k_neighbors == 0) throw std::invalid_argument("lof_scores: k_neighbors must be >= 1");
    if (data.size() <= k_neighbors)
        throw std::invalid_argument("lof_scores: data size must exceed k_neighbors");
    const std::vector<double> matrix = pairwise_distance_matrix(data, cfg);
    return lof_from_lists(sorted_neighbor_lists(matrix, data.size()), k_neighbors);
}

double auc(const std::vector<double>& scores, const std::vector<bool>& is_anomaly) {
    if (scores.size() != is_anomaly.size())
        throw std::invalid_argument("auc: scores/labels size mismatch");
    if (scores.empty()) throw std::invalid_argument("auc: empty input");
    const std::size_t m = scores.size();
    std::size_t n_anom = 0;
    for (bool a : is_anomaly) n_anom += a ? 1 : 0;
    const std::size_t n_norm = m - n_anom;
    if (n_anom == 0 || n_norm == 0)
        throw std::invalid_argument("auc: both classes must be present");

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Average ranks over tie groups (ranks are 1-based).
    std::vector<double> rank(m);
    std::size_t i = 0;
    while (i < m) {
        std::size_t j = i;
        while (j < m && scores[order[j]] == scores[order[i]]) ++j;
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) rank[order[t]] = avg;
        i = j;
    }

    double anom_rank_sum = 0.0;
    for (std::size_t t = 0; t < m; ++t)
        if (is_anomaly[t]) anom_rank_sum += rank[t];
    const double n1 = static_cast<double>(n_anom);
    const double n0 = static_cast<double>(n_norm);
    return (anom_rank_sum - n1 * (n1 + 1.0) / 2.0) / (n1 * n0);
}

EvalReport evaluate_anomaly(const LabeledDataset& train, const LabeledDataset& test,
                            const MeasureConfig& cfg, std::size_t k_min, std::size_t k_max) {
    train.validate();
    test.validate();
    if (train.length() != test.length())
        throw std::invalid_argument("evaluate_anomaly: train/test length mismatch");
    const std::vector<int> labels = test.distinct_labels();
    if (labels.size() != 2)
        throw std::invalid_argument("evaluate_anomaly: test split must have exactly 2 classes");

    const auto t0 = Clock::now();
    const std::size_t m = test.size();
    const std::size_t count0 =
        static_cast<std::size_t>(std::count(test.labels.begin(), test.labels.end(), labels[0]));
    const std::size_t count1 = m - count0;
    // Minority class is the anomaly; the larger label wins a tie.
    const int anomaly_label = count1 <= count0 ? labels[1] : labels[0];
    std::vector<bool> is_anomaly(m);
    for (std::size_t t = 0; t < m; ++t) is_anomaly[t] = test.labels[t] == anomaly_label;

    if (k_min == 0 || k_min > k_max)
        throw std::invalid_argument("evaluate_anomaly: empty k range");
    const std::size_t k_hi = std::min(k_max, m - 1);
    if (k_min > k_hi)
        throw std::invalid_argument("evaluate_anomaly: k range exceeds test size - 1");

    const std::vector<double> matrix = pairwise_distance_matrix(test.series, cfg);
    const auto lists = sorted_neighbor_lists(matrix, m);

    double best_auc = -1.0;
    std::size_t best_k = k_min;
    for (std::size_t k = k_min; k <= k_hi; ++k) {
        const double a = auc(lof_from_lists(lists, k), is_anomaly);
        if (a > best_auc) {
            best_auc = a;
            best_k = k;
        }
    }

    EvalReport report;
    report.auc = best_auc;
    report.chosen_k = best_k;
    report.chosen_s = cfg.measure == Measure::ed ? 0 : cfg.s;
    report.wall_clock_seconds = seconds_since(t0);
    report.notes = "LOF scored on the test split only; labels used solely for AUC; "
                   "anomaly class = minority class of the test split (tie -> larger label); "
                   "LOF k swept over [" + std::to_string(k_min) + "," + std::to_string(k_hi) +
                   "] keeping the best AUC";
    return report;
}

} // namespace trendpaa
