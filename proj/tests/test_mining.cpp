#include "doctest.h"

#include "oracles.hpp"
#include "trendpaa/mining.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace trendpaa;

namespace {

LabeledDataset make_dataset(std::vector<std::pair<std::vector<double>, int>> rows) {
    LabeledDataset ds;
    for (auto& [values, label] : rows) {
        ds.series.emplace_back(std::move(values));
        ds.labels.push_back(label);
    }
    return ds;
}

} // namespace

TEST_CASE("knn_classify majority vote") {
    const LabeledDataset train =
        make_dataset({{{0, 0}, 1}, {{0, 0.1}, 1}, {{10, 10}, 2}});
    CHECK(knn_classify(train, TimeSeries({0, 0}), {Measure::ed, 1}, 3) == 1);
}

TEST_CASE("knn_classify zero distance wins at k=1") {
    const LabeledDataset train =
        make_dataset({{{5, 5, 5}, 3}, {{1, 2, 3}, 7}, {{-1, 0, 1}, 9}});
    CHECK(knn_classify(train, TimeSeries({1, 2, 3}), {Measure::ed, 1}, 1) == 7);
}

TEST_CASE("knn_classify under the numerical trend measure") {
    // nt distance to [2,0] is 0 (same mean, same deviation magnitudes)
    // while [0,4] is 2 away, so the mirrored series wins.
    const LabeledDataset train = make_dataset({{{2, 0}, 1}, {{0, 4}, 2}});
    const MeasureConfig cfg{Measure::nt_paa, 2, NtCountPolicy::min};
    CHECK(knn_classify(train, TimeSeries({0, 2}), cfg, 1) == 1);
}

TEST_CASE("knn_classify argument validation") {
    const LabeledDataset train = make_dataset({{{0, 0}, 1}, {{1, 1}, 2}});
    const MeasureConfig ed{Measure::ed, 1};
    CHECK_THROWS_AS(knn_classify(LabeledDataset{}, TimeSeries({0, 0}), ed, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(knn_classify(train, TimeSeries({0, 0, 0}), ed, 1), std::invalid_argument);
    CHECK_THROWS_AS(knn_classify(train, TimeSeries({0, 0}), ed, 0), std::invalid_argument);
    CHECK_THROWS_AS(knn_classify(train, TimeSeries({0, 0}), ed, 3), std::invalid_argument);
}

TEST_CASE("knn_classify ignores training order even under distance ties") {
    // Four neighbors at distance exactly 1 with split labels, so both
    // the neighbor set and the vote have to fall back to the tie rules.
    LabeledDataset train = make_dataset(
        {{{1, 0}, 1}, {{0, 1}, 2}, {{-1, 0}, 2}, {{0, -1}, 1}, {{2, 0}, 3}});
    const TimeSeries query({0, 0});
    const MeasureConfig cfg{Measure::ed, 1};
    std::vector<int> expected;
    for (std::size_t k = 1; k <= train.size(); ++k)
        expected.push_back(knn_classify(train, query, cfg, k));

    std::mt19937_64 rng(99);
    std::vector<std::size_t> perm(train.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
        std::shuffle(perm.begin(), perm.end(), rng);
        LabeledDataset shuffled;
        for (std::size_t i : perm) {
            shuffled.series.push_back(train.series[i]);
            shuffled.labels.push_back(train.labels[i]);
        }
        for (std::size_t k = 1; k <= train.size(); ++k)
            CHECK(knn_classify(shuffled, query, cfg, k) == expected[k - 1]);
    }
}

TEST_CASE("evaluate_classification perfect split") {
    const LabeledDataset train = make_dataset({{{0, 0, 0}, 1}, {{9, 9, 9}, 2}});
    const LabeledDataset test =
        make_dataset({{{0.1, 0, 0}, 1}, {{0, 0.2, 0}, 1}, {{9, 9.1, 9}, 2}});
    const EvalReport report = evaluate_classification(train, test, {Measure::ed, 1}, 1);
    CHECK(report.error_rate == 0.0);
    CHECK(report.macro_f1 == 1.0);
    for (const ClassMetrics& cm : report.per_class) {
        CHECK(cm.precision == 1.0);
        CHECK(cm.recall == 1.0);
        CHECK(cm.f1 == 1.0);
    }
}

TEST_CASE("evaluate_classification counts mistakes exactly") {
    const LabeledDataset train = make_dataset({{{0, 0, 0, 0}, 1}, {{10, 10, 10, 10}, 2}});
    LabeledDataset test;
    for (int i = 0; i < 49; ++i) {
        test.series.emplace_back(std::vector<double>{0.1 * i / 49, 0, 0, 0});
        test.labels.push_back(1);
    }
    for (int i = 0; i < 49; ++i) {
        test.series.emplace_back(std::vector<double>{10, 10 + 0.1 * i / 49, 10, 10});
        test.labels.push_back(2);
    }
    // Two series labeled 1 but sitting on the class-2 prototype.
    test.series.emplace_back(std::vector<double>{10, 10, 10, 10});
    test.labels.push_back(1);
    test.series.emplace_back(std::vector<double>{10, 10, 10.2, 10});
    test.labels.push_back(1);

    const EvalReport report = evaluate_classification(train, test, {Measure::ed, 1}, 1);
    CHECK(report.error_rate == doctest::Approx(0.02).epsilon(1e-12));
    // error_rate * |test| is a whole number of mistakes
    const double mistakes = report.error_rate * static_cast<double>(test.size());
    CHECK(std::abs(mistakes - std::round(mistakes)) <= 1e-9);
    // and the confusion the per-class metrics came from agrees with it
    double correct = 0.0;
    for (const ClassMetrics& cm : report.per_class)
        correct += cm.recall * static_cast<double>(cm.support);
    CHECK(report.error_rate ==
          doctest::Approx(1.0 - correct / static_cast<double>(test.size())).epsilon(1e-12));
}

TEST_CASE("evaluate_classification harmonic mean fixed points") {
    const LabeledDataset train = make_dataset({{{0, 0}, 1}, {{10, 10}, 2}});
    // One of each class classified right, one of each wrong:
    // precision = recall = 0.5 for both classes, so F1 = 0.5.
    const LabeledDataset test = make_dataset(
        {{{0, 0.1}, 1}, {{10, 9.9}, 1}, {{9.9, 10}, 2}, {{0.1, 0}, 2}});
    const EvalReport report = evaluate_classification(train, test, {Measure::ed, 1}, 1);
    CHECK(report.error_rate == doctest::Approx(0.5));
    for (const ClassMetrics& cm : report.per_class) {
        CHECK(cm.precision == doctest::Approx(0.5));
        CHECK(cm.recall == doctest::Approx(0.5));
        CHECK(cm.f1 == doctest::Approx(0.5));
    }
    CHECK(report.macro_f1 == doctest::Approx(0.5));
}

TEST_CASE("classification under ED does not depend on s") {
    std::mt19937_64 rng(61);
    LabeledDataset train, test;
    for (int i = 0; i < 12; ++i) {
        train.series.push_back(oracles::uniform_series(rng, 20));
        train.labels.push_back(i % 3);
        test.series.push_back(oracles::uniform_series(rng, 20));
        test.labels.push_back((i + 1) % 3);
    }
    const EvalReport a = evaluate_classification(train, test, {Measure::ed, 2}, 3);
    const EvalReport b = evaluate_classification(train, test, {Measure::ed, 7}, 3);
    CHECK(a.error_rate == b.error_rate);
    CHECK(a.macro_f1 == b.macro_f1);
    CHECK(a.chosen_s == 0);
    CHECK(b.chosen_s == 0);
}

TEST_CASE("select_s_by_cv singleton range") {
    const LabeledDataset train =
        make_dataset({{{0, 0, 0, 0, 0, 0}, 1}, {{0.1, 0, 0, 0, 0, 0}, 1},
                      {{9, 9, 9, 9, 9, 9}, 2}, {{9, 9.1, 9, 9, 9, 9}, 2}});
    CHECK(select_s_by_cv(train, Measure::paa, 3, 5, 5) == 5);
}

TEST_CASE("select_s_by_cv ties resolve to the smallest s") {
    const LabeledDataset train =
        make_dataset({{{0, 0, 0, 0, 0, 0}, 1}, {{0.1, 0, 0, 0, 0, 0}, 1},
                      {{9, 9, 9, 9, 9, 9}, 2}, {{9, 9.1, 9, 9, 9, 9}, 2}});
    // Fully separable at every s, so every candidate scores zero error.
    CHECK(select_s_by_cv(train, Measure::paa, 1, 2, 6) == 2);
}

TEST_CASE("select_s_by_cv finds the only separating ratio") {
    // Segment means at s=2 alternate +-a (class 1) or -+a (class 2);
    // coarser ratios collapse every mean to zero and nothing separates.
    auto alternating = [](double a, bool flip) {
        std::vector<double> v(8);
        for (std::size_t i = 0; i < 8; ++i) {
            const bool up = (i / 2) % 2 == 0;
            v[i] = (up != flip ? a : -a);
        }
        return v;
    };
    LabeledDataset train;
    for (double a : {1.0, 1.1, 0.9, 1.05}) {
        train.series.emplace_back(alternating(a, false));
        train.labels.push_back(1);
        train.series.emplace_back(alternating(a, true));
        train.labels.push_back(2);
    }
    CHECK(select_s_by_cv(train, Measure::paa, 3, 2, 8) == 2);

    // Brute-force LOOCV over the same grid agrees that only s=2 is clean.
    for (std::size_t s = 2; s <= 8; ++s) {
        std::size_t errors = 0;
        for (std::size_t i = 0; i < train.size(); ++i) {
            LabeledDataset held;
            for (std::size_t j = 0; j < train.size(); ++j) {
                if (j == i) continue;
                held.series.push_back(train.series[j]);
                held.labels.push_back(train.labels[j]);
            }
            if (knn_classify(held, train.series[i], {Measure::paa, s}, 3) != train.labels[i])
                ++errors;
        }
        if (s == 2)
            CHECK(errors == 0);
        else
            CHECK(errors > 0);
    }
}

TEST_CASE("select_s_by_cv argument validation") {
    const LabeledDataset train = make_dataset({{{0, 0}, 1}, {{1, 1}, 2}});
    CHECK_THROWS_AS(select_s_by_cv(train, Measure::paa, 1, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(select_s_by_cv(train, Measure::paa, 1, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(select_s_by_cv(train, Measure::paa, 1, 0, 2), std::invalid_argument);
}

TEST_CASE("lof on a uniform grid stays near one in the interior") {
    std::vector<TimeSeries> grid;
    for (int i = 0; i < 12; ++i) grid.emplace_back(std::vector<double>{static_cast<double>(i)});
    const MeasureConfig cfg{Measure::ed, 1};
    const std::vector<double> scores = lof_scores(grid, cfg, 2);

    const auto brute = oracles::lof_brute(grid.size(), 2, [&](std::size_t a, std::size_t b) {
        return euclidean(grid[a], grid[b]);
    });
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(scores[i] == doctest::Approx(brute[i]).epsilon(1e-9));
    // The boundary effect reaches two points in (the ends' inflated
    // k-distances feed their neighbors' lrd), hence interior = [3, 8].
    for (std::size_t i = 3; i <= 8; ++i) {
        CHECK(scores[i] >= 0.9);
        CHECK(scores[i] <= 1.1);
    }
}

TEST_CASE("lof flags the point far from the unit square") {
    const std::vector<TimeSeries> points = {
        TimeSeries({0, 0}), TimeSeries({0, 1}), TimeSeries({1, 0}), TimeSeries({1, 1}),
        TimeSeries({10, 10})};
    const std::vector<double> scores = lof_scores(points, {Measure::ed, 1}, 2);
    const auto brute = oracles::lof_brute(points.size(), 2, [&](std::size_t a, std::size_t b) {
        return euclidean(points[a], points[b]);
    });
    for (std::size_t i = 0; i < points.size(); ++i)
        CHECK(scores[i] == doctest::Approx(brute[i]).epsilon(1e-9));
    for (std::size_t i = 0; i < 4; ++i) CHECK(scores[i] < 1.3);
    CHECK(scores[4] > 1.5);
}

TEST_CASE("lof keeps duplicates finite and equal") {
    std::vector<TimeSeries> same(6, TimeSeries({3.0, 3.0, 3.0}));
    const std::vector<double> scores = lof_scores(same, {Measure::ed, 1}, 2);
    for (double s : scores) {
        CHECK(std::isfinite(s));
        CHECK(s == doctest::Approx(1.0));
    }

    // Duplicating every point of a varied dataset keeps scores finite.
    std::mt19937_64 rng(67);
    std::vector<TimeSeries> doubled;
    for (int i = 0; i < 8; ++i) {
        const TimeSeries ts = oracles::uniform_series(rng, 5);
        doubled.push_back(ts);
        doubled.push_back(ts);
    }
    for (double s : lof_scores(doubled, {Measure::ed, 1}, 3)) CHECK(std::isfinite(s));
}

TEST_CASE("lof argument validation") {
    std::vector<TimeSeries> pts(4, TimeSeries({0.0}));
    CHECK_THROWS_AS(lof_scores(pts, {Measure::ed, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(lof_scores(pts, {Measure::ed, 1}, 0), std::invalid_argument);
}

TEST_CASE("auc basics") {
    CHECK(auc({0.9, 0.8, 0.2, 0.1}, {true, true, false, false}) == 1.0);
    CHECK(auc({0.9, 0.8, 0.2, 0.1}, {false, false, true, true}) == 0.0);
    CHECK(auc({0.5, 0.5, 0.5, 0.5}, {true, false, true, false}) == 0.5);
    CHECK_THROWS_AS(auc({0.1, 0.2}, {true, true}), std::invalid_argument);
    CHECK_THROWS_AS(auc({0.1, 0.2}, {false}), std::invalid_argument);
}

TEST_CASE("evaluate_anomaly ranks the planted outlier first") {
    LabeledDataset test = make_dataset({{{0, 0}, 0}, {{0, 1}, 0}, {{1, 0}, 0},
                                        {{1, 1}, 0}, {{10, 10}, 1}});
    const EvalReport report = evaluate_anomaly(test, test, {Measure::ed, 1}, 2, 3);
    CHECK(report.auc == 1.0);
    CHECK(report.chosen_k >= 2);
}

TEST_CASE("evaluate_anomaly on constant data is a coin flip") {
    LabeledDataset test;
    for (int i = 0; i < 8; ++i) {
        test.series.emplace_back(std::vector<double>{1.0, 1.0, 1.0});
        test.labels.push_back(i < 6 ? 0 : 1);
    }
    const EvalReport report = evaluate_anomaly(test, test, {Measure::ed, 1}, 2, 4);
    CHECK(report.auc == doctest::Approx(0.5));
}

TEST_CASE("evaluate_anomaly separates a tiny far blob") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> noise(-0.3, 0.3);
    LabeledDataset test;
    for (int i = 0; i < 20; ++i) {
        std::vector<double> v(6);
        for (double& x : v) x = noise(rng);
        test.series.emplace_back(std::move(v));
        test.labels.push_back(0);
    }
    for (int i = 0; i < 3; ++i) {
        std::vector<double> v(6);
        for (double& x : v) x = 8.0 + noise(rng);
        test.series.emplace_back(std::move(v));
        test.labels.push_back(1);
    }
    const EvalReport report = evaluate_anomaly(test, test, {Measure::ed, 1}, 3, 3);
    CHECK(report.auc > 0.95);
    CHECK(report.chosen_k == 3);

    const auto brute = oracles::lof_brute(test.size(), 3, [&](std::size_t a, std::size_t b) {
        return euclidean(test.series[a], test.series[b]);
    });
    const std::vector<double> ours = lof_scores(test.series, {Measure::ed, 1}, 3);
    for (std::size_t i = 0; i < ours.size(); ++i)
        CHECK(ours[i] == doctest::Approx(brute[i]).epsilon(1e-9));
}

TEST_CASE("evaluate_anomaly resolves a balanced split toward the larger label") {
    // Equal class sizes: the larger label becomes the anomaly class. The
    // label-2 points sit isolated away from the evenly spaced label-1
    // cluster, so a high AUC proves label 2 was scored as the anomaly.
    LabeledDataset test = make_dataset({{{0.0}, 1}, {{0.1}, 1}, {{0.2}, 1}, {{0.3}, 1},
                                        {{10.0}, 2}, {{20.0}, 2}, {{40.0}, 2}, {{80.0}, 2}});
    const EvalReport report = evaluate_anomaly(test, test, {Measure::ed, 1}, 2, 2);
    CHECK(report.auc == 1.0);
}

TEST_CASE("evaluate_anomaly refuses more than two classes") {
    LabeledDataset test = make_dataset({{{0.0}, 1}, {{1.0}, 2}, {{2.0}, 3}, {{3.0}, 1}});
    CHECK_THROWS_AS(evaluate_anomaly(test, test, {Measure::ed, 1}, 2, 3),
                    std::invalid_argument);
}

TEST_CASE("measure parsing accepts cli tokens and canonical names") {
    CHECK(measure_from_string("ed") == Measure::ed);
    CHECK(measure_from_string("COSINE") == Measure::cosine);
    CHECK(measure_from_string("paa") == Measure::paa);
    CHECK(measure_from_string("nt") == Measure::nt_paa);
    CHECK(measure_from_string("NT_PAA") == Measure::nt_paa);
    CHECK(measure_from_string("bt") == Measure::bt_paa);
    CHECK(measure_from_string("BT_PAA") == Measure::bt_paa);
    CHECK_THROWS_AS(measure_from_string("dtw"), std::invalid_argument);
    CHECK(measure_name(Measure::bt_paa) == "BT_PAA");
}

TEST_CASE("segment count derivation") {
    MeasureConfig cfg{Measure::paa, 3};
    CHECK(cfg.segment_count(10) == 3);
    cfg.s = 20;
    CHECK(cfg.segment_count(10) == 1);
    cfg.s = 1;
    CHECK(cfg.segment_count(10) == 10);
    cfg.s = 0;
    CHECK_THROWS_AS(cfg.segment_count(10), std::invalid_argument);
}

TEST_CASE("pairwise matrix agrees with direct evaluation") {
    std::mt19937_64 rng(73);
    std::vector<TimeSeries> data;
    for (int i = 0; i < 6; ++i) data.push_back(oracles::uniform_series(rng, 12));
    for (Measure m : {Measure::ed, Measure::paa, Measure::nt_paa, Measure::bt_paa}) {
        const MeasureConfig cfg{m, 3};
        const std::vector<double> matrix = pairwise_distance_matrix(data, cfg);
        MeasureContext ctx(cfg, 12);
        for (std::size_t i = 0; i < data.size(); ++i) {
            for (std::size_t j = 0; j < data.size(); ++j) {
                const double direct =
                    i == j ? 0.0 : ctx.distance(ctx.transform(data[i]), ctx.transform(data[j]));
                CHECK(matrix[i * data.size() + j] == direct);
            }
        }
    }
}
