#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "sentivote/csv.hpp"
#include "sentivote/errors.hpp"
#include "sentivote/eval.hpp"

using namespace sentivote;

namespace {

struct ComparisonTable {
    StateShares predicted, actual, baseline;
};

ComparisonTable load_comparison_table() {
    const auto rows =
        csv::read_file(std::string(SENTIVOTE_DATA_DIR) + "/fixtures/comparison_2012.csv",
                       "state,predicted,actual,baseline");
    ComparisonTable t;
    for (const auto& row : rows) {
        t.predicted.emplace_back(row[0], std::stod(row[1]));
        t.actual.emplace_back(row[0], std::stod(row[2]));
        t.baseline.emplace_back(row[0], std::stod(row[3]));
    }
    return t;
}

double share_of(const StateShares& shares, const std::string& state) {
    for (const auto& [s, v] : shares) {
        if (s == state) return v;
    }
    FAIL("state not found: " << state);
    return 0.0;
}

}  // namespace

TEST_CASE("absolute_errors: published spot values") {
    const auto t = load_comparison_table();
    const auto ae = absolute_errors(t.predicted, t.actual);
    auto ae_of = [&](const std::string& state) {
        for (const auto& [s, v] : ae) {
            if (s == state) return v;
        }
        FAIL("missing state");
        return 0.0;
    };
    CHECK(ae_of("Alabama") == doctest::Approx(0.0117).epsilon(1e-9));
    CHECK(ae_of("Utah") == doctest::Approx(0.1047).epsilon(1e-9));
    CHECK(ae_of("Ohio") == doctest::Approx(0.0043).epsilon(1e-9));
}

TEST_CASE("absolute_errors: identical inputs give zeros, mismatch lists states") {
    const auto t = load_comparison_table();
    const auto zeros = absolute_errors(t.actual, t.actual);
    for (const auto& [state, ae] : zeros) CHECK(ae == 0.0);

    auto trimmed = t.actual;
    trimmed.pop_back();  // drops Wyoming
    CHECK_THROWS_WITH_AS(absolute_errors(t.predicted, trimmed),
                         doctest::Contains("Wyoming"), DataError);
}

TEST_CASE("mae: trivial cases") {
    CHECK(mae({0.0, 0.0, 0.0}) == 0.0);
    CHECK(mae({0.031, 0.031}) == doctest::Approx(0.031).epsilon(1e-12));
    CHECK_THROWS_AS(mae({}), DataError);
}

TEST_CASE("compare: reproduces the published MAE pair") {
    const auto t = load_comparison_table();
    const auto report = compare(t.predicted, t.baseline, t.actual,
                                {"Colorado", "Florida", "Iowa", "Ohio"});
    CHECK(report.n_states == 51);
    CHECK(std::abs(report.mae - 0.0260) < 5e-5);
    CHECK(std::abs(report.mae_baseline - 0.0275) < 5e-5);
    CHECK(report.beats_baseline);
    CHECK(report.swing.size() == 4);
    // Louisiana baseline spot check: |40.54% - 40.49%| = 0.05%
    for (const auto& row : report.rows) {
        if (row.state == "Louisiana") {
            CHECK(row.ae_baseline == doctest::Approx(0.0005).epsilon(1e-9));
        }
    }
}

TEST_CASE("compare: baseline equal to the model never beats it") {
    const auto t = load_comparison_table();
    const auto report = compare(t.predicted, t.predicted, t.actual);
    CHECK_FALSE(report.beats_baseline);
    CHECK(report.mae == report.mae_baseline);
}

TEST_CASE("compare: single state") {
    StateShares pred{{"A", 0.52}}, base{{"A", 0.50}}, actual{{"A", 0.49}};
    const auto report = compare(pred, base, actual);
    CHECK(report.mae == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(report.rows.size() == 1);
}

TEST_CASE("compare: unknown swing state rejected") {
    const auto t = load_comparison_table();
    CHECK_THROWS_AS(compare(t.predicted, t.baseline, t.actual, {"Atlantis"}), DataError);
}

TEST_CASE("properties: permutation invariance and triangle sanity") {
    const auto t = load_comparison_table();
    std::mt19937 rng(5);
    auto shuffled = t.predicted;
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto report = compare(shuffled, t.baseline, t.actual);
        CHECK(std::abs(report.mae - compare(t.predicted, t.baseline, t.actual).mae) < 1e-15);
    }

    const auto model_vs_actual = compare(t.predicted, t.baseline, t.actual).mae;
    std::vector<double> model_vs_baseline, baseline_vs_actual;
    for (const auto& ae : absolute_errors(t.predicted, t.baseline))
        model_vs_baseline.push_back(ae.second);
    for (const auto& ae : absolute_errors(t.baseline, t.actual))
        baseline_vs_actual.push_back(ae.second);
    CHECK(model_vs_actual <= mae(model_vs_baseline) + mae(baseline_vs_actual) + 1e-15);
}

TEST_CASE("report serialization is deterministic, CSV carries the MAE block") {
    const auto t = load_comparison_table();
    const auto report = compare(t.predicted, t.baseline, t.actual);
    CHECK(report_json(report) == report_json(report));
    const auto csv_text = report_csv(report);
    CHECK(csv_text == report_csv(report));
    CHECK(csv_text.rfind("state,predicted,actual,ae,baseline,ae_baseline\n", 0) == 0);
    CHECK(csv_text.find("MAE,,,2.60%,,2.75%") != std::string::npos);
}
