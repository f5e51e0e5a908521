#pragma once

#include <string>
#include <vector>

namespace sentivote {

// Ordered (state, share) pairs; order follows the source file.
using StateShares = std::vector<std::pair<std::string, double>>;

struct EvalRow {
    std::string state;
    double predicted = 0.0;
    double actual = 0.0;
    double ae = 0.0;
    double baseline = 0.0;
    double ae_baseline = 0.0;
};

struct SwingMargin {
    std::string state;
    double margin = 0.0;  // |share_1 - share_2| of the prediction
};

struct EvaluationReport {
    std::vector<EvalRow> rows;
    double mae = 0.0;
    double mae_baseline = 0.0;
    std::size_t n_states = 0;
    bool beats_baseline = false;  // strict inequality
    std::vector<SwingMargin> swing;
};

// ae_i = |predicted_i - actual_i|. Throws DataError listing the states
// present in one input but not the other.
std::vector<std::pair<std::string, double>> absolute_errors(const StateShares& predicted,
                                                            const StateShares& actual);

// Arithmetic mean; DataError on empty input.
double mae(const std::vector<double>& ae);

// Full comparison of a model forecast against actual results and a
// baseline forecast. swing_states selects the margin subsection.
EvaluationReport compare(const StateShares& predicted, const StateShares& baseline,
                         const StateShares& actual,
                         const std::vector<std::string>& swing_states = {});

std::string report_json(const EvaluationReport& report);

// CSV with header `state,predicted,actual,ae,baseline,ae_baseline` and a
// trailing MAE summary block.
std::string report_csv(const EvaluationReport& report);

}  // namespace sentivote
