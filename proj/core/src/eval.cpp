#include "sentivote/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sentivote/errors.hpp"
#include "sentivote/model.hpp"

namespace sentivote {

namespace {

std::map<std::string, double> as_map(const StateShares& shares, const std::string& what) {
    std::map<std::string, double> out;
    for (const auto& [state, share] : shares) {
        if (!out.emplace(state, share).second) {
            throw DataError(what + ": duplicate state `" + state + "`");
        }
    }
    return out;
}

void check_aligned(const std::map<std::string, double>& a,
                   const std::map<std::string, double>& b, const std::string& a_name,
                   const std::string& b_name) {
    std::string missing;
    for (const auto& [state, v] : a) {
        if (!b.count(state)) missing += (missing.empty() ? "" : ", ") + state;
    }
    std::string extra;
    for (const auto& [state, v] : b) {
        if (!a.count(state)) extra += (extra.empty() ? "" : ", ") + state;
    }
    if (!missing.empty() || !extra.empty()) {
        std::string msg = "state key mismatch between " + a_name + " and " + b_name;
        if (!missing.empty()) msg += "; missing from " + b_name + ": " + missing;
        if (!extra.empty()) msg += "; only in " + b_name + ": " + extra;
        throw DataError(msg);
    }
}

}  // namespace

std::vector<std::pair<std::string, double>> absolute_errors(const StateShares& predicted,
                                                            const StateShares& actual) {
    const auto actual_map = as_map(actual, "actual");
    check_aligned(as_map(predicted, "predicted"), actual_map, "predicted", "actual");
    std::vector<std::pair<std::string, double>> out;
    out.reserve(predicted.size());
    for (const auto& [state, p] : predicted) {
        out.emplace_back(state, std::abs(p - actual_map.at(state)));
    }
    return out;
}

double mae(const std::vector<double>& ae) {
    if (ae.empty()) throw DataError("mae: empty input");
    double sum = 0.0;
    for (double v : ae) sum += v;
    return sum / static_cast<double>(ae.size());
}

EvaluationReport compare(const StateShares& predicted, const StateShares& baseline,
                         const StateShares& actual,
                         const std::vector<std::string>& swing_states) {
    const auto pred_map = as_map(predicted, "predicted");
    const auto base_map = as_map(baseline, "baseline");
    const auto actual_map = as_map(actual, "actual");
    check_aligned(pred_map, actual_map, "predicted", "actual");
    check_aligned(pred_map, base_map, "predicted", "baseline");

    EvaluationReport report;
    std::vector<double> ae, ae_baseline;
    for (const auto& [state, p] : predicted) {
        EvalRow row;
        row.state = state;
        row.predicted = p;
        row.actual = actual_map.at(state);
        row.baseline = base_map.at(state);
        row.ae = std::abs(row.predicted - row.actual);
        row.ae_baseline = std::abs(row.baseline - row.actual);
        ae.push_back(row.ae);
        ae_baseline.push_back(row.ae_baseline);
        report.rows.push_back(std::move(row));
    }
    report.n_states = report.rows.size();
    report.mae = mae(ae);
    report.mae_baseline = mae(ae_baseline);
    report.beats_baseline = report.mae < report.mae_baseline;

    for (const auto& state : swing_states) {
        const auto it = pred_map.find(state);
        if (it == pred_map.end()) {
            throw DataError("swing state `" + state + "` not present in predictions");
        }
        // two-candidate margin of the predicted share
        report.swing.push_back({state, std::abs(2.0 * it->second - 1.0)});
    }
    return report;
}

std::string report_json(const EvaluationReport& report) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
        j["rows"].push_back({{"state", r.state},
                             {"predicted", r.predicted},
                             {"actual", r.actual},
                             {"ae", r.ae},
                             {"baseline", r.baseline},
                             {"ae_baseline", r.ae_baseline}});
    }
    j["mae"] = report.mae;
    j["mae_baseline"] = report.mae_baseline;
    j["n_states"] = report.n_states;
    j["beats_baseline"] = report.beats_baseline;
    j["swing"] = nlohmann::json::array();
    for (const auto& s : report.swing) {
        j["swing"].push_back({{"state", s.state}, {"margin", s.margin}});
    }
    return j.dump(2) + "\n";
}

std::string report_csv(const EvaluationReport& report) {
    std::ostringstream out;
    out << "state,predicted,actual,ae,baseline,ae_baseline\n";
    for (const auto& r : report.rows) {
        out << r.state << ',' << format_percent(r.predicted) << ','
            << format_percent(r.actual) << ',' << format_percent(r.ae) << ','
            << format_percent(r.baseline) << ',' << format_percent(r.ae_baseline) << '\n';
    }
    out << "MAE,,," << format_percent(report.mae) << ",,"
        << format_percent(report.mae_baseline) << '\n';
    return out.str();
}

}  // namespace sentivote
