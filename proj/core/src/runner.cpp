#include "sentivote/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sentivote/calendar.hpp"
#include "sentivote/census.hpp"
#include "sentivote/corpus.hpp"
#include "sentivote/csv.hpp"
#include "sentivote/errors.hpp"
#include "sentivote/eval.hpp"
#include "sentivote/lexicon.hpp"
#include "sentivote/model.hpp"
#include "sentivote/synth.hpp"

namespace sentivote {

namespace {

const std::string& require(const std::optional<std::string>& value, const char* flag) {
    if (!value || value->empty()) {
        throw UsageError(std::string("missing required option --") + flag);
    }
    return *value;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return in;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << content;
}

std::vector<CandidateSpec> make_specs(const RunConfig& cfg) {
    auto lower_terms = [](const std::vector<std::string>& terms) {
        std::vector<std::string> out;
        for (const auto& t : terms) {
            std::string lt;
            for (unsigned char c : t) lt.push_back(static_cast<char>(std::tolower(c)));
            out.push_back(std::move(lt));
        }
        return out;
    };
    if (cfg.candidate1_terms.empty() || cfg.candidate2_terms.empty()) {
        throw UsageError("candidate match terms must be nonempty");
    }
    std::vector<CandidateSpec> specs{{1, lower_terms(cfg.candidate1_terms)},
                                     {2, lower_terms(cfg.candidate2_terms)}};
    for (const auto& t1 : specs[0].match_terms) {
        for (const auto& t2 : specs[1].match_terms) {
            if (t1 == t2) {
                throw UsageError("candidate match term `" + t1 +
                                 "` assigned to both candidates");
            }
        }
    }
    return specs;
}

BothPolicy both_policy_from_string(const std::string& s) {
    if (s == "count-both") return BothPolicy::CountBoth;
    if (s == "drop-both") return BothPolicy::DropBoth;
    throw UsageError("unknown both-policy `" + s + "`; valid: count-both, drop-both");
}

int parse_model_id(const std::string& model) {
    if (model == "1") return 1;
    if (model == "2") return 2;
    if (model == "baseline") return 0;
    throw UsageError("unknown model `" + model + "`; valid models: 1, 2, baseline");
}

StateShares read_state_shares(const std::string& path) {
    // forecast JSON or `state,share` CSV
    std::ifstream probe(path);
    if (!probe) throw DataError("cannot open " + path);
    char first = 0;
    probe >> first;
    probe.close();
    StateShares shares;
    if (first == '{') {
        auto in = open_input(path);
        nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.contains("states")) {
            throw DataError(path + ": not a forecast JSON document");
        }
        for (const auto& row : j["states"]) {
            shares.emplace_back(row.at("state").get<std::string>(),
                                row.at("share_1").get<double>());
        }
    } else {
        for (const auto& row : csv::read_file(path, "state,share")) {
            shares.emplace_back(row[0], csv::parse_fraction(row[1], row[0], "share"));
        }
    }
    if (shares.empty()) throw DataError(path + ": no state rows");
    return shares;
}

std::vector<DailySentiment> build_daily(const RunConfig& cfg,
                                        const std::vector<CandidateSpec>& specs,
                                        const Lexicon& lexicon, std::ostream& err) {
    auto tweets = open_input(require(cfg.tweets, "tweets"));
    IngestOptions options;
    options.english_only = cfg.english_only;
    options.strict = cfg.strict;
    const Corpus corpus = ingest_tweets(tweets, specs, options);
    err << "ingested " << corpus.stats.kept << " of " << corpus.stats.read
        << " records (deduped " << corpus.stats.deduped << ", non-english "
        << corpus.stats.non_english << ", unmatched " << corpus.stats.unmatched
        << ", unparseable " << corpus.stats.unparseable << ")\n";
    return bucket_by_day(corpus, lexicon, specs, both_policy_from_string(cfg.both_policy),
                         cfg.phrase_mode, cfg.threads);
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
}

std::string timeseries_svg(const std::vector<DailySentiment>& rows);

}  // namespace

int run_forecast(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream) {
    return guarded(err_stream, [&] {
        const int model_id = parse_model_id(cfg.model);
        const WeightMode mode = weight_mode_from_string(cfg.weight_mode);
        const Strategy strategy = strategy_from_string(cfg.e_strategy);
        if (cfg.out.empty()) throw UsageError("missing required option --out");
        if (cfg.format != "json" && cfg.format != "csv") {
            throw UsageError("unknown format `" + cfg.format + "`; valid: json, csv");
        }

        const StateTable table = load_state_profiles_files(
            require(cfg.census, "census"), require(cfg.priors, "priors"),
            require(cfg.apportionment, "apportionment"), cfg.weights);
        if (table.equal_weight_fallback) {
            err_stream << "note: no weights file, popular vote uses equal state weights\n";
        }

        Forecast result;
        if (model_id == 0) {
            result = baseline_forecast(table);
        } else {
            const Lexicon lexicon = Lexicon::from_file(require(cfg.afinn, "afinn"));
            const auto specs = make_specs(cfg);
            const auto daily = build_daily(cfg, specs, lexicon, err_stream);
            const TwitterSupport e = estimate_twitter_support(daily, strategy, cfg.smoothing);
            err_stream << "twitter support E = (" << e.e[0] << ", " << e.e[1] << ") via "
                       << to_string(strategy) << (cfg.smoothing ? " +smoothing" : "")
                       << '\n';
            result = forecast(table, e, model_id, mode);
        }
        if (result.literal_mode_flagged) {
            err_stream << "note: literal weight mode, state shares sum to 1 + S_i\n";
        }
        write_file(cfg.out, cfg.format == "json" ? forecast_json(result)
                                                 : forecast_csv(result));
        out_stream << "forecast model=" << cfg.model << " mode=" << cfg.weight_mode
                   << " popular_vote_1=" << format_percent(result.popular_vote[0])
                   << " ev_1=" << result.electoral_votes[0]
                   << " ev_2=" << result.electoral_votes[1]
                   << " tied_ev=" << result.tied_ev << '\n';
        return kExitOk;
    });
}

int run_evaluate(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream) {
    return guarded(err_stream, [&] {
        if (cfg.out.empty()) throw UsageError("missing required option --out");
        if (cfg.format != "json" && cfg.format != "csv") {
            throw UsageError("unknown format `" + cfg.format + "`; valid: json, csv");
        }
        StateShares predicted, baseline, actual;
        if (cfg.table) {
            for (const auto& row :
                 csv::read_file(*cfg.table, "state,predicted,actual,baseline")) {
                predicted.emplace_back(row[0],
                                       csv::parse_fraction(row[1], row[0], "predicted"));
                actual.emplace_back(row[0], csv::parse_fraction(row[2], row[0], "actual"));
                baseline.emplace_back(row[0],
                                      csv::parse_fraction(row[3], row[0], "baseline"));
            }
        } else {
            predicted = read_state_shares(require(cfg.predicted, "predicted"));
            actual = read_state_shares(require(cfg.actuals, "actual"));
            baseline = read_state_shares(require(cfg.baseline, "baseline"));
        }
        const EvaluationReport report = compare(predicted, baseline, actual,
                                                cfg.swing_states);
        write_file(cfg.out,
                   cfg.format == "json" ? report_json(report) : report_csv(report));
        out_stream << "MAE model=" << format_percent(report.mae)
                   << " baseline=" << format_percent(report.mae_baseline)
                   << " beats_baseline=" << (report.beats_baseline ? "true" : "false")
                   << '\n';
        return kExitOk;
    });
}

int run_timeseries(const RunConfig& cfg, std::ostream& out_stream,
                   std::ostream& err_stream) {
    return guarded(err_stream, [&] {
        if (cfg.out.empty()) throw UsageError("missing required option --out");
        const Lexicon lexicon = Lexicon::from_file(require(cfg.afinn, "afinn"));
        const auto specs = make_specs(cfg);
        const auto daily = build_daily(cfg, specs, lexicon, err_stream);
        write_file(cfg.out, daily_sentiment_csv(daily));
        if (cfg.svg) write_file(*cfg.svg, timeseries_svg(daily));
        out_stream << "timeseries rows=" << daily.size() << " out=" << cfg.out << '\n';
        return kExitOk;
    });
}

int run_synth(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream) {
    return guarded(err_stream, [&] {
        if (cfg.out.empty()) throw UsageError("missing required option --out");
        SynthSpec spec;
        try {
            auto in = open_input(require(cfg.synth_spec, "spec"));
            spec = parse_synth_spec(in);
        } catch (const DataError& e) {
            // an invalid spec is caller misuse, not a data pipeline failure
            throw UsageError(e.what());
        }
        const Lexicon lexicon = Lexicon::from_file(require(cfg.afinn, "afinn"));
        write_file(cfg.out, generate_corpus(spec, lexicon));
        out_stream << synth_metadata_json(spec);
        return kExitOk;
    });
}

int run_validate(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream) {
    return guarded(err_stream, [&] {
        const StateTable table = load_state_profiles_files(
            require(cfg.census, "census"), require(cfg.priors, "priors"),
            require(cfg.apportionment, "apportionment"), cfg.weights);
        const auto findings = validate_profiles(table);
        out_stream << "states=" << table.size()
                   << " total_electoral_votes=" << table.total_electoral_votes()
                   << " findings=" << findings.size() << '\n';
        if (table.equal_weight_fallback) {
            err_stream << "note: no weights file, popular vote uses equal state weights\n";
        }
        for (const auto& f : findings) {
            err_stream << "finding: " << f.state << " " << f.field << ": " << f.message
                       << '\n';
        }
        return findings.empty() ? kExitOk : kExitData;
    });
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw UsageError("config file " + path + " is not a JSON object");
    }
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "tweets") cfg.tweets = value.get<std::string>();
            else if (key == "afinn") cfg.afinn = value.get<std::string>();
            else if (key == "census") cfg.census = value.get<std::string>();
            else if (key == "priors") cfg.priors = value.get<std::string>();
            else if (key == "apportionment") cfg.apportionment = value.get<std::string>();
            else if (key == "weights") cfg.weights = value.get<std::string>();
            else if (key == "actuals") cfg.actuals = value.get<std::string>();
            else if (key == "baseline") cfg.baseline = value.get<std::string>();
            else if (key == "predicted") cfg.predicted = value.get<std::string>();
            else if (key == "table") cfg.table = value.get<std::string>();
            else if (key == "spec") cfg.synth_spec = value.get<std::string>();
            else if (key == "model") cfg.model = value.is_string()
                                          ? value.get<std::string>()
                                          : std::to_string(value.get<int>());
            else if (key == "weight_mode") cfg.weight_mode = value.get<std::string>();
            else if (key == "e_strategy") cfg.e_strategy = value.get<std::string>();
            else if (key == "smoothing") cfg.smoothing = value.get<bool>();
            else if (key == "english_only") cfg.english_only = value.get<bool>();
            else if (key == "strict") cfg.strict = value.get<bool>();
            else if (key == "phrase_mode") cfg.phrase_mode = value.get<bool>();
            else if (key == "both_policy") cfg.both_policy = value.get<std::string>();
            else if (key == "candidate1_terms")
                cfg.candidate1_terms = value.get<std::vector<std::string>>();
            else if (key == "candidate2_terms")
                cfg.candidate2_terms = value.get<std::vector<std::string>>();
            else if (key == "swing_states")
                cfg.swing_states = value.get<std::vector<std::string>>();
            else if (key == "out") cfg.out = value.get<std::string>();
            else if (key == "format") cfg.format = value.get<std::string>();
            else if (key == "svg") cfg.svg = value.get<std::string>();
            else if (key == "threads") cfg.threads = value.get<unsigned>();
            else throw UsageError("config file: unknown key `" + key + "`");
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config file: ") + e.what());
    }
}

namespace {

std::string timeseries_svg(const std::vector<DailySentiment>& rows) {
    constexpr int kWidth = 900, kHeight = 420, kMargin = 50;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\">\n";
    if (rows.empty()) {
        out << "</svg>\n";
        return out.str();
    }
    std::int64_t day_min = rows.front().day, day_max = rows.front().day;
    long v_max = 1;
    for (const auto& r : rows) {
        day_min = std::min(day_min, r.day);
        day_max = std::max(day_max, r.day);
        v_max = std::max({v_max, r.positive, r.negative});
    }
    const double x_span = std::max<std::int64_t>(1, day_max - day_min);
    auto x_of = [&](std::int64_t day) {
        return kMargin + (kWidth - 2.0 * kMargin) * (day - day_min) / x_span;
    };
    auto y_of = [&](long v) {
        return kHeight - kMargin - (kHeight - 2.0 * kMargin) * v / static_cast<double>(v_max);
    };

    struct Series {
        int candidate;
        bool positive;
        const char* color;
        const char* label;
    };
    const Series series[] = {{1, true, "#1f77b4", "candidate 1 positive"},
                             {1, false, "#aec7e8", "candidate 1 negative"},
                             {2, true, "#d62728", "candidate 2 positive"},
                             {2, false, "#ff9896", "candidate 2 negative"}};
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    int legend_y = 16;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& r : rows) {
            if (r.candidate_id != s.candidate) continue;
            out << x_of(r.day) << ',' << y_of(s.positive ? r.positive : r.negative) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << kWidth - 220 << "\" y=\"" << legend_y << "\" fill=\""
            << s.color << "\" font-size=\"12\">" << s.label << "</text>\n";
        legend_y += 16;
    }
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
        << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 20
        << "\" font-size=\"12\">" << calendar::format_day(day_min) << "</text>\n";
    out << "<text x=\"" << kWidth - kMargin - 70 << "\" y=\"" << kHeight - kMargin + 20
        << "\" font-size=\"12\">" << calendar::format_day(day_max) << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace

}  // namespace sentivote
