#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentivote/errors.hpp"
#include "sentivote/runner.hpp"

namespace {

using sentivote::RunConfig;

// Shared option plumbing. --config values are applied before parsing,
// so explicit flags override them.
void add_io_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--out", cfg.out, "Output file path");
    cmd->add_option("--format", cfg.format, "Output format: json or csv");
}

void add_corpus_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--tweets", cfg.tweets, "Tweet corpus (JSON Lines)");
    cmd->add_option("--afinn", cfg.afinn, "AFINN lexicon file (term<TAB>valence)");
    cmd->add_flag("--english-only", cfg.english_only,
                  "Drop records whose lang field is present and not `en`");
    cmd->add_flag("--strict", cfg.strict, "Abort on unparseable records");
    cmd->add_flag("--phrase-mode", cfg.phrase_mode,
                  "Match two-word lexicon phrases before unigrams");
    cmd->add_option("--both-policy", cfg.both_policy,
                    "Tweets mentioning both candidates: count-both or drop-both");
    cmd->add_option("--candidate1-term", cfg.candidate1_terms,
                    "Match terms for candidate 1 (repeatable)");
    cmd->add_option("--candidate2-term", cfg.candidate2_terms,
                    "Match terms for candidate 2 (repeatable)");
    cmd->add_option("--threads", cfg.threads, "Worker threads for tweet scoring");
}

void add_census_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--census", cfg.census,
                    "CSV state,twitter_frac,internet_not_twitter_frac");
    cmd->add_option("--priors", cfg.priors, "CSV state,dem_share,rep_share");
    cmd->add_option("--apportionment", cfg.apportionment, "CSV state,electoral_votes");
    cmd->add_option("--weights", cfg.weights, "CSV state,turnout_weight (optional)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twitter-sentiment election forecaster with census correction"};
    app.set_version_flag("--version", std::string("sentivote ") + sentivote::kToolVersion +
                                          " (fixture set " +
                                          sentivote::kFixtureSetVersion + ")");
    app.require_subcommand(1);

    RunConfig cfg;

    // pre-scan for --config so flags parsed below win on conflict
    try {
        for (int i = 1; i < argc - 1; ++i) {
            if (std::string(argv[i]) == "--config") {
                sentivote::apply_config_file(cfg, argv[i + 1]);
            }
        }
    } catch (const sentivote::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sentivote::kExitUsage;
    }
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags win on conflict");

    auto* forecast = app.add_subcommand("forecast", "Run a census-corrected forecast");
    add_corpus_options(forecast, cfg);
    add_census_options(forecast, cfg);
    add_io_options(forecast, cfg);
    forecast->add_option("--model", cfg.model, "Model: 1, 2, or baseline");
    forecast->add_option("--weight-mode", cfg.weight_mode,
                         "Segment weights: normalized or literal");
    forecast->add_option("--strategy", cfg.e_strategy,
                         "Twitter support: positive-share, net-share, volume-share");
    forecast->add_flag("--no-smoothing",
                       [&cfg](std::int64_t) { cfg.smoothing = false; },
                       "Disable add-one smoothing of twitter support");

    auto* evaluate = app.add_subcommand("evaluate", "Score a forecast against results");
    evaluate->add_option("--predicted", cfg.predicted,
                         "Predicted shares (forecast JSON or CSV state,share)");
    evaluate->add_option("--actual", cfg.actuals, "Actual shares (CSV state,share)");
    evaluate->add_option("--baseline", cfg.baseline,
                         "Baseline shares (forecast JSON or CSV state,share)");
    evaluate->add_option("--table", cfg.table,
                         "Combined CSV state,predicted,actual,baseline");
    evaluate->add_option("--swing-state", cfg.swing_states,
                         "States for the margin subsection (repeatable)");
    add_io_options(evaluate, cfg);

    auto* timeseries = app.add_subcommand("timeseries", "Daily sentiment CSV/SVG export");
    add_corpus_options(timeseries, cfg);
    add_io_options(timeseries, cfg);
    timeseries->add_option("--svg", cfg.svg, "Also write an SVG line chart");

    auto* synth = app.add_subcommand("synth", "Generate a seeded synthetic corpus");
    synth->add_option("--spec", cfg.synth_spec, "Synthesis spec (JSON)");
    synth->add_option("--afinn", cfg.afinn, "AFINN lexicon file");
    add_io_options(synth, cfg);

    auto* validate = app.add_subcommand("validate", "Validate state profile inputs");
    add_census_options(validate, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? sentivote::kExitOk : sentivote::kExitUsage;
    }

    if (forecast->parsed()) return sentivote::run_forecast(cfg, std::cout, std::cerr);
    if (evaluate->parsed()) return sentivote::run_evaluate(cfg, std::cout, std::cerr);
    if (timeseries->parsed()) return sentivote::run_timeseries(cfg, std::cout, std::cerr);
    if (synth->parsed()) return sentivote::run_synth(cfg, std::cout, std::cerr);
    if (validate->parsed()) return sentivote::run_validate(cfg, std::cout, std::cerr);
    return sentivote::kExitUsage;
}
