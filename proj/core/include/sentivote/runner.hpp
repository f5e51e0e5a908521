#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sentivote {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kFixtureSetVersion = "2012.1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

struct RunConfig {
    // input paths
    std::optional<std::string> tweets;
    std::optional<std::string> afinn;
    std::optional<std::string> census;
    std::optional<std::string> priors;
    std::optional<std::string> apportionment;
    std::optional<std::string> weights;
    std::optional<std::string> actuals;
    std::optional<std::string> baseline;
    std::optional<std::string> predicted;
    std::optional<std::string> table;  // combined predicted/actual/baseline CSV
    std::optional<std::string> synth_spec;

    std::string model = "2";              // "1", "2", or "baseline"
    std::string weight_mode = "normalized";
    std::string e_strategy = "positive-share";
    bool smoothing = true;
    bool english_only = false;
    bool strict = false;
    bool phrase_mode = false;
    std::string both_policy = "count-both";
    std::vector<std::string> candidate1_terms{"obama"};
    std::vector<std::string> candidate2_terms{"romney"};
    std::vector<std::string> swing_states{"Colorado", "Florida", "Iowa", "Ohio"};

    std::string out;                      // output path (required per subcommand)
    std::string format = "json";          // json | csv
    std::optional<std::string> svg;       // timeseries only
    unsigned threads = 1;
};

// Subcommand entry points. Machine-readable results go to `out_stream`
// (stdout in the CLI), diagnostics to `err_stream`. Return value is the
// process exit code: 0 ok, 1 usage, 2 data error.
int run_forecast(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream);
int run_evaluate(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream);
int run_timeseries(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream);
int run_synth(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream);
int run_validate(const RunConfig& cfg, std::ostream& out_stream, std::ostream& err_stream);

// Loads a JSON config file into cfg. The CLI applies this before flag
// parsing so flags win on conflict. Throws UsageError on unknown keys
// or bad types.
void apply_config_file(RunConfig& cfg, const std::string& path);

}  // namespace sentivote
