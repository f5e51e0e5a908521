#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sentivote/census.hpp"
#include "sentivote/corpus.hpp"

namespace sentivote {

enum class Strategy { PositiveShare, NetShare, VolumeShare };
enum class WeightMode { Literal, Normalized };

std::string to_string(Strategy s);
std::string to_string(WeightMode m);
Strategy strategy_from_string(const std::string& s);
WeightMode weight_mode_from_string(const std::string& s);

struct TwitterSupport {
    std::array<double, 2> e{0.5, 0.5};  // per-candidate share, sums to 1
    Strategy strategy = Strategy::PositiveShare;
    bool smoothing = true;
};

constexpr int kTieWinner = 0;  // candidate ids are 1 and 2
constexpr double kTieThreshold = 1e-12;

struct StateForecast {
    std::string state;
    std::array<double, 2> share{};
    int winner = kTieWinner;  // 1, 2, or kTieWinner
    double margin = 0.0;      // |share_1 - share_2|
};

struct ElectoralOutcome {
    std::array<int, 2> votes{};
    std::array<double, 2> share{};  // of the full apportionment
    int tied_ev = 0;
};

struct Forecast {
    int model_id = 0;  // 1, 2, or 0 for the prior-only baseline
    WeightMode weight_mode = WeightMode::Normalized;
    Strategy e_strategy = Strategy::PositiveShare;
    std::vector<StateForecast> states;
    std::array<double, 2> popular_vote{};
    std::array<int, 2> electoral_votes{};
    std::array<double, 2> electoral_share{};
    int tied_ev = 0;
    bool literal_mode_flagged = false;  // literal segment weights sum to 1 + S_i
};

// Maps candidate index (0-based) to party index into prior_share.
// Defaults to candidate 1 = party 1, candidate 2 = party 2.
using PartyAlignment = std::array<int, 2>;
constexpr PartyAlignment kIdentityAlignment{0, 1};

// Aggregates daily sentiment into per-candidate twitter support.
// positive-share divides positive-sentiment mass, net-share divides
// max(net, 0) mass, volume-share divides tweet counts. Add-one smoothing
// turns x_j into (1 + x_j) / (2 + x_1 + x_2); without smoothing an
// all-zero input is a DataError.
TwitterSupport estimate_twitter_support(const std::vector<DailySentiment>& daily,
                                        Strategy strategy, bool smoothing);

// One state's support under model 1 or 2. With S = twitter_frac,
// C = internet_not_twitter_frac, E = e[j], P = prior of the aligned party:
//   model 1 literal:     S*E + C*E + (1-C)*P
//   model 1 normalized:  (S+C)*E + (1-S-C)*P
//   model 2 literal:     S*E + C*P + (1-C)*P
//   model 2 normalized:  S*E + (1-S)*P
StateForecast state_support(const StateProfile& profile, const TwitterSupport& e,
                            int model_id, WeightMode mode,
                            const PartyAlignment& alignment = kIdentityAlignment);

// Full run: per-state supports, turnout-weighted popular vote,
// winner-take-all electoral college.
Forecast forecast(const StateTable& table, const TwitterSupport& e, int model_id,
                  WeightMode mode, const PartyAlignment& alignment = kIdentityAlignment);

// (a, b) -> (a/(a+b), b/(a+b)). DataError when a + b = 0.
std::pair<double, double> two_party_share(double a, double b);

// Each state's electoral votes go wholly to its winner; tied states
// accrue to tied_ev. Every forecast state must exist in the table.
ElectoralOutcome electoral_college(const std::vector<StateForecast>& states,
                                   const StateTable& table);

// Prior passthrough: share_ij = P_ik, then the same aggregation.
Forecast baseline_forecast(const StateTable& table,
                           const PartyAlignment& alignment = kIdentityAlignment);

// Serialization. JSON carries full precision; CSV mirrors the per-state
// table layout with two-decimal percents (round half up).
std::string forecast_json(const Forecast& f);
std::string forecast_csv(const Forecast& f);

// Two-decimal percent with round-half-up, e.g. 0.50625 -> "50.63%".
std::string format_percent(double fraction);

}  // namespace sentivote
