#include "sentivote/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sentivote/errors.hpp"

namespace sentivote {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::PositiveShare: return "positive-share";
        case Strategy::NetShare: return "net-share";
        case Strategy::VolumeShare: return "volume-share";
    }
    return "?";
}

std::string to_string(WeightMode m) {
    return m == WeightMode::Literal ? "literal" : "normalized";
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "positive-share") return Strategy::PositiveShare;
    if (s == "net-share") return Strategy::NetShare;
    if (s == "volume-share") return Strategy::VolumeShare;
    throw UsageError("unknown strategy `" + s +
                     "`; valid: positive-share, net-share, volume-share");
}

WeightMode weight_mode_from_string(const std::string& s) {
    if (s == "literal") return WeightMode::Literal;
    if (s == "normalized") return WeightMode::Normalized;
    throw UsageError("unknown weight mode `" + s + "`; valid: literal, normalized");
}

TwitterSupport estimate_twitter_support(const std::vector<DailySentiment>& daily,
                                        Strategy strategy, bool smoothing) {
    std::array<long, 2> pos{}, net{}, volume{};
    for (const auto& row : daily) {
        if (row.candidate_id < 1 || row.candidate_id > 2) {
            throw DataError("daily sentiment row with candidate id " +
                            std::to_string(row.candidate_id) + ", expected 1 or 2");
        }
        const int j = row.candidate_id - 1;
        pos[j] += row.positive;
        net[j] += row.positive - row.negative;
        volume[j] += row.tweet_count;
    }
    std::array<double, 2> mass{};
    switch (strategy) {
        case Strategy::PositiveShare:
            mass = {static_cast<double>(pos[0]), static_cast<double>(pos[1])};
            break;
        case Strategy::NetShare:
            mass = {static_cast<double>(std::max(net[0], 0L)),
                    static_cast<double>(std::max(net[1], 0L))};
            break;
        case Strategy::VolumeShare:
            mass = {static_cast<double>(volume[0]), static_cast<double>(volume[1])};
            break;
    }
    TwitterSupport support;
    support.strategy = strategy;
    support.smoothing = smoothing;
    const double total = mass[0] + mass[1];
    if (smoothing) {
        support.e = {(1.0 + mass[0]) / (2.0 + total), (1.0 + mass[1]) / (2.0 + total)};
    } else {
        if (total <= 0.0) {
            throw DataError("all-zero sentiment mass under strategy " +
                            to_string(strategy) + "; enable smoothing or supply data");
        }
        support.e = {mass[0] / total, mass[1] / total};
    }
    return support;
}

StateForecast state_support(const StateProfile& profile, const TwitterSupport& e,
                            int model_id, WeightMode mode,
                            const PartyAlignment& alignment) {
    if (model_id != 1 && model_id != 2) {
        throw UsageError("model_id must be 1 or 2, got " + std::to_string(model_id));
    }
    const double s = profile.twitter_frac;
    const double c = profile.internet_not_twitter_frac;

    StateForecast out;
    out.state = profile.state;
    for (int j = 0; j < 2; ++j) {
        const double p = profile.prior_share[alignment[j]];
        // A state with no twitter users produces no twitter signal, so there
        // is nothing for model 1 to propagate to its internet population:
        // both models collapse to the prior there.
        const double ej = (s == 0.0) ? p : e.e[j];
        double share = 0.0;
        if (model_id == 1) {
            share = (mode == WeightMode::Literal) ? s * ej + c * ej + (1.0 - c) * p
                                                  : (s + c) * ej + (1.0 - s - c) * p;
        } else {
            share = (mode == WeightMode::Literal) ? s * ej + c * p + (1.0 - c) * p
                                                  : s * ej + (1.0 - s) * p;
        }
        out.share[j] = share;
    }
    out.margin = std::abs(out.share[0] - out.share[1]);
    if (out.margin < kTieThreshold) {
        out.winner = kTieWinner;
    } else {
        out.winner = out.share[0] > out.share[1] ? 1 : 2;
    }
    return out;
}

std::pair<double, double> two_party_share(double a, double b) {
    if (a < 0.0 || b < 0.0) throw DataError("two_party_share: negative input");
    const double total = a + b;
    if (total == 0.0) throw DataError("two_party_share: both shares are zero");
    return {a / total, b / total};
}

ElectoralOutcome electoral_college(const std::vector<StateForecast>& states,
                                   const StateTable& table) {
    ElectoralOutcome outcome;
    for (const auto& sf : states) {
        const StateProfile* profile = table.find(sf.state);
        if (!profile) {
            throw DataError("electoral college: state `" + sf.state +
                            "` missing from the state table");
        }
        if (sf.winner == kTieWinner) {
            outcome.tied_ev += profile->electoral_votes;
        } else {
            outcome.votes[sf.winner - 1] += profile->electoral_votes;
        }
    }
    const int total = table.total_electoral_votes();
    if (total > 0) {
        outcome.share = {static_cast<double>(outcome.votes[0]) / total,
                         static_cast<double>(outcome.votes[1]) / total};
    }
    return outcome;
}

namespace {

Forecast aggregate(const StateTable& table, std::vector<StateForecast> states) {
    Forecast f;
    f.states = std::move(states);
    double weight_sum = 0.0;
    std::array<double, 2> weighted{};
    // left-to-right state-file order, so parallel callers reproduce it
    for (std::size_t i = 0; i < table.profiles.size(); ++i) {
        const double w = table.profiles[i].turnout_weight;
        weight_sum += w;
        weighted[0] += w * f.states[i].share[0];
        weighted[1] += w * f.states[i].share[1];
    }
    if (weight_sum <= 0.0) throw DataError("popular vote: turnout weights sum to zero");
    f.popular_vote = {weighted[0] / weight_sum, weighted[1] / weight_sum};

    const auto ec = electoral_college(f.states, table);
    f.electoral_votes = ec.votes;
    f.electoral_share = ec.share;
    f.tied_ev = ec.tied_ev;
    return f;
}

}  // namespace

Forecast forecast(const StateTable& table, const TwitterSupport& e, int model_id,
                  WeightMode mode, const PartyAlignment& alignment) {
    std::vector<StateForecast> states;
    states.reserve(table.profiles.size());
    for (const auto& profile : table.profiles) {
        states.push_back(state_support(profile, e, model_id, mode, alignment));
    }
    Forecast f = aggregate(table, std::move(states));
    f.model_id = model_id;
    f.weight_mode = mode;
    f.e_strategy = e.strategy;
    f.literal_mode_flagged = (mode == WeightMode::Literal);
    return f;
}

Forecast baseline_forecast(const StateTable& table, const PartyAlignment& alignment) {
    std::vector<StateForecast> states;
    states.reserve(table.profiles.size());
    for (const auto& profile : table.profiles) {
        StateForecast sf;
        sf.state = profile.state;
        sf.share = {profile.prior_share[alignment[0]], profile.prior_share[alignment[1]]};
        sf.margin = std::abs(sf.share[0] - sf.share[1]);
        sf.winner = sf.margin < kTieThreshold ? kTieWinner
                    : sf.share[0] > sf.share[1] ? 1
                                                : 2;
        states.push_back(std::move(sf));
    }
    Forecast f = aggregate(table, std::move(states));
    f.model_id = 0;
    f.weight_mode = WeightMode::Normalized;
    return f;
}

std::string format_percent(double fraction) {
    // round half up at two decimals
    const double scaled = fraction * 10000.0;
    const long long rounded = static_cast<long long>(std::floor(scaled + 0.5));
    std::ostringstream out;
    out << rounded / 100 << '.' << (rounded % 100 < 10 ? "0" : "")
        << std::llabs(rounded % 100) << '%';
    return out.str();
}

std::string forecast_json(const Forecast& f) {
    nlohmann::json j;
    j["model_id"] = f.model_id == 0 ? "baseline" : std::to_string(f.model_id);
    j["weight_mode"] = to_string(f.weight_mode);
    j["e_strategy"] = to_string(f.e_strategy);
    j["literal_mode_flagged"] = f.literal_mode_flagged;
    j["states"] = nlohmann::json::array();
    for (const auto& s : f.states) {
        j["states"].push_back({{"state", s.state},
                               {"share_1", s.share[0]},
                               {"share_2", s.share[1]},
                               {"winner", s.winner},
                               {"margin", s.margin}});
    }
    j["popular_vote"] = {f.popular_vote[0], f.popular_vote[1]};
    j["electoral_votes"] = {f.electoral_votes[0], f.electoral_votes[1]};
    j["electoral_share"] = {f.electoral_share[0], f.electoral_share[1]};
    j["tied_ev"] = f.tied_ev;
    return j.dump(2) + "\n";
}

std::string forecast_csv(const Forecast& f) {
    std::ostringstream out;
    out << "state,candidate_1,candidate_2\n";
    for (const auto& s : f.states) {
        out << s.state << ',' << format_percent(s.share[0]) << ','
            << format_percent(s.share[1]) << '\n';
    }
    out << "Popular Vote," << format_percent(f.popular_vote[0]) << ','
        << format_percent(f.popular_vote[1]) << '\n';
    out << "Electoral Vote," << format_percent(f.electoral_share[0]) << ','
        << format_percent(f.electoral_share[1]) << '\n';
    return out.str();
}

}  // namespace sentivote
