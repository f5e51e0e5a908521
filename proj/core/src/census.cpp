#include "sentivote/census.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "sentivote/csv.hpp"
#include "sentivote/errors.hpp"

namespace sentivote {

namespace {

constexpr const char* kCensusHeader = "state,twitter_frac,internet_not_twitter_frac";
constexpr const char* kPriorsHeader = "state,dem_share,rep_share";
constexpr const char* kApportionmentHeader = "state,electoral_votes";
constexpr const char* kWeightsHeader = "state,turnout_weight";

template <typename T>
std::map<std::string, T> keyed(const std::vector<std::vector<std::string>>& rows,
                               const std::string& what,
                               T (*parse_row)(const std::vector<std::string>&)) {
    std::map<std::string, T> out;
    for (const auto& row : rows) {
        if (row[0].empty()) throw DataError(what + ": empty state name");
        if (!out.emplace(row[0], parse_row(row)).second) {
            throw DataError(what + ": duplicate state `" + row[0] + "`");
        }
    }
    return out;
}

template <typename A, typename B>
void check_same_keys(const std::map<std::string, A>& ref, const std::map<std::string, B>& other,
                     const std::string& ref_name, const std::string& other_name) {
    std::string missing, extra;
    for (const auto& [k, v] : ref) {
        if (!other.count(k)) missing += (missing.empty() ? "" : ", ") + k;
    }
    for (const auto& [k, v] : other) {
        if (!ref.count(k)) extra += (extra.empty() ? "" : ", ") + k;
    }
    if (!missing.empty() || !extra.empty()) {
        std::string msg = "state key mismatch between " + ref_name + " and " + other_name;
        if (!missing.empty()) msg += "; missing from " + other_name + ": " + missing;
        if (!extra.empty()) msg += "; only in " + other_name + ": " + extra;
        throw DataError(msg);
    }
}

void check_profile(const StateProfile& p, std::vector<ValidationFinding>* findings) {
    auto fail = [&](const std::string& field, const std::string& message) {
        if (findings) {
            findings->push_back({p.state, field, message});
        } else {
            throw DataError(p.state + ": " + field + ": " + message);
        }
    };
    auto in_unit = [&](double v, const std::string& field) {
        if (v < 0.0 || v > 1.0) {
            fail(field, "value " + std::to_string(v) + " outside [0, 1]");
        }
    };
    in_unit(p.twitter_frac, "twitter_frac");
    in_unit(p.internet_not_twitter_frac, "internet_not_twitter_frac");
    in_unit(p.prior_share[0], "dem_share");
    in_unit(p.prior_share[1], "rep_share");
    if (p.twitter_frac + p.internet_not_twitter_frac > 1.0 + 1e-12) {
        fail("twitter_frac", "twitter_frac + internet_not_twitter_frac = " +
                                 std::to_string(p.twitter_frac + p.internet_not_twitter_frac) +
                                 " exceeds 1");
    }
    if (std::abs(p.prior_share[0] + p.prior_share[1] - 1.0) > 1e-6) {
        fail("dem_share", "two-party priors sum to " +
                              std::to_string(p.prior_share[0] + p.prior_share[1]) +
                              ", expected 1");
    }
    if (p.electoral_votes < 1) {
        fail("electoral_votes", "must be >= 1, got " + std::to_string(p.electoral_votes));
    }
    if (p.turnout_weight < 0.0) {
        fail("turnout_weight", "must be >= 0, got " + std::to_string(p.turnout_weight));
    }
}

}  // namespace

int StateTable::total_electoral_votes() const {
    int total = 0;
    for (const auto& p : profiles) total += p.electoral_votes;
    return total;
}

const StateProfile* StateTable::find(const std::string& state) const {
    for (const auto& p : profiles) {
        if (p.state == state) return &p;
    }
    return nullptr;
}

StateTable load_state_profiles(std::istream& census, std::istream& priors,
                               std::istream& apportionment, std::istream* weights) {
    const auto census_rows = csv::read(census, kCensusHeader, "census");
    const auto prior_rows = csv::read(priors, kPriorsHeader, "priors");
    const auto ev_rows = csv::read(apportionment, kApportionmentHeader, "apportionment");

    auto parse_priors = +[](const std::vector<std::string>& row) {
        return std::array<double, 2>{csv::parse_fraction(row[1], row[0], "dem_share"),
                                     csv::parse_fraction(row[2], row[0], "rep_share")};
    };
    auto parse_ev = +[](const std::vector<std::string>& row) {
        std::size_t pos = 0;
        int ev = 0;
        try {
            ev = std::stoi(row[1], &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != row[1].size() || row[1].empty()) {
            throw DataError(row[0] + ": electoral_votes `" + row[1] + "` is not an integer");
        }
        return ev;
    };
    auto parse_weight = +[](const std::vector<std::string>& row) {
        std::size_t pos = 0;
        double w = 0.0;
        try {
            w = std::stod(row[1], &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != row[1].size() || row[1].empty()) {
            throw DataError(row[0] + ": turnout_weight `" + row[1] + "` is not a number");
        }
        return w;
    };

    // census rows fix the output order; the other files are key lookups
    std::map<std::string, std::array<double, 2>> prior_map =
        keyed(prior_rows, "priors", parse_priors);
    std::map<std::string, int> ev_map = keyed(ev_rows, "apportionment", parse_ev);

    std::map<std::string, std::size_t> census_index;
    for (std::size_t i = 0; i < census_rows.size(); ++i) {
        if (!census_index.emplace(census_rows[i][0], i).second) {
            throw DataError("census: duplicate state `" + census_rows[i][0] + "`");
        }
    }
    check_same_keys(census_index, prior_map, "census", "priors");
    check_same_keys(census_index, ev_map, "census", "apportionment");

    StateTable table;
    std::map<std::string, double> weight_map;
    if (weights) {
        const auto weight_rows = csv::read(*weights, kWeightsHeader, "weights");
        weight_map = keyed(weight_rows, "weights", parse_weight);
        check_same_keys(census_index, weight_map, "census", "weights");
    } else {
        table.equal_weight_fallback = true;
    }

    for (const auto& row : census_rows) {
        StateProfile p;
        p.state = row[0];
        p.twitter_frac = csv::parse_fraction(row[1], p.state, "twitter_frac");
        p.internet_not_twitter_frac =
            csv::parse_fraction(row[2], p.state, "internet_not_twitter_frac");
        p.prior_share = prior_map.at(p.state);
        p.electoral_votes = ev_map.at(p.state);
        p.turnout_weight = weights ? weight_map.at(p.state) : 1.0;
        check_profile(p, nullptr);
        table.profiles.push_back(std::move(p));
    }
    if (table.profiles.empty()) throw DataError("census: no states loaded");
    return table;
}

StateTable load_state_profiles_files(const std::string& census_path,
                                     const std::string& priors_path,
                                     const std::string& apportionment_path,
                                     const std::optional<std::string>& weights_path) {
    auto open = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DataError("cannot open " + path);
        return in;
    };
    auto census = open(census_path);
    auto priors = open(priors_path);
    auto ev = open(apportionment_path);
    if (weights_path) {
        auto weights = open(*weights_path);
        return load_state_profiles(census, priors, ev, &weights);
    }
    return load_state_profiles(census, priors, ev, nullptr);
}

std::vector<ValidationFinding> validate_profiles(const StateTable& table) {
    std::vector<ValidationFinding> findings;
    std::map<std::string, int> seen;
    for (const auto& p : table.profiles) {
        if (++seen[p.state] == 2) {
            findings.push_back({p.state, "state", "duplicate state id"});
        }
        check_profile(p, &findings);
    }
    if (table.profiles.empty()) {
        findings.push_back({"", "table", "no states present"});
    }
    // the equal-weight fallback is reported by the CLI from
    // table.equal_weight_fallback; it is a note, not a finding
    return findings;
}

}  // namespace sentivote
