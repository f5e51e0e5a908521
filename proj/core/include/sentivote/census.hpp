#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace sentivote {

struct StateProfile {
    std::string state;
    double twitter_frac = 0.0;               // fraction of population on twitter
    double internet_not_twitter_frac = 0.0;  // internet users who are not on twitter
    std::array<double, 2> prior_share{};     // prior support per party, sums to 1
    int electoral_votes = 0;
    double turnout_weight = 1.0;
};

struct StateTable {
    std::vector<StateProfile> profiles;  // input file order
    bool equal_weight_fallback = false;  // no weights file supplied

    std::size_t size() const { return profiles.size(); }
    int total_electoral_votes() const;
    const StateProfile* find(const std::string& state) const;
};

struct ValidationFinding {
    std::string state;
    std::string field;
    std::string message;
};

// Joins the four input files on the state key and validates every
// invariant. The weights stream may be null: all weights default to 1
// and the table flags the fallback. Throws DataError on mismatched key
// sets (listing the offending states), malformed values, values > 1
// that look like percents, or invariant violations.
StateTable load_state_profiles(std::istream& census, std::istream& priors,
                               std::istream& apportionment,
                               std::istream* weights = nullptr);

StateTable load_state_profiles_files(const std::string& census_path,
                                     const std::string& priors_path,
                                     const std::string& apportionment_path,
                                     const std::optional<std::string>& weights_path);

// Re-checks every invariant; empty on valid data.
std::vector<ValidationFinding> validate_profiles(const StateTable& table);

}  // namespace sentivote
