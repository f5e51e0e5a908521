#include <doctest.h>

#include <sstream>

#include "sentivote/census.hpp"
#include "sentivote/errors.hpp"

using namespace sentivote;

namespace {

const char* kCensus3 =
    "state,twitter_frac,internet_not_twitter_frac\n"
    "Aurora,0.15,0.60\n"
    "Borealis,0.10,0.70\n"
    "Cascadia,0.20,0.55\n";
const char* kPriors3 =
    "state,dem_share,rep_share\n"
    "Aurora,0.52,0.48\n"
    "Borealis,0.45,0.55\n"
    "Cascadia,0.60,0.40\n";
const char* kEv3 =
    "state,electoral_votes\n"
    "Aurora,10\n"
    "Borealis,5\n"
    "Cascadia,20\n";

StateTable load3(const std::string& census = kCensus3, const std::string& priors = kPriors3,
                 const std::string& ev = kEv3, const std::string* weights = nullptr) {
    std::istringstream c(census), p(priors), e(ev);
    if (weights) {
        std::istringstream w(*weights);
        return load_state_profiles(c, p, e, &w);
    }
    return load_state_profiles(c, p, e, nullptr);
}

}  // namespace

TEST_CASE("load: three consistent states") {
    const auto table = load3();
    REQUIRE(table.size() == 3);
    CHECK(table.profiles[0].state == "Aurora");
    CHECK(table.profiles[0].twitter_frac == doctest::Approx(0.15));
    CHECK(table.profiles[1].prior_share[1] == doctest::Approx(0.55));
    CHECK(table.total_electoral_votes() == 35);
    CHECK(table.equal_weight_fallback);
    CHECK(validate_profiles(table).empty());
}

TEST_CASE("load: weights file read and joined") {
    const std::string weights = "state,turnout_weight\nAurora,2\nBorealis,1\nCascadia,1\n";
    const auto table = load3(kCensus3, kPriors3, kEv3, &weights);
    CHECK_FALSE(table.equal_weight_fallback);
    CHECK(table.profiles[0].turnout_weight == 2.0);
}

TEST_CASE("load: priors not summing to 1 rejected") {
    const std::string bad =
        "state,dem_share,rep_share\nAurora,0.50,0.48\nBorealis,0.45,0.55\nCascadia,0.60,0.40\n";
    CHECK_THROWS_WITH_AS(load3(kCensus3, bad), doctest::Contains("Aurora"), DataError);
}

TEST_CASE("load: missing state named in join error") {
    const std::string missing =
        "state,twitter_frac,internet_not_twitter_frac\nAurora,0.15,0.60\nBorealis,0.10,0.70\n";
    CHECK_THROWS_WITH_AS(load3(missing), doctest::Contains("Cascadia"), DataError);
}

TEST_CASE("load: percent-looking values rejected with unit hint") {
    const std::string percents =
        "state,twitter_frac,internet_not_twitter_frac\nAurora,15,60\nBorealis,0.10,0.70\n"
        "Cascadia,0.20,0.55\n";
    CHECK_THROWS_WITH_AS(load3(percents), doctest::Contains("fractions"), DataError);
}

TEST_CASE("load: S + C must not exceed 1") {
    const std::string bad =
        "state,twitter_frac,internet_not_twitter_frac\nAurora,0.45,0.60\nBorealis,0.10,0.70\n"
        "Cascadia,0.20,0.55\n";
    CHECK_THROWS_AS(load3(bad), DataError);
}

TEST_CASE("validate: injected violations produce findings") {
    auto table = load3();
    SUBCASE("S + C above 1") {
        table.profiles[0].twitter_frac = 0.50;
        table.profiles[0].internet_not_twitter_frac = 0.55;
        CHECK(validate_profiles(table).size() == 1);
    }
    SUBCASE("zero electoral votes") {
        table.profiles[1].electoral_votes = 0;
        const auto findings = validate_profiles(table);
        REQUIRE(findings.size() == 1);
        CHECK(findings[0].state == "Borealis");
        CHECK(findings[0].field == "electoral_votes");
    }
    SUBCASE("broken priors") {
        table.profiles[2].prior_share = {0.7, 0.7};
        CHECK(validate_profiles(table).size() == 1);
    }
}

TEST_CASE("load is pure: identical inputs, identical tables") {
    const auto a = load3();
    const auto b = load3();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.profiles[i].state == b.profiles[i].state);
        CHECK(a.profiles[i].twitter_frac == b.profiles[i].twitter_frac);
        CHECK(a.profiles[i].prior_share == b.profiles[i].prior_share);
        CHECK(a.profiles[i].electoral_votes == b.profiles[i].electoral_votes);
    }
}

TEST_CASE("shipped 2012 fixture totals 538 electoral votes") {
    const std::string dir = std::string(SENTIVOTE_DATA_DIR) + "/fixtures";
    const auto table = load_state_profiles_files(dir + "/census_demo.csv",
                                                 dir + "/priors_demo.csv",
                                                 dir + "/apportionment_2012.csv",
                                                 dir + "/weights_demo.csv");
    CHECK(table.size() == 51);
    CHECK(table.total_electoral_votes() == 538);
    CHECK(validate_profiles(table).empty());
}
