// Acceptance suite: one pass/fail line per criterion, nonzero exit when a
// gating criterion fails. Criterion 10 is a measured soft target.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sentivote/census.hpp"
#include "sentivote/corpus.hpp"
#include "sentivote/csv.hpp"
#include "sentivote/eval.hpp"
#include "sentivote/lexicon.hpp"
#include "sentivote/model.hpp"
#include "sentivote/synth.hpp"

using namespace sentivote;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kDataDir = SENTIVOTE_DATA_DIR;
const std::string kFixtures = kDataDir + "/fixtures";
const std::string kCli = SENTIVOTE_CLI_PATH;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << '\n';
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ComparisonTable {
    StateShares predicted, actual, baseline;
};

ComparisonTable load_comparison_table() {
    ComparisonTable t;
    for (const auto& row :
         csv::read_file(kFixtures + "/comparison_2012.csv", "state,predicted,actual,baseline")) {
        t.predicted.emplace_back(row[0], std::stod(row[1]));
        t.actual.emplace_back(row[0], std::stod(row[2]));
        t.baseline.emplace_back(row[0], std::stod(row[3]));
    }
    return t;
}

std::vector<StateForecast> load_share_table(const std::string& path) {
    std::vector<StateForecast> out;
    for (const auto& row : csv::read_file(path, "state,share_1,share_2")) {
        StateForecast sf;
        sf.state = row[0];
        sf.share = {std::stod(row[1]), std::stod(row[2])};
        sf.margin = std::abs(sf.share[0] - sf.share[1]);
        sf.winner = sf.margin < kTieThreshold ? kTieWinner
                    : sf.share[0] > sf.share[1] ? 1
                                                : 2;
        out.push_back(std::move(sf));
    }
    return out;
}

StateTable load_apportionment_only() {
    StateTable table;
    for (const auto& row :
         csv::read_file(kFixtures + "/apportionment_2012.csv", "state,electoral_votes")) {
        StateProfile p;
        p.state = row[0];
        p.electoral_votes = std::stoi(row[1]);
        p.prior_share = {0.5, 0.5};
        table.profiles.push_back(std::move(p));
    }
    return table;
}

SynthSpec make_spec(double e1, std::uint64_t n, std::uint64_t seed) {
    SynthSpec spec;
    spec.planted_e = {e1, 1.0 - e1};
    spec.n_tweets = n;
    spec.start_date = "2012-08-12";
    spec.end_date = "2012-10-31";
    spec.seed = seed;
    spec.positive_vocab = {"good", "great", "win", "hope", "strong"};
    spec.negative_vocab = {"bad", "sad", "weak"};
    return spec;
}

const std::vector<CandidateSpec> kSpecs = {{1, {"obama"}}, {2, {"romney"}}};

std::array<double, 2> main_pipeline_e(const std::string& jsonl, const Lexicon& lexicon) {
    std::istringstream in(jsonl);
    const Corpus corpus = ingest_tweets(in, kSpecs, {});
    const auto daily = bucket_by_day(corpus, lexicon, kSpecs);
    return estimate_twitter_support(daily, Strategy::PositiveShare, true).e;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_1_and_2() {
    const auto start = Clock::now();
    const auto t = load_comparison_table();
    const auto rpt = compare(t.predicted, t.baseline, t.actual);
    const double elapsed = seconds_since(start);
    {
        std::ostringstream d;
        d << "MAE reproduction: model " << rpt.mae * 100 << "% (want 2.60 +/- 0.005), baseline "
          << rpt.mae_baseline * 100 << "% (want 2.75 +/- 0.005), " << elapsed << "s";
        report(1,
               std::abs(rpt.mae - 0.0260) <= 5e-5 &&
                   std::abs(rpt.mae_baseline - 0.0275) <= 5e-5 && elapsed < 1.0,
               d.str());
    }
    double alabama = -1, utah = -1, ohio = -1, louisiana_base = -1;
    for (const auto& row : rpt.rows) {
        if (row.state == "Alabama") alabama = row.ae;
        if (row.state == "Utah") utah = row.ae;
        if (row.state == "Ohio") ohio = row.ae;
        if (row.state == "Louisiana") louisiana_base = row.ae_baseline;
    }
    const bool ok = std::abs(alabama - 0.0117) < 1e-9 && std::abs(utah - 0.1047) < 1e-9 &&
                    std::abs(ohio - 0.0043) < 1e-9 &&
                    std::abs(louisiana_base - 0.0005) < 1e-9;
    std::ostringstream d;
    d << "per-state AE spot checks: Alabama " << alabama * 100 << "%, Utah " << utah * 100
      << "%, Ohio " << ohio * 100 << "%, Louisiana baseline " << louisiana_base * 100 << "%";
    report(2, ok, d.str());
}

void criterion_3() {
    const auto table = load_apportionment_only();
    const auto m1 = electoral_college(load_share_table(kFixtures + "/model1_states.csv"), table);
    const auto m2 = electoral_college(load_share_table(kFixtures + "/model2_states.csv"), table);
    const bool ok = table.total_electoral_votes() == 538 &&
                    std::abs(m1.share[0] - 0.6735) <= 0.015 &&
                    std::abs(m2.share[0] - 0.6082) <= 0.015;
    std::ostringstream d;
    d << "electoral college: model 1 candidate-1 EV " << m1.votes[0] << "/538 = "
      << m1.share[0] * 100 << "% (published 67.35%), model 2 EV " << m2.votes[0]
      << "/538 = " << m2.share[0] * 100
      << "% (published 60.82%); published percentages are not integer multiples of 1/538";
    report(3, ok, d.str());
}

void criterion_4() {
    const auto [a, b] = two_party_share(0.506, 0.4784);
    std::ostringstream d;
    d << "two-party conversion of (0.506, 0.4784): " << a * 100 << "% (want 51.40 +/- 0.01)";
    report(4, std::abs(a - 0.5140) <= 1e-4, d.str());
}

void criterion_5(const Lexicon& lexicon) {
    const auto start = Clock::now();
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto jsonl = generate_corpus(make_spec(0.65, 1000, seed), lexicon);
        const auto main_e = main_pipeline_e(jsonl, lexicon);
        std::istringstream in(jsonl);
        const auto ref_e =
            reference_pipeline(in, lexicon, kSpecs, Strategy::PositiveShare, true);
        ok = ok && main_e[0] == ref_e[0] && main_e[1] == ref_e[1];
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "oracle equivalence over 20 seeded 1k-tweet corpora, bit-exact, " << elapsed
      << "s (< 5s)";
    report(5, ok && elapsed < 5.0, d.str());
}

void criterion_6(const Lexicon& lexicon) {
    const auto start = Clock::now();
    const auto jsonl = generate_corpus(make_spec(0.7, 100000, 42), lexicon);
    const auto e = main_pipeline_e(jsonl, lexicon);
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "planted-truth recovery: E_1 = " << e[0] << " (want within [0.68, 0.72]), "
      << elapsed << "s (< 10s)";
    report(6, e[0] >= 0.68 && e[0] <= 0.72 && elapsed < 10.0, d.str());
}

void criterion_7() {
    std::mt19937 rng(777);
    auto unit = [&] { return static_cast<double>(rng()) / 4294967296.0; };
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        StateProfile p;
        p.state = "X";
        p.twitter_frac = unit() * 0.6;
        p.internet_not_twitter_frac = unit() * (1.0 - p.twitter_frac);
        const double p1 = unit();
        p.prior_share = {p1, 1.0 - p1};
        p.electoral_votes = 1;
        TwitterSupport e;
        const double e1 = unit();
        e.e = {e1, 1.0 - e1};
        for (int model : {1, 2}) {
            const auto n = state_support(p, e, model, WeightMode::Normalized);
            const auto l = state_support(p, e, model, WeightMode::Literal);
            ok = ok && std::abs(n.share[0] + n.share[1] - 1.0) <= 1e-9;
            ok = ok && std::abs(l.share[0] + l.share[1] - (1.0 + p.twitter_frac)) <= 1e-9;
        }
    }
    report(7, ok,
           "normalization: 1000 random profiles, normalized shares sum to 1 (1e-9), "
           "literal to 1 + S_i (1e-9)");
}

void criterion_8() {
    std::mt19937 rng(888);
    auto unit = [&] { return static_cast<double>(rng()) / 4294967296.0; };
    StateTable table;
    for (int i = 0; i < 40; ++i) {
        StateProfile p;
        p.state = "S" + std::to_string(i);
        p.twitter_frac = 0.0;
        p.internet_not_twitter_frac = unit();
        const double p1 = unit();
        p.prior_share = {p1, 1.0 - p1};
        p.electoral_votes = 1 + static_cast<int>(rng() % 20);
        table.profiles.push_back(std::move(p));
    }
    TwitterSupport e;
    e.e = {0.83, 0.17};
    const auto m1 = forecast(table, e, 1, WeightMode::Normalized);
    const auto m2n = forecast(table, e, 2, WeightMode::Normalized);
    const auto m2l = forecast(table, e, 2, WeightMode::Literal);
    const auto base = baseline_forecast(table);
    bool ok = true;
    for (std::size_t i = 0; i < table.profiles.size(); ++i) {
        const double ref = base.states[i].share[0];
        ok = ok && std::abs(m1.states[i].share[0] - ref) <= 1e-12;
        ok = ok && std::abs(m2n.states[i].share[0] - ref) <= 1e-12;
        ok = ok && std::abs(m2l.states[i].share[0] - ref) <= 1e-12;
    }
    report(8, ok,
           "degenerate equivalence: S_i = 0 everywhere, model 1 (normalized), model 2 "
           "(both modes), baseline agree within 1e-12");
}

void criterion_9(const Lexicon& lexicon) {
    const std::string corpus_path = "/tmp/sentivote_accept_corpus.jsonl";
    const std::string out1 = "/tmp/sentivote_accept_run1.json";
    const std::string out2 = "/tmp/sentivote_accept_run2.json";
    {
        std::ofstream f(corpus_path, std::ios::binary);
        f << generate_corpus(make_spec(0.6, 5000, 9), lexicon);
    }
    auto run = [&](const std::string& out, unsigned threads) {
        const std::string cmd = kCli + " forecast --tweets " + corpus_path + " --afinn " +
                                kDataDir + "/afinn_sample.txt --census " + kFixtures +
                                "/census_demo.csv --priors " + kFixtures +
                                "/priors_demo.csv --apportionment " + kFixtures +
                                "/apportionment_2012.csv --weights " + kFixtures +
                                "/weights_demo.csv --model 2 --threads " +
                                std::to_string(threads) + " --out " + out +
                                " >/dev/null 2>/dev/null";
        return std::system(cmd.c_str());
    };
    const int rc1 = run(out1, 1);
    const int rc2 = run(out2, 4);
    const bool ok = rc1 == 0 && rc2 == 0 && !slurp(out1).empty() && slurp(out1) == slurp(out2);
    report(9, ok, "determinism: two CLI forecast runs (threads 1 vs 4) byte-identical");
    std::remove(corpus_path.c_str());
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

void criterion_10(const Lexicon& lexicon) {
    const auto jsonl = generate_corpus(make_spec(0.6, 200000, 77), lexicon);
    std::istringstream in(jsonl);
    std::vector<std::string> texts;
    std::string line;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        texts.push_back(j.at("text").get<std::string>());
    }
    const auto start = Clock::now();
    long checksum = 0;
    for (const auto& text : texts) checksum += score_text(lexicon, text).net;
    const double elapsed = seconds_since(start);
    const double rate = static_cast<double>(texts.size()) / elapsed;
    std::ostringstream d;
    d << "throughput (soft target, non-gating): " << static_cast<long>(rate)
      << " tweets/s single-threaded (target 100000/s), checksum " << checksum;
    report(10, true, d.str());
    if (rate < 100000.0) {
        std::cout << "  note: measured rate below the soft target on this machine\n";
    }
}

}  // namespace

int main() {
    const auto lexicon = Lexicon::from_file(kDataDir + "/afinn_sample.txt");
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5(lexicon);
    criterion_6(lexicon);
    criterion_7();
    criterion_8();
    criterion_9(lexicon);
    criterion_10(lexicon);
    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criteria failed")
              << '\n';
    return g_failures == 0 ? 0 : 1;
}
