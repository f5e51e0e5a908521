#include "sentivote/synth.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sentivote/calendar.hpp"
#include "sentivote/errors.hpp"

namespace sentivote {

namespace {

// Distributions from <random> are not byte-stable across standard
// libraries; these are, given mt19937_64.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::int64_t parse_day(const std::string& text, const std::string& field) {
    int y, m, d;
    if (std::sscanf(text.c_str(), "%4d-%2d-%2d", &y, &m, &d) != 3) {
        throw DataError("synth spec: " + field + " `" + text + "` is not YYYY-MM-DD");
    }
    return calendar::days_from_civil(y, m, d);
}

}  // namespace

SynthSpec parse_synth_spec(std::istream& json_in) {
    nlohmann::json j = nlohmann::json::parse(json_in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw DataError("synth spec: not a JSON object");
    }
    SynthSpec spec;
    try {
        spec.planted_e = {j.at("planted_e").at(0).get<double>(),
                          j.at("planted_e").at(1).get<double>()};
        spec.n_tweets = j.at("n_tweets").get<std::uint64_t>();
        spec.start_date = j.at("start_date").get<std::string>();
        spec.end_date = j.at("end_date").get<std::string>();
        spec.seed = j.at("seed").get<std::uint64_t>();
        spec.positive_vocab = j.at("positive_vocab").get<std::vector<std::string>>();
        spec.negative_vocab = j.value("negative_vocab", std::vector<std::string>{});
        if (j.contains("candidate_terms")) {
            spec.candidate_terms = {j["candidate_terms"].at(0).get<std::string>(),
                                    j["candidate_terms"].at(1).get<std::string>()};
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("synth spec: ") + e.what());
    }
    if (spec.planted_e[0] <= 0.0 || spec.planted_e[0] >= 1.0 ||
        std::abs(spec.planted_e[0] + spec.planted_e[1] - 1.0) > 1e-9) {
        throw DataError("synth spec: planted_e components must lie in (0,1) and sum to 1");
    }
    if (spec.positive_vocab.empty()) {
        throw DataError("synth spec: positive_vocab must be nonempty");
    }
    return spec;
}

std::string generate_corpus(const SynthSpec& spec, const Lexicon& lexicon) {
    for (const auto& token : spec.positive_vocab) {
        const auto v = lexicon.valence(token);
        if (!v || *v <= 0) {
            throw DataError("synth spec: positive_vocab token `" + token +
                            "` has no positive valence in the lexicon");
        }
    }
    for (const auto& token : spec.negative_vocab) {
        const auto v = lexicon.valence(token);
        if (!v || *v >= 0) {
            throw DataError("synth spec: negative_vocab token `" + token +
                            "` has no negative valence in the lexicon");
        }
    }

    const std::int64_t start_day = parse_day(spec.start_date, "start_date");
    const std::int64_t end_day = parse_day(spec.end_date, "end_date");
    if (end_day < start_day) throw DataError("synth spec: end_date before start_date");
    const std::int64_t start_sec = start_day * 86400;
    const std::int64_t span_sec = (end_day - start_day + 1) * 86400;

    std::mt19937_64 rng(spec.seed);
    std::ostringstream out;
    char id_buf[24];
    for (std::uint64_t t = 0; t < spec.n_tweets; ++t) {
        // timestamps increase with the index, so ingestion never reorders
        const std::int64_t ts =
            start_sec + static_cast<std::int64_t>(
                            static_cast<double>(t) / static_cast<double>(spec.n_tweets) *
                            static_cast<double>(span_sec));
        const int candidate = next_unit(rng) < spec.planted_e[0] ? 0 : 1;
        std::string text = spec.candidate_terms[candidate];
        const std::uint64_t n_tokens = 1 + next_below(rng, 3);
        for (std::uint64_t k = 0; k < n_tokens; ++k) {
            text += ' ';
            text += spec.positive_vocab[next_below(rng, spec.positive_vocab.size())];
        }
        if (!spec.negative_vocab.empty() && next_unit(rng) < 0.1) {
            text += ' ';
            text += spec.negative_vocab[next_below(rng, spec.negative_vocab.size())];
        }
        std::snprintf(id_buf, sizeof(id_buf), "synth-%010llu",
                      static_cast<unsigned long long>(t));

        const std::int64_t day = ts / 86400;
        const std::int64_t rem = ts - day * 86400;
        nlohmann::json record = {
            {"id", id_buf},
            {"created_at",
             calendar::format_day(day) + "T" +
                 [&] {
                     char buf[32];
                     std::snprintf(buf, sizeof(buf), "%02d:%02d:%02d",
                                   static_cast<int>(rem / 3600),
                                   static_cast<int>((rem / 60) % 60),
                                   static_cast<int>(rem % 60));
                     return std::string(buf);
                 }() +
                 "Z"},
            {"text", text},
            {"lang", "en"}};
        out << record.dump() << '\n';
    }
    return out.str();
}

std::string synth_metadata_json(const SynthSpec& spec) {
    nlohmann::json j = {{"rng", kSynthRngId},
                        {"seed", spec.seed},
                        {"planted_e", {spec.planted_e[0], spec.planted_e[1]}},
                        {"n_tweets", spec.n_tweets},
                        {"start_date", spec.start_date},
                        {"end_date", spec.end_date}};
    return j.dump(2) + "\n";
}

std::array<double, 2> reference_pipeline(std::istream& tweets, const Lexicon& lexicon,
                                         const std::vector<CandidateSpec>& specs,
                                         Strategy strategy, bool smoothing) {
    // naive single pass, no dedup, no parallelism
    std::array<long, 2> pos{}, net{}, volume{};
    std::string line;
    while (std::getline(tweets, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw DataError("reference pipeline: unparseable line");
        const std::string text = j.at("text").get<std::string>();
        const auto tokens = tokenize(text);
        const SentimentScore score = score_tokens(lexicon, tokens);
        for (const auto& spec : specs) {
            bool hit = false;
            for (const auto& term : spec.match_terms) {
                for (const auto& token : tokens) {
                    if (token == term) {
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (!hit) continue;
            const int c = spec.candidate_id - 1;
            pos[c] += score.positive;
            net[c] += score.net;
            volume[c] += 1;
        }
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
    const double total = mass[0] + mass[1];
    if (smoothing) {
        return {(1.0 + mass[0]) / (2.0 + total), (1.0 + mass[1]) / (2.0 + total)};
    }
    if (total <= 0.0) {
        throw DataError("reference pipeline: all-zero mass without smoothing");
    }
    return {mass[0] / total, mass[1] / total};
}

}  // namespace sentivote
