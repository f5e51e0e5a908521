#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "sentivote/corpus.hpp"
#include "sentivote/lexicon.hpp"
#include "sentivote/model.hpp"

namespace sentivote {

// RNG recorded in generated metadata so corpora regenerate identically.
inline constexpr const char* kSynthRngId = "mt19937_64";

struct SynthSpec {
    std::array<double, 2> planted_e{0.5, 0.5};  // components in (0,1), sum 1
    std::uint64_t n_tweets = 0;
    std::string start_date;  // YYYY-MM-DD
    std::string end_date;
    std::uint64_t seed = 0;
    std::vector<std::string> positive_vocab;
    std::vector<std::string> negative_vocab;
    std::array<std::string, 2> candidate_terms{"obama", "romney"};
};

SynthSpec parse_synth_spec(std::istream& json_in);

// Deterministic given the seed. Every tweet mentions exactly one
// candidate (candidate 1 with probability planted_e[0]), carries one to
// three positive-vocab tokens, and ingests with zero dropped records.
// Throws DataError when a vocab token is missing from the lexicon or
// carries the wrong sign.
std::string generate_corpus(const SynthSpec& spec, const Lexicon& lexicon);

// Seed/planted-truth echo for the CLI metadata block.
std::string synth_metadata_json(const SynthSpec& spec);

// Independent oracle: one naive single-threaded pass over the JSON Lines
// input, no dedup, no shortcuts. Must match the main pipeline bit-exactly
// on corpora the main pipeline does not alter (unique ids, in order).
std::array<double, 2> reference_pipeline(std::istream& tweets, const Lexicon& lexicon,
                                         const std::vector<CandidateSpec>& specs,
                                         Strategy strategy, bool smoothing);

}  // namespace sentivote
