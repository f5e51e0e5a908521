#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sentivote/lexicon.hpp"

namespace sentivote {

struct Tweet {
    std::string id;
    std::int64_t timestamp = 0;  // seconds since epoch, UTC
    std::string text;
    std::optional<std::string> lang;
};

struct IngestStats {
    std::uint64_t read = 0;
    std::uint64_t kept = 0;
    std::uint64_t deduped = 0;
    std::uint64_t non_english = 0;
    std::uint64_t unmatched = 0;
    std::uint64_t unparseable = 0;
};

struct Corpus {
    std::vector<Tweet> tweets;  // sorted by (timestamp, id)
    IngestStats stats;
};

struct CandidateSpec {
    int candidate_id = 0;  // 1 or 2
    std::vector<std::string> match_terms;  // lowercase whole tokens
};

struct DailySentiment {
    std::int64_t day = 0;  // days since epoch, UTC
    int candidate_id = 0;
    long positive = 0;
    long negative = 0;
    long tweet_count = 0;
};

enum class BothPolicy {
    CountBoth,  // a tweet mentioning both candidates counts fully for each
    DropBoth,
};

struct IngestOptions {
    bool english_only = false;
    bool strict = false;  // abort on unparseable lines instead of skipping
};

// Reads JSON Lines records {id, created_at, text, [lang]}, deduplicates by
// id keeping the first occurrence, applies the language filter (records
// with no lang field are kept), drops records matching neither candidate,
// and returns the corpus sorted by (timestamp, id). Every input line is
// accounted for in exactly one stats bucket. Throws DataError if the
// resulting corpus is empty, or on any bad line in strict mode.
Corpus ingest_tweets(std::istream& in, const std::vector<CandidateSpec>& specs,
                     const IngestOptions& options = {});

// Candidate ids whose match terms appear as whole tokens of the text.
std::vector<int> match_candidates(const Tweet& tweet,
                                  const std::vector<CandidateSpec>& specs);

// Per (UTC day, candidate) sums of positive/negative scores and tweet
// counts. Rows sorted by (day, candidate); days with no tweets omitted.
// threads > 1 scores tweets in parallel; aggregation order is fixed so
// the result is identical to the single-threaded one.
std::vector<DailySentiment> bucket_by_day(const Corpus& corpus,
                                          const Lexicon& lexicon,
                                          const std::vector<CandidateSpec>& specs,
                                          BothPolicy both_policy = BothPolicy::CountBoth,
                                          bool phrase_mode = false,
                                          unsigned threads = 1);

// CSV with header `date,candidate,positive,negative,tweet_count`.
std::string daily_sentiment_csv(const std::vector<DailySentiment>& rows);

}  // namespace sentivote
