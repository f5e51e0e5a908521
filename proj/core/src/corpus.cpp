#include "sentivote/corpus.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "sentivote/calendar.hpp"
#include "sentivote/errors.hpp"

namespace sentivote {

namespace {

std::optional<Tweet> parse_record(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("id") || !j["id"].is_string()) return std::nullopt;
    if (!j.contains("created_at") || !j["created_at"].is_string()) return std::nullopt;
    if (!j.contains("text") || !j["text"].is_string()) return std::nullopt;

    Tweet t;
    t.id = j["id"].get<std::string>();
    t.text = j["text"].get<std::string>();
    if (t.id.empty()) return std::nullopt;
    // text must be nonempty after trimming
    if (t.text.find_first_not_of(" \t\r\n") == std::string::npos) return std::nullopt;
    const auto ts = calendar::parse_rfc3339(j["created_at"].get<std::string>());
    if (!ts) return std::nullopt;
    t.timestamp = *ts;
    if (j.contains("lang")) {
        if (!j["lang"].is_string()) return std::nullopt;
        t.lang = j["lang"].get<std::string>();
    }
    return t;
}

}  // namespace

std::vector<int> match_candidates(const Tweet& tweet,
                                  const std::vector<CandidateSpec>& specs) {
    const auto tokens = tokenize(tweet.text);
    const std::unordered_set<std::string> token_set(tokens.begin(), tokens.end());
    std::vector<int> matched;
    for (const auto& spec : specs) {
        for (const auto& term : spec.match_terms) {
            if (token_set.count(term)) {
                matched.push_back(spec.candidate_id);
                break;
            }
        }
    }
    return matched;
}

Corpus ingest_tweets(std::istream& in, const std::vector<CandidateSpec>& specs,
                     const IngestOptions& options) {
    Corpus corpus;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;  // blank lines are not records
        ++corpus.stats.read;
        auto tweet = parse_record(line);
        if (!tweet) {
            if (options.strict) {
                throw DataError("unparseable tweet record at line " +
                                std::to_string(line_no));
            }
            ++corpus.stats.unparseable;
            continue;
        }
        if (!seen_ids.insert(tweet->id).second) {
            ++corpus.stats.deduped;
            continue;
        }
        if (options.english_only && tweet->lang && *tweet->lang != "en") {
            ++corpus.stats.non_english;
            continue;
        }
        if (match_candidates(*tweet, specs).empty()) {
            ++corpus.stats.unmatched;
            continue;
        }
        ++corpus.stats.kept;
        corpus.tweets.push_back(std::move(*tweet));
    }
    if (corpus.tweets.empty()) {
        throw DataError("empty corpus: no tweet survived ingestion (read " +
                        std::to_string(corpus.stats.read) + ")");
    }
    std::sort(corpus.tweets.begin(), corpus.tweets.end(),
              [](const Tweet& a, const Tweet& b) {
                  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                  return a.id < b.id;
              });
    return corpus;
}

std::vector<DailySentiment> bucket_by_day(const Corpus& corpus, const Lexicon& lexicon,
                                          const std::vector<CandidateSpec>& specs,
                                          BothPolicy both_policy, bool phrase_mode,
                                          unsigned threads) {
    if (corpus.tweets.empty()) return {};

    const std::size_t n = corpus.tweets.size();
    std::vector<SentimentScore> scores(n);
    std::vector<std::vector<int>> matches(n);

    auto score_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            scores[i] = score_text(lexicon, corpus.tweets[i].text, phrase_mode);
            matches[i] = match_candidates(corpus.tweets[i], specs);
        }
    };
    if (threads <= 1 || n < 2) {
        score_range(0, n);
    } else {
        const unsigned n_workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
        std::vector<std::thread> workers;
        const std::size_t chunk = (n + n_workers - 1) / n_workers;
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            workers.emplace_back(score_range, begin, end);
        }
        for (auto& t : workers) t.join();
    }

    // sequential aggregation in corpus order: integer sums, thread-count
    // independent by construction
    std::map<std::pair<std::int64_t, int>, DailySentiment> buckets;
    for (std::size_t i = 0; i < n; ++i) {
        if (both_policy == BothPolicy::DropBoth && matches[i].size() > 1) continue;
        const std::int64_t day = calendar::epoch_day(corpus.tweets[i].timestamp);
        for (int candidate : matches[i]) {
            auto& row = buckets[{day, candidate}];
            row.day = day;
            row.candidate_id = candidate;
            row.positive += scores[i].positive;
            row.negative += scores[i].negative;
            row.tweet_count += 1;
        }
    }
    std::vector<DailySentiment> out;
    out.reserve(buckets.size());
    for (auto& [key, row] : buckets) out.push_back(row);
    return out;
}

std::string daily_sentiment_csv(const std::vector<DailySentiment>& rows) {
    std::ostringstream out;
    out << "date,candidate,positive,negative,tweet_count\n";
    for (const auto& r : rows) {
        out << calendar::format_day(r.day) << ',' << r.candidate_id << ',' << r.positive
            << ',' << r.negative << ',' << r.tweet_count << '\n';
    }
    return out.str();
}

}  // namespace sentivote
