#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sentivote {

struct SentimentScore {
    int positive = 0;        // sum of positive valences
    int negative = 0;        // sum of absolute negative valences
    int net = 0;             // positive - negative
    int matched_tokens = 0;  // lexicon hits, measures coverage
};

// Immutable valence lexicon (term -> integer in [-5, +5]). Terms are
// pre-lowercased on load; multi-token phrase entries are kept and used
// only when phrase matching is requested. Safe to share across threads
// after construction.
class Lexicon {
public:
    Lexicon() = default;

    // Input is line oriented: `term<TAB>signed-decimal-integer`.
    // Blank lines are skipped. Throws DataError naming the line number
    // on malformed lines, out-of-range valences, or duplicate terms.
    static Lexicon from_stream(std::istream& in);
    static Lexicon from_string(std::string_view text);
    static Lexicon from_file(const std::string& path);

    std::optional<int> valence(std::string_view term) const;
    std::size_t size() const { return entries_.size(); }
    int phrase_count() const { return phrase_count_; }

private:
    std::unordered_map<std::string, int> entries_;
    int phrase_count_ = 0;
};

// Lowercased tokens split on any character that is not a letter, digit,
// or apostrophe. Bytes outside ASCII are treated as letters so UTF-8
// sequences stay intact. Total function, preserves input order.
std::vector<std::string> tokenize(std::string_view text);

// Unigram scoring by default; with phrase_mode, greedy longest-match
// tries the bigram at each position before falling back to the unigram.
// Unknown tokens contribute zero.
SentimentScore score_text(const Lexicon& lexicon, std::string_view text,
                          bool phrase_mode = false);

SentimentScore score_tokens(const Lexicon& lexicon,
                            const std::vector<std::string>& tokens,
                            bool phrase_mode = false);

}  // namespace sentivote
