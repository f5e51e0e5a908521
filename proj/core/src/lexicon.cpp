#include "sentivote/lexicon.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sentivote/errors.hpp"

namespace sentivote {

namespace {

bool is_token_char(unsigned char c) {
    // non-ASCII bytes count as letters so UTF-8 sequences stay whole
    return std::isalnum(c) || c == '\'' || c >= 0x80;
}

std::string to_lower_ascii(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

}  // namespace

Lexicon Lexicon::from_stream(std::istream& in) {
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw DataError("lexicon line " + std::to_string(line_no) +
                            ": expected `term<TAB>valence`, got `" + line + "`");
        }
        const std::string term = to_lower_ascii(line.substr(0, tab));
        const std::string valence_str = line.substr(tab + 1);
        std::size_t pos = 0;
        int valence = 0;
        try {
            valence = std::stoi(valence_str, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != valence_str.size() || valence_str.empty()) {
            throw DataError("lexicon line " + std::to_string(line_no) +
                            ": valence `" + valence_str + "` is not an integer");
        }
        if (valence < -5 || valence > 5) {
            throw DataError("lexicon line " + std::to_string(line_no) + ": valence " +
                            std::to_string(valence) + " outside [-5, 5]");
        }
        auto [it, inserted] = lex.entries_.emplace(term, valence);
        if (!inserted) {
            throw DataError("lexicon line " + std::to_string(line_no) +
                            ": duplicate term `" + term + "`");
        }
        if (term.find(' ') != std::string::npos) ++lex.phrase_count_;
    }
    return lex;
}

Lexicon Lexicon::from_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_stream(in);
}

Lexicon Lexicon::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open lexicon file " + path);
    return from_stream(in);
}

std::optional<int> Lexicon::valence(std::string_view term) const {
    const auto it = entries_.find(std::string(term));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (is_token_char(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

SentimentScore score_tokens(const Lexicon& lexicon,
                            const std::vector<std::string>& tokens, bool phrase_mode) {
    SentimentScore score;
    auto add = [&](int valence, int n_tokens) {
        if (valence > 0) score.positive += valence;
        if (valence < 0) score.negative -= valence;
        score.matched_tokens += n_tokens;
    };
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (phrase_mode && i + 1 < tokens.size()) {
            if (auto v = lexicon.valence(tokens[i] + " " + tokens[i + 1])) {
                add(*v, 2);
                ++i;
                continue;
            }
        }
        if (auto v = lexicon.valence(tokens[i])) add(*v, 1);
    }
    score.net = score.positive - score.negative;
    return score;
}

SentimentScore score_text(const Lexicon& lexicon, std::string_view text,
                          bool phrase_mode) {
    return score_tokens(lexicon, tokenize(text), phrase_mode);
}

}  // namespace sentivote
