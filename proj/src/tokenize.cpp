#include <algorithm>
#include <iterator>
#include <unordered_set>

#include "ppgk/ingest.hpp"

namespace ppgk {

namespace {

// English stopwords (the NLTK list, alphabetic forms only). Version 1; any
// edit changes generated attributes and must bump kStopwordListVersion.
constexpr std::string_view kStopwords[] = {
    "a",        "about",   "above",      "after",   "again",     "against",  "ain",
    "all",      "am",      "an",         "and",     "any",       "are",      "aren",
    "as",       "at",      "be",         "because", "been",      "before",   "being",
    "below",    "between", "both",       "but",     "by",        "can",      "couldn",
    "d",        "did",     "didn",       "do",      "does",      "doesn",    "doing",
    "don",      "down",    "during",     "each",    "few",       "for",      "from",
    "further",  "had",     "hadn",       "has",     "hasn",      "have",     "haven",
    "having",   "he",      "her",        "here",    "hers",      "herself",  "him",
    "himself",  "his",     "how",        "i",       "if",        "in",       "into",
    "is",       "isn",     "it",         "its",     "itself",    "just",     "ll",
    "m",        "ma",      "me",         "mightn",  "more",      "most",     "mustn",
    "my",       "myself",  "needn",      "no",      "nor",       "not",      "now",
    "o",        "of",      "off",        "on",      "once",      "only",     "or",
    "other",    "our",     "ours",       "ourselves", "out",     "over",     "own",
    "re",       "s",       "same",       "shan",    "she",       "should",   "shouldn",
    "so",       "some",    "such",       "t",       "than",      "that",     "the",
    "their",    "theirs",  "them",       "themselves", "then",   "there",    "these",
    "they",     "this",    "those",      "through", "to",        "too",      "under",
    "until",    "up",      "ve",         "very",    "was",       "wasn",     "we",
    "were",     "weren",   "what",       "when",    "where",     "which",    "while",
    "who",      "whom",    "why",        "will",    "with",      "won",      "wouldn",
    "y",        "you",     "your",       "yours",   "yourself",  "yourselves",
};

bool is_word_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

std::size_t code_points(std::string_view s) {
    return std::size_t(std::count_if(s.begin(), s.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

} // namespace

std::span<const std::string_view> stopwords() { return kStopwords; }

bool is_stopword(std::string_view token) {
    return std::binary_search(std::begin(kStopwords), std::end(kStopwords), token);
}

std::vector<std::string> tokenize_title(std::string_view title) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    std::size_t i = 0;
    while (i < title.size()) {
        while (i < title.size() && !is_word_byte(static_cast<unsigned char>(title[i])))
            ++i;
        std::size_t j = i;
        while (j < title.size() && is_word_byte(static_cast<unsigned char>(title[j])))
            ++j;
        if (j > i) {
            std::string tok(title.substr(i, j - i));
            for (char &c : tok)
                if (c >= 'A' && c <= 'Z')
                    c = char(c - 'A' + 'a');
            if (code_points(tok) >= 3 && !is_stopword(tok) && seen.insert(tok).second)
                out.push_back(std::move(tok));
        }
        i = j;
    }
    return out;
}

} // namespace ppgk
