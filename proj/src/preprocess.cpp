#include "sbs/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "sbs/errors.hpp"
#include "sbs/stemmer.hpp"

namespace sbs {
namespace {

// NLTK's English list; the same content ships as data/stopwords_english.txt.
constexpr const char* kEnglishStopwords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
    "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
    "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
    "hers", "herself", "it", "it's", "its", "itself", "they", "them",
    "their", "theirs", "themselves", "what", "which", "who", "whom",
    "this", "that", "that'll", "these", "those", "am", "is", "are", "was",
    "were", "be", "been", "being", "have", "has", "had", "having", "do",
    "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or",
    "because", "as", "until", "while", "of", "at", "by", "for", "with",
    "about", "against", "between", "into", "through", "during", "before",
    "after", "above", "below", "to", "from", "up", "down", "in", "out",
    "on", "off", "over", "under", "again", "further", "then", "once",
    "here", "there", "when", "where", "why", "how", "all", "any", "both",
    "each", "few", "more", "most", "other", "some", "such", "no", "nor",
    "not", "only", "own", "same", "so", "than", "too", "very", "s", "t",
    "can", "will", "just", "don", "don't", "should", "should've", "now",
    "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't",
    "couldn", "couldn't", "didn", "didn't", "doesn", "doesn't", "hadn",
    "hadn't", "hasn", "hasn't", "haven", "haven't", "isn", "isn't", "ma",
    "mightn", "mightn't", "mustn", "mustn't", "needn", "needn't", "shan",
    "shan't", "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't",
    "won", "won't", "wouldn", "wouldn't",
};

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    return out;
}

bool is_word_byte(unsigned char c) {
    if (c >= 0x80) return true; // keep UTF-8 sequences intact
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
}

bool starts_url(std::string_view s) {
    auto prefix = [&](std::string_view p) {
        if (s.size() < p.size()) return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            char c = s[i];
            if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
            if (c != p[i]) return false;
        }
        return true;
    };
    return prefix("http://") || prefix("https://") || prefix("ftp://") ||
           prefix("www.");
}

} // namespace

Language parse_language(std::string_view tag) {
    if (ascii_lower(tag) == "english") return Language::English;
    throw ConfigError("unsupported language \"" + std::string(tag) + "\"");
}

StopwordList StopwordList::builtin_english() {
    StopwordList list;
    for (const char* w : kEnglishStopwords) list.words_.insert(w);
    return list;
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw RuntimeError("cannot open stopword file: " + path.string());
    StopwordList list;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        list.words_.insert(ascii_lower(line.substr(b, e - b + 1)));
    }
    return list;
}

bool StopwordList::contains(std::string_view word) const {
    return words_.count(ascii_lower(word)) > 0;
}

std::string clean_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    bool pending_space = false;
    auto put_space = [&] {
        if (!out.empty()) pending_space = true;
    };
    while (i < raw.size()) {
        unsigned char c = static_cast<unsigned char>(raw[i]);
        if (std::isspace(c)) {
            put_space();
            ++i;
            continue;
        }
        if (starts_url(raw.substr(i))) {
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            put_space();
            continue;
        }
        if (is_word_byte(c)) {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            out.push_back(static_cast<char>(c));
        } else {
            put_space();
        }
        ++i;
    }
    return out;
}

std::vector<std::string> tokenize_and_normalize(std::string_view clean,
                                                const StopwordList& stopwords,
                                                Language language) {
    (void)language; // english only; validated at config time
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < clean.size()) {
        while (i < clean.size() && clean[i] == ' ') ++i;
        std::size_t start = i;
        while (i < clean.size() && clean[i] != ' ') ++i;
        if (i == start) continue;
        std::string word = ascii_lower(clean.substr(start, i - start));
        if (stopwords.contains(word)) continue;
        tokens.push_back(porter_stem(word));
    }
    return tokens;
}

std::vector<NormalizedBrand> normalize_brands(const std::vector<BrandSpec>& brands,
                                              const StopwordList& stopwords,
                                              Language language) {
    std::vector<NormalizedBrand> out;
    std::map<std::vector<std::string>, std::string> claimed;
    for (const BrandSpec& brand : brands) {
        if (brand.canonical_id.empty())
            throw ConfigError("brand with empty canonical id");
        if (brand.aliases.empty())
            throw ConfigError("brand \"" + brand.canonical_id + "\" has no aliases");
        NormalizedBrand nb;
        nb.canonical_id = brand.canonical_id;
        for (const std::string& alias : brand.aliases) {
            auto tokens = tokenize_and_normalize(clean_text(alias), stopwords, language);
            if (tokens.empty())
                throw ConfigError("alias \"" + alias + "\" of brand \"" +
                                  brand.canonical_id + "\" normalizes to nothing");
            auto [it, inserted] = claimed.emplace(tokens, brand.canonical_id);
            if (!inserted && it->second != brand.canonical_id)
                throw ConfigError("alias \"" + alias + "\" collides between brands \"" +
                                  it->second + "\" and \"" + brand.canonical_id + "\"");
            if (inserted) nb.alias_tokens.push_back(std::move(tokens));
        }
        out.push_back(std::move(nb));
    }
    return out;
}

std::vector<std::string> collapse_brand_aliases(
    const std::vector<std::string>& tokens,
    const std::vector<NormalizedBrand>& brands) {
    // All alias sequences, longest first so the longest n-gram wins.
    std::vector<std::pair<const std::vector<std::string>*, const std::string*>> seqs;
    for (const NormalizedBrand& brand : brands)
        for (const auto& alias : brand.alias_tokens)
            seqs.emplace_back(&alias, &brand.canonical_id);
    std::stable_sort(seqs.begin(), seqs.end(),
                     [](const auto& a, const auto& b) {
                         return a.first->size() > b.first->size();
                     });

    std::vector<std::string> out;
    out.reserve(tokens.size());
    std::size_t i = 0;
    while (i < tokens.size()) {
        const std::string* matched = nullptr;
        std::size_t matched_len = 0;
        for (const auto& [alias, id] : seqs) {
            std::size_t n = alias->size();
            if (i + n > tokens.size()) continue;
            if (std::equal(alias->begin(), alias->end(), tokens.begin() + i)) {
                matched = id;
                matched_len = n;
                break;
            }
        }
        if (matched) {
            out.push_back(*matched);
            i += matched_len;
        } else {
            out.push_back(tokens[i]);
            ++i;
        }
    }
    return out;
}

TokenStream preprocess_document(const Document& doc, const PreprocessContext& ctx) {
    TokenStream stream;
    stream.doc_id = doc.id;
    stream.weight = doc.weight;
    auto tokens = tokenize_and_normalize(clean_text(doc.text), ctx.stopwords,
                                         ctx.language);
    tokens = collapse_brand_aliases(tokens, ctx.brands);
    stream.tokens = truncate_text(tokens, ctx.text_fraction);
    return stream;
}

} // namespace sbs
