#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sbs/corpus.hpp"

namespace sbs {

enum class Language { English };

// Returns the language for a config tag ("english"), or throws ConfigError.
Language parse_language(std::string_view tag);

// Case-insensitive stopword lookup over surface forms.
class StopwordList {
public:
    static StopwordList builtin_english();
    // One word per line; '#' starts a comment.
    static StopwordList load(const std::filesystem::path& path);

    bool contains(std::string_view word) const;
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Ordered stemmed tokens of one document, with its weight carried through.
struct TokenStream {
    std::string doc_id;
    std::vector<std::string> tokens;
    double weight = 1.0;
};

// A brand with its aliases run through the token pipeline, ready for
// longest-match collapsing.
struct NormalizedBrand {
    std::string canonical_id;
    std::vector<std::vector<std::string>> alias_tokens;
};

// Strips URLs (scheme- or www-prefixed runs), replaces punctuation and
// special characters with spaces (digits and multi-byte UTF-8 sequences are
// kept), and collapses repeated whitespace.
std::string clean_text(std::string_view raw);

// Whitespace-split, lowercase, stopword removal on surface forms, then
// stemming. Order is preserved.
std::vector<std::string> tokenize_and_normalize(std::string_view clean,
                                                const StopwordList& stopwords,
                                                Language language);

// Runs every alias through the token pipeline and checks for collisions
// (the same normalized alias claimed by two brands) and aliases that
// normalize to nothing. Throws ConfigError.
std::vector<NormalizedBrand> normalize_brands(const std::vector<BrandSpec>& brands,
                                              const StopwordList& stopwords,
                                              Language language);

// Longest-match-first, left-to-right, non-overlapping replacement of alias
// n-grams by the owning brand's canonical id.
std::vector<std::string> collapse_brand_aliases(
    const std::vector<std::string>& tokens,
    const std::vector<NormalizedBrand>& brands);

// Everything needed to preprocess documents consistently across the run.
struct PreprocessContext {
    StopwordList stopwords;
    Language language = Language::English;
    std::vector<NormalizedBrand> brands;
    double text_fraction = 1.0;
};

// clean -> tokenize -> collapse aliases -> truncate, weight copied through.
TokenStream preprocess_document(const Document& doc, const PreprocessContext& ctx);

} // namespace sbs
