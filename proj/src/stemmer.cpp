#include "sbs/stemmer.hpp"

#include <array>
#include <cstddef>

namespace sbs {
namespace {

bool is_consonant(const std::string& w, std::size_t i) {
    switch (w[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_consonant(w, i - 1);
        default:
            return true;
    }
}

// The measure m in the [C](VC)^m[V] decomposition of w[0..len).
int measure(const std::string& w, std::size_t len) {
    int m = 0;
    std::size_t i = 0;
    while (i < len && is_consonant(w, i)) ++i;
    while (i < len) {
        while (i < len && !is_consonant(w, i)) ++i;
        if (i >= len) break;
        ++m;
        while (i < len && is_consonant(w, i)) ++i;
    }
    return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool ends_double_consonant(const std::string& w) {
    std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: stem ends consonant-vowel-consonant and the final consonant
// is not w, x or y.
bool ends_cvc(const std::string& w, std::size_t len) {
    if (len < 3) return false;
    if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) ||
        !is_consonant(w, len - 1))
        return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
    int min_measure; // condition: m(stem) > min_measure
};

// Applies the first rule whose suffix matches; rules are ordered so the
// first match is the longest one. Returns true if a suffix matched
// (whether or not the measure condition allowed the rewrite).
template <std::size_t N>
bool apply_rules(std::string& w, const std::array<Rule, N>& rules) {
    for (const Rule& rule : rules) {
        if (!ends_with(w, rule.suffix)) continue;
        std::size_t stem_len = w.size() - rule.suffix.size();
        if (measure(w, stem_len) > rule.min_measure) {
            w.resize(stem_len);
            w.append(rule.replacement);
        }
        return true;
    }
    return false;
}

void step_1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ies")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ss")) {
        // unchanged
    } else if (ends_with(w, "s")) {
        w.resize(w.size() - 1);
    }
}

void step_1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
        return;
    }
    bool removed = false;
    if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
        w.resize(w.size() - 2);
        removed = true;
    } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
        w.resize(w.size() - 3);
        removed = true;
    }
    if (!removed) return;

    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
        w.push_back('e');
    }
}

void step_1c(std::string& w) {
    if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

constexpr std::array<Rule, 20> kStep2 = {{
    {"ational", "ate", 0}, {"tional", "tion", 0}, {"enci", "ence", 0},
    {"anci", "ance", 0},   {"izer", "ize", 0},    {"abli", "able", 0},
    {"alli", "al", 0},     {"entli", "ent", 0},   {"eli", "e", 0},
    {"ousli", "ous", 0},   {"ization", "ize", 0}, {"ation", "ate", 0},
    {"ator", "ate", 0},    {"alism", "al", 0},    {"iveness", "ive", 0},
    {"fulness", "ful", 0}, {"ousness", "ous", 0}, {"aliti", "al", 0},
    {"iviti", "ive", 0},   {"biliti", "ble", 0},
}};

constexpr std::array<Rule, 7> kStep3 = {{
    {"icate", "ic", 0}, {"ative", "", 0}, {"alize", "al", 0},
    {"iciti", "ic", 0}, {"ical", "ic", 0}, {"ful", "", 0},
    {"ness", "", 0},
}};

constexpr std::array<Rule, 18> kStep4 = {{
    {"al", "", 1},   {"ance", "", 1}, {"ence", "", 1}, {"er", "", 1},
    {"ic", "", 1},   {"able", "", 1}, {"ible", "", 1}, {"ant", "", 1},
    {"ement", "", 1}, {"ment", "", 1}, {"ent", "", 1},  {"ou", "", 1},
    {"ism", "", 1},  {"ate", "", 1},  {"iti", "", 1},  {"ous", "", 1},
    {"ive", "", 1},  {"ize", "", 1},
}};

void step_4(std::string& w) {
    // "ion" sits between "ent" and "ou" in the published table and carries
    // the extra stem-ends-in-s-or-t condition, so it is handled inline.
    for (const Rule& rule : kStep4) {
        if (rule.suffix == "ou" && ends_with(w, "ion")) {
            std::size_t stem_len = w.size() - 3;
            if (measure(w, stem_len) > 1 && stem_len > 0 &&
                (w[stem_len - 1] == 's' || w[stem_len - 1] == 't'))
                w.resize(stem_len);
            return;
        }
        if (!ends_with(w, rule.suffix)) continue;
        std::size_t stem_len = w.size() - rule.suffix.size();
        if (measure(w, stem_len) > rule.min_measure) w.resize(stem_len);
        return;
    }
}

void step_5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    std::size_t stem_len = w.size() - 1;
    int m = measure(w, stem_len);
    if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) w.resize(stem_len);
}

void step_5b(std::string& w) {
    if (measure(w, w.size()) > 1 && ends_double_consonant(w) && w.back() == 'l')
        w.pop_back();
}

} // namespace

std::string porter_stem(std::string_view word) {
    std::string w(word);
    if (w.size() < 3) return w;
    for (char c : w)
        if (c < 'a' || c > 'z') return w;

    step_1a(w);
    step_1b(w);
    step_1c(w);
    apply_rules(w, kStep2);
    apply_rules(w, kStep3);
    step_4(w);
    step_5a(w);
    step_5b(w);
    return w;
}

} // namespace sbs
