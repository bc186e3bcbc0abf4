#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "sbs/timeutil.hpp"

namespace sbs {

// One timestamped, weighted text unit of the corpus.
struct Document {
    std::string id;
    Timestamp timestamp = 0;
    std::string source;
    double weight = 1.0; // >= 0; a zero-weight document contributes nothing
    std::string text;

    bool operator==(const Document&) const = default;
};

// A brand as a canonical node name plus the surface forms that map to it.
struct BrandSpec {
    std::string canonical_id;
    std::vector<std::string> aliases; // nonempty; possibly multi-word
};

enum class Standardization { ZScore, MinMax, MedianIqr };

struct AnalysisConfig {
    std::string language = "english";
    std::vector<TimeInterval> intervals; // non-overlapping, ascending
    int cooc_range = 7;                  // max token distance, >= 1
    double min_cooc = 0.0;               // edge weight filter threshold
    double text_fraction = 1.0;          // leading fraction of tokens, in (0, 1]
    Standardization standardization = Standardization::ZScore;
    std::vector<BrandSpec> brands;
};

struct TimeBucket {
    TimeInterval interval;
    std::vector<Document> documents; // timestamps all inside interval
};

struct BucketResult {
    std::vector<TimeBucket> buckets; // follows interval order
    std::size_t dropped = 0;         // documents outside every interval
};

// Reads a corpus CSV with header `id,date,source,weight,text` (the weight
// column may be omitted, defaulting to 1.0). Dates are ISO 8601, UTC.
// Throws CorpusError on malformed rows, duplicate ids or negative weights.
std::vector<Document> parse_corpus(const std::filesystem::path& path);

// Writes documents back out in the same CSV schema. parse_corpus of the
// result reproduces every field value.
void write_corpus_csv(const std::vector<Document>& docs,
                      const std::filesystem::path& path);

// First ceil(fraction * tokens.size()) tokens; fraction 1 is the identity.
std::vector<std::string> truncate_text(const std::vector<std::string>& tokens,
                                       double fraction);

// Places each document into the unique interval containing its timestamp;
// documents outside every interval are dropped and counted.
BucketResult bucket_documents(const std::vector<Document>& docs,
                              const std::vector<TimeInterval>& intervals);

} // namespace sbs
