#include "sbs/corpus.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "sbs/errors.hpp"

namespace sbs {
namespace {

// RFC 4180-style reader: quoted fields may contain commas, doubled quotes
// and newlines. Returns one record per call, or false at end of input.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& fields, std::size_t& record_no) {
        fields.clear();
        int c = in_.get();
        while (c == '\r' || c == '\n') c = in_.get(); // skip blank lines
        if (c == EOF) return false;

        record_no = ++count_;
        std::string field;
        bool quoted = false;
        for (;;) {
            if (quoted) {
                if (c == EOF)
                    throw CorpusError(record_no, "unterminated quoted field");
                if (c == '"') {
                    int peek = in_.get();
                    if (peek == '"') {
                        field.push_back('"');
                    } else {
                        quoted = false;
                        c = peek;
                        continue;
                    }
                } else {
                    field.push_back(static_cast<char>(c));
                }
            } else {
                if (c == '"' && field.empty()) {
                    quoted = true;
                } else if (c == ',') {
                    fields.push_back(std::move(field));
                    field.clear();
                } else if (c == '\n' || c == EOF) {
                    break;
                } else if (c == '\r') {
                    // swallow; treat CRLF as LF
                } else {
                    field.push_back(static_cast<char>(c));
                }
            }
            c = in_.get();
        }
        fields.push_back(std::move(field));
        return true;
    }

private:
    std::istream& in_;
    std::size_t count_ = 0;
};

bool needs_quoting(const std::string& s) {
    if (s.empty()) return false;
    if (s.front() == ' ' || s.back() == ' ') return true;
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

void write_field(std::ostream& out, const std::string& s) {
    if (!needs_quoting(s)) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << "\"\"";
        else out << c;
    }
    out << '"';
}

std::string format_weight(double w) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    return std::string(buf, end);
}

} // namespace

std::vector<Document> parse_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RuntimeError("cannot open corpus file: " + path.string());

    CsvReader reader(in);
    std::vector<std::string> fields;
    std::size_t record_no = 0;

    if (!reader.next(fields, record_no))
        throw CorpusError(1, "empty corpus file");

    bool has_weight;
    if (fields == std::vector<std::string>{"id", "date", "source", "weight", "text"}) {
        has_weight = true;
    } else if (fields == std::vector<std::string>{"id", "date", "source", "text"}) {
        has_weight = false;
    } else {
        throw CorpusError(1, "unexpected header, want id,date,source[,weight],text");
    }
    const std::size_t ncols = has_weight ? 5 : 4;

    std::vector<Document> docs;
    std::unordered_set<std::string> seen_ids;
    while (reader.next(fields, record_no)) {
        if (fields.size() != ncols)
            throw CorpusError(record_no, "expected " + std::to_string(ncols) +
                                             " fields, got " + std::to_string(fields.size()));
        Document doc;
        doc.id = fields[0];
        if (doc.id.empty()) throw CorpusError(record_no, "empty id");
        if (!seen_ids.insert(doc.id).second)
            throw CorpusError(record_no, "duplicate id \"" + doc.id + "\"");

        auto ts = parse_iso8601(fields[1]);
        if (!ts) throw CorpusError(record_no, "bad date \"" + fields[1] + "\"");
        doc.timestamp = *ts;

        doc.source = fields[2];
        if (has_weight) {
            const std::string& w = fields[3];
            if (w.empty()) {
                doc.weight = 1.0;
            } else {
                double value = 0.0;
                auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
                if (ec != std::errc{} || p != w.data() + w.size() || std::isnan(value))
                    throw CorpusError(record_no, "bad weight \"" + w + "\"");
                if (value < 0.0)
                    throw CorpusError(record_no, "negative weight");
                doc.weight = value;
            }
        }
        doc.text = fields[ncols - 1];
        docs.push_back(std::move(doc));
    }
    return docs;
}

void write_corpus_csv(const std::vector<Document>& docs,
                      const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RuntimeError("cannot write corpus file: " + path.string());
    out << "id,date,source,weight,text\n";
    for (const Document& doc : docs) {
        write_field(out, doc.id);
        out << ',' << format_iso8601(doc.timestamp) << ',';
        write_field(out, doc.source);
        out << ',' << format_weight(doc.weight) << ',';
        write_field(out, doc.text);
        out << '\n';
    }
    if (!out) throw RuntimeError("write failed: " + path.string());
}

std::vector<std::string> truncate_text(const std::vector<std::string>& tokens,
                                       double fraction) {
    if (fraction >= 1.0 || tokens.empty()) return tokens;
    auto keep = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(tokens.size())));
    if (keep > tokens.size()) keep = tokens.size();
    return {tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(keep)};
}

BucketResult bucket_documents(const std::vector<Document>& docs,
                              const std::vector<TimeInterval>& intervals) {
    BucketResult result;
    result.buckets.reserve(intervals.size());
    for (const TimeInterval& iv : intervals) result.buckets.push_back({iv, {}});

    for (const Document& doc : docs) {
        bool placed = false;
        for (TimeBucket& bucket : result.buckets) {
            if (bucket.interval.contains(doc.timestamp)) {
                bucket.documents.push_back(doc);
                placed = true;
                break;
            }
        }
        if (!placed) ++result.dropped;
    }
    return result;
}

} // namespace sbs
