#pragma once

#include <stdexcept>
#include <string>

namespace sbs {

// Invalid or inconsistent configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Any failure while processing data (CLI exit code 1).
class RuntimeError : public std::runtime_error {
public:
    explicit RuntimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Corpus parsing failure; carries the offending record number
// (record 1 is the header row).
class CorpusError : public RuntimeError {
public:
    CorpusError(std::size_t record, const std::string& msg)
        : RuntimeError("record " + std::to_string(record) + ": " + msg),
          record_(record) {}

    std::size_t record() const { return record_; }

private:
    std::size_t record_;
};

// Malformed network file; carries the offending line number.
class NetworkFileError : public RuntimeError {
public:
    NetworkFileError(std::size_t line, const std::string& msg)
        : RuntimeError("line " + std::to_string(line) + ": " + msg),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace sbs
