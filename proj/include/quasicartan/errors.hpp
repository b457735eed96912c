#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quasicartan {

/// Malformed matrix input. Line and column are 1-based; column 0 means the
/// whole line (or the JSON document) is at fault.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(format(line, column, what)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& what) {
        std::string where = "line " + std::to_string(line);
        if (column != 0) where += ", column " + std::to_string(column);
        return where + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// An operation was called on a matrix outside its domain, e.g. positivity
/// of a matrix that is not symmetric by signs.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The companion search exhausted its budget without a decision.
class SearchCapExceeded : public std::runtime_error {
public:
    explicit SearchCapExceeded(std::uint64_t cap)
        : std::runtime_error("undecided: companion search cap of " + std::to_string(cap) +
                             " assignments exceeded"),
          cap_(cap) {}

    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
};

/// A brute-force reference routine was asked for a matrix above its size limit.
class OracleLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace quasicartan
