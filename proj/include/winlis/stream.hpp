#pragma once

#include "winlis/queries.hpp"
#include "winlis/window.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace winlis::stream {

enum class QueryKind {
    length,
    enumerate_all,
    max_weight,
    min_weight,
    max_gap,
    min_gap,
    max_width,
    min_width,
    slis,
    rlis,
};

// Maps the command-line spelling ("length", "enumerate", "max-weight", ...)
// to a kind, or nullopt for anything else. query_kind_name inverts it.
std::optional<QueryKind> parse_query_kind(std::string_view name);
std::string_view query_kind_name(QueryKind kind);

enum class InputFormat { plain, csv };

struct RunConfig {
    std::size_t window = 0;
    QueryKind query = QueryKind::length;
    double slope = 0.0;       // lower bound for slis
    bool has_slope = false;   // slis requires it; everything else rejects it
    RangeBounds range;        // gap bounds for rlis
    bool has_range = false;   // rlis requires it; everything else rejects it
    InputFormat format = InputFormat::plain;
    std::size_t column = 1;   // 1-based csv column holding the value
    bool emit_warmup = false; // report before the window first fills
    bool oracle_check = false;
    bool benchmark = false;   // maintenance throughput only, no reports
};

// Empty when the configuration is usable, otherwise a description of the
// first problem found.
std::string validate(const RunConfig& config);

// Input rejection with the 1-based line it happened on.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Pulls one finite value per data line. Blank lines are skipped in both
// formats; csv lines split on commas and the configured column is read.
// Throws ParseError on malformed or non-finite values.
class ValueReader {
public:
    ValueReader(std::istream& input, InputFormat format, std::size_t column);
    std::optional<double> next();
    std::size_t line() const { return line_; }

private:
    std::istream& input_;
    InputFormat format_;
    std::size_t column_;
    std::size_t line_ = 0;
};

// Shortest decimal form that parses back to exactly the same double.
std::string render_number(double value);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitOracle = 3;

// Streams values through the window and writes one JSON record per slide
// (once the window is full, or from the first item with emit_warmup) to
// `records`. Failures are described on `diagnostics`. Returns the exit
// code: 0 success, 1 bad configuration, 2 bad input, 3 oracle mismatch.
int run(const RunConfig& config, std::istream& input, std::ostream& records,
        std::ostream& diagnostics);

}  // namespace winlis::stream
