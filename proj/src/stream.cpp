#include "winlis/stream.hpp"

#include "winlis/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

namespace winlis::stream {

namespace {

constexpr struct {
    std::string_view name;
    QueryKind kind;
} kQueryNames[] = {
    {"length", QueryKind::length},
    {"enumerate", QueryKind::enumerate_all},
    {"max-weight", QueryKind::max_weight},
    {"min-weight", QueryKind::min_weight},
    {"max-gap", QueryKind::max_gap},
    {"min-gap", QueryKind::min_gap},
    {"max-width", QueryKind::max_width},
    {"min-width", QueryKind::min_width},
    {"slis", QueryKind::slis},
    {"rlis", QueryKind::rlis},
};

std::string_view trimmed(std::string_view text)
{
    auto soft = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!text.empty() && soft(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && soft(text.back())) {
        text.remove_suffix(1);
    }
    return text;
}

std::string_view pick_csv_column(std::string_view text, std::size_t column,
                                 std::size_t line)
{
    std::size_t col = 1;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != ',') {
            continue;
        }
        if (col == column) {
            return text.substr(begin, i - begin);
        }
        ++col;
        begin = i + 1;
    }
    throw ParseError(line, "row has " + std::to_string(col - 1) +
                               " columns, need column " + std::to_string(column));
}

}  // namespace

std::optional<QueryKind> parse_query_kind(std::string_view name)
{
    for (const auto& entry : kQueryNames) {
        if (entry.name == name) {
            return entry.kind;
        }
    }
    return std::nullopt;
}

std::string_view query_kind_name(QueryKind kind)
{
    for (const auto& entry : kQueryNames) {
        if (entry.kind == kind) {
            return entry.name;
        }
    }
    return "?";
}

std::string validate(const RunConfig& config)
{
    if (config.window == 0) {
        return "window must be at least 1";
    }
    if (config.format == InputFormat::csv && config.column == 0) {
        return "column numbers start at 1";
    }
    if (config.query == QueryKind::slis) {
        if (!config.has_slope) {
            return "the slis query needs a slope";
        }
        if (!std::isfinite(config.slope) || config.slope < 0.0) {
            return "slope must be finite and non-negative";
        }
    } else if (config.has_slope) {
        return "only the slis query takes a slope";
    }
    if (config.query == QueryKind::rlis) {
        if (!config.has_range) {
            return "the rlis query needs gap ranges";
        }
        const RangeBounds& b = config.range;
        if (b.min_index_gap < 1 || b.max_index_gap < b.min_index_gap) {
            return "index gap bounds need 1 <= min <= max";
        }
        if (!std::isfinite(b.min_value_gap) || !std::isfinite(b.max_value_gap) ||
            b.min_value_gap < 0.0 || b.max_value_gap < b.min_value_gap) {
            return "value gap bounds need 0 <= min <= max, finite";
        }
    } else if (config.has_range) {
        return "only the rlis query takes gap ranges";
    }
    if (config.benchmark && config.oracle_check) {
        return "benchmark runs no queries, so there is nothing to oracle-check";
    }
    return {};
}

ValueReader::ValueReader(std::istream& input, InputFormat format, std::size_t column)
    : input_(input), format_(format), column_(column)
{
}

std::optional<double> ValueReader::next()
{
    std::string raw;
    while (std::getline(input_, raw)) {
        ++line_;
        const std::string_view text = trimmed(raw);
        if (text.empty()) {
            continue;
        }
        std::string_view token = text;
        if (format_ == InputFormat::csv) {
            token = trimmed(pick_csv_column(text, column_, line_));
        }
        double value = 0.0;
        const char* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), last, value);
        if (token.empty() || ec != std::errc{} || ptr != last) {
            throw ParseError(line_, "bad number: '" + std::string(token) + "'");
        }
        if (!std::isfinite(value)) {
            throw ParseError(line_, "non-finite value: '" + std::string(token) + "'");
        }
        return value;
    }
    return std::nullopt;
}

std::string render_number(double value)
{
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    (void)ec;
    return std::string(buffer, ptr);
}

namespace {

struct QueryOutcome {
    bool include_results = false;
    std::vector<ResultSequence> results;
    bool include_extremum = false;
    std::string extremum;  // pre-rendered number
};

QueryOutcome execute_query(const RunConfig& config, const QNList& structure)
{
    QueryOutcome out;
    switch (config.query) {
    case QueryKind::length:
        break;
    case QueryKind::enumerate_all:
        out.include_results = true;
        out.results = enumerate_all(structure);
        break;
    case QueryKind::max_weight:
    case QueryKind::min_weight: {
        out.include_results = true;
        out.results.push_back(config.query == QueryKind::max_weight
                                  ? max_weight(structure)
                                  : min_weight(structure));
        out.include_extremum = true;
        out.extremum = render_number(out.results.front().weight());
        break;
    }
    case QueryKind::max_gap:
    case QueryKind::min_gap: {
        GapResults found = config.query == QueryKind::max_gap ? max_gap(structure)
                                                              : min_gap(structure);
        out.include_results = true;
        out.results = std::move(found.sequences);
        out.include_extremum = true;
        out.extremum = render_number(found.gap);
        break;
    }
    case QueryKind::max_width:
    case QueryKind::min_width: {
        WidthResults found = config.query == QueryKind::max_width
                                 ? max_width(structure)
                                 : min_width(structure);
        out.include_results = true;
        out.results = std::move(found.sequences);
        out.include_extremum = true;
        out.extremum = std::to_string(found.width);
        break;
    }
    case QueryKind::slis: {
        out.include_results = true;
        if (std::optional<ResultSequence> chain = slis(structure, config.slope)) {
            out.results.push_back(std::move(*chain));
        }
        break;
    }
    case QueryKind::rlis: {
        out.include_results = true;
        if (std::optional<ResultSequence> chain = rlis(structure, config.range)) {
            out.results.push_back(std::move(*chain));
        }
        break;
    }
    }
    return out;
}

void append_sequences(std::string& out, const std::vector<ResultSequence>& results)
{
    out += "\"results\":[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += '[';
        const std::vector<SequenceItem>& items = results[i].items;
        for (std::size_t j = 0; j < items.size(); ++j) {
            if (j) {
                out += ',';
            }
            out += '[';
            out += std::to_string(items[j].position);
            out += ',';
            out += render_number(items[j].value);
            out += ']';
        }
        out += ']';
    }
    out += ']';
}

std::string render_record(std::size_t window_index, const QNList& structure,
                          const QueryOutcome& outcome, double query_us)
{
    std::string out = "{\"window_index\":";
    out += std::to_string(window_index);
    out += ",\"start_position\":";
    out += std::to_string(structure.oldest()->position);
    out += ",\"end_position\":";
    out += std::to_string(structure.last_position());
    out += ",\"lis_length\":";
    out += std::to_string(structure.list_count());
    if (outcome.include_results) {
        out += ',';
        append_sequences(out, outcome.results);
    }
    if (outcome.include_extremum) {
        out += ",\"extremum_value\":";
        out += outcome.extremum;
    }
    out += ",\"query_us\":";
    out += render_number(query_us);
    out += '}';
    return out;
}

oracle::Sequence window_sequence(const QNList& structure)
{
    oracle::Sequence seq;
    seq.reserve(structure.size());
    for (const Node* node : structure.arrival_order()) {
        seq.push_back(oracle::Item{node->value, node->position});
    }
    return seq;
}

std::string chain_defect(const ResultSequence& chain, const oracle::Sequence& seq,
                         int want_length)
{
    if (static_cast<int>(chain.items.size()) != want_length) {
        return "result length differs from the reference LIS length";
    }
    const SequenceItem* prev = nullptr;
    for (const SequenceItem& item : chain.items) {
        bool member = false;
        for (const oracle::Item& candidate : seq) {
            if (candidate.position == item.position) {
                member = candidate.value == item.value;
                break;
            }
        }
        if (!member) {
            return "result item is not in the window";
        }
        if (prev && (prev->position >= item.position || prev->value > item.value)) {
            return "result is not a rising subsequence";
        }
        prev = &item;
    }
    return {};
}

bool chains_distinct(const std::vector<ResultSequence>& results)
{
    std::vector<std::vector<std::int64_t>> keys;
    keys.reserve(results.size());
    for (const ResultSequence& chain : results) {
        std::vector<std::int64_t> key;
        key.reserve(chain.items.size());
        for (const SequenceItem& item : chain.items) {
            key.push_back(item.position);
        }
        keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

oracle::Item as_oracle_item(const SequenceItem& item)
{
    return oracle::Item{item.value, item.position};
}

// Recomputes the report against the quadratic reference. Empty on
// agreement, otherwise the first discrepancy. Validity plus an exact
// attainment count stands in for set comparison so the check stays
// usable when the LIS family is too large to enumerate.
std::string verify_report(const RunConfig& config, const QNList& structure,
                          const QueryOutcome& outcome)
{
    const oracle::Sequence seq = window_sequence(structure);
    const int reference_length = oracle::dp_table(seq).lis_length;
    if (structure.list_count() != reference_length) {
        return "LIS length differs from the reference";
    }
    for (const ResultSequence& chain : outcome.results) {
        const std::string defect = chain_defect(chain, seq, reference_length);
        if (!defect.empty()) {
            return defect;
        }
    }
    if (!chains_distinct(outcome.results)) {
        return "duplicate result sequences";
    }
    const std::size_t k = outcome.results.size();
    switch (config.query) {
    case QueryKind::length:
        break;
    case QueryKind::enumerate_all:
        if (oracle::dp_count_lis(seq, k + 1) != k) {
            return "enumeration count differs from the reference";
        }
        break;
    case QueryKind::max_weight:
    case QueryKind::min_weight: {
        const auto extremum = config.query == QueryKind::max_weight
                                  ? oracle::Extremum::largest
                                  : oracle::Extremum::smallest;
        if (k != 1 ||
            outcome.results.front().weight() != oracle::dp_extreme_weight(seq, extremum)) {
            return "weight differs from the reference extremum";
        }
        break;
    }
    case QueryKind::max_gap:
    case QueryKind::min_gap: {
        const auto extremum = config.query == QueryKind::max_gap
                                  ? oracle::Extremum::largest
                                  : oracle::Extremum::smallest;
        const double best = oracle::dp_extreme_gap(seq, extremum);
        for (const ResultSequence& chain : outcome.results) {
            if (chain.gap() != best) {
                return "gap differs from the reference extremum";
            }
        }
        if (oracle::dp_count_extreme_gap(seq, extremum, k + 1) != k) {
            return "count of extreme-gap sequences differs from the reference";
        }
        break;
    }
    case QueryKind::max_width:
    case QueryKind::min_width: {
        const auto extremum = config.query == QueryKind::max_width
                                  ? oracle::Extremum::largest
                                  : oracle::Extremum::smallest;
        const std::int64_t best = oracle::dp_extreme_width(seq, extremum);
        for (const ResultSequence& chain : outcome.results) {
            if (chain.width() != best) {
                return "width differs from the reference extremum";
            }
        }
        if (oracle::dp_count_extreme_width(seq, extremum, k + 1) != k) {
            return "count of extreme-width sequences differs from the reference";
        }
        break;
    }
    case QueryKind::slis:
    case QueryKind::rlis: {
        const RangeBounds& b = config.range;
        const double slope = config.slope;
        oracle::PairPredicate pair_ok;
        if (config.query == QueryKind::slis) {
            pair_ok = [slope](const oracle::Item& from, const oracle::Item& to) {
                return oracle::slope_pair_ok(from, to, slope);
            };
        } else {
            pair_ok = [b](const oracle::Item& from, const oracle::Item& to) {
                return oracle::range_pair_ok(from, to, b.min_index_gap, b.max_index_gap,
                                             b.min_value_gap, b.max_value_gap);
            };
        }
        if (k == 0) {
            if (oracle::dp_longest_feasible(seq, pair_ok) >= reference_length) {
                return "a constrained LIS exists but none was reported";
            }
            break;
        }
        const std::vector<SequenceItem>& items = outcome.results.front().items;
        for (std::size_t i = 1; i < items.size(); ++i) {
            if (!pair_ok(as_oracle_item(items[i - 1]), as_oracle_item(items[i]))) {
                return "result violates the pair constraint";
            }
        }
        break;
    }
    }
    return {};
}

double microseconds_between(std::chrono::steady_clock::time_point begin,
                            std::chrono::steady_clock::time_point end)
{
    return std::chrono::duration<double, std::micro>(end - begin).count();
}

int run_benchmark(const RunConfig& config, std::istream& input,
                  std::ostream& records, std::ostream& diagnostics)
{
    WindowState window(config.window);
    ValueReader reader(input, config.format, config.column);
    std::size_t items = 0;
    const auto begin = std::chrono::steady_clock::now();
    try {
        while (std::optional<double> value = reader.next()) {
            window.slide(*value);
            ++items;
        }
    } catch (const ParseError& error) {
        diagnostics << "error: input line " << error.line() << ": " << error.what()
                    << '\n';
        return kExitParse;
    }
    const auto end = std::chrono::steady_clock::now();
    const double elapsed =
        std::chrono::duration<double>(end - begin).count();
    const QNList& structure = window.structure();
    auto mean = [](std::size_t total, std::size_t count) {
        return count == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(count);
    };
    std::string out = "{\"benchmark\":true,\"items\":";
    out += std::to_string(items);
    out += ",\"elapsed_seconds\":";
    out += render_number(elapsed);
    out += ",\"items_per_second\":";
    out += render_number(elapsed > 0.0 ? static_cast<double>(items) / elapsed : 0.0);
    out += ",\"mean_insert_probes\":";
    out += render_number(mean(structure.total_insert_probes(), structure.insert_count()));
    out += ",\"mean_delete_touches\":";
    out += render_number(mean(structure.total_delete_touches(), structure.delete_count()));
    out += '}';
    records << out << '\n';
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::istream& input, std::ostream& records,
        std::ostream& diagnostics)
{
    const std::string problem = validate(config);
    if (!problem.empty()) {
        diagnostics << "error: " << problem << '\n';
        return kExitUsage;
    }
    if (config.benchmark) {
        return run_benchmark(config, input, records, diagnostics);
    }
    WindowState window(config.window);
    ValueReader reader(input, config.format, config.column);
    std::size_t slides = 0;
    try {
        while (std::optional<double> value = reader.next()) {
            window.slide(*value);
            ++slides;
            if (!window.full() && !config.emit_warmup) {
                continue;
            }
            const auto begin = std::chrono::steady_clock::now();
            const QueryOutcome outcome = execute_query(config, window.structure());
            const auto end = std::chrono::steady_clock::now();
            records << render_record(slides, window.structure(), outcome,
                                     microseconds_between(begin, end))
                    << '\n';
            if (config.oracle_check) {
                const std::string defect =
                    verify_report(config, window.structure(), outcome);
                if (!defect.empty()) {
                    diagnostics << "oracle mismatch at window_index " << slides << ": "
                                << defect << '\n';
                    return kExitOracle;
                }
            }
        }
    } catch (const ParseError& error) {
        diagnostics << "error: input line " << error.line() << ": " << error.what()
                    << '\n';
        return kExitParse;
    }
    return kExitOk;
}

}  // namespace winlis::stream
