#include "winlis/stream.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// "LI,UI,LV,UV": index gap bounds (integers) then value gap bounds.
bool parse_range_spec(const std::string& spec, winlis::RangeBounds& bounds)
{
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = spec.find(',', begin);
        fields.push_back(spec.substr(begin, comma - begin));
        if (comma == std::string::npos) {
            break;
        }
        begin = comma + 1;
    }
    if (fields.size() != 4) {
        return false;
    }
    auto read_int = [](const std::string& text, std::int64_t& out) {
        const char* last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), last, out);
        return !text.empty() && ec == std::errc{} && ptr == last;
    };
    auto read_double = [](const std::string& text, double& out) {
        const char* last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), last, out);
        return !text.empty() && ec == std::errc{} && ptr == last;
    };
    return read_int(fields[0], bounds.min_index_gap) &&
           read_int(fields[1], bounds.max_index_gap) &&
           read_double(fields[2], bounds.min_value_gap) &&
           read_double(fields[3], bounds.max_value_gap);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sliding-window longest-increasing-subsequence engine"};
    winlis::stream::RunConfig config;
    std::string query_name = "length";
    std::string format_name = "plain";
    std::string range_spec;
    std::string input_path = "-";

    app.add_option("--window", config.window, "Window capacity in items")->required();
    app.add_option("--query", query_name,
                   "length|enumerate|max-weight|min-weight|max-gap|min-gap|"
                   "max-width|min-width|slis|rlis")
        ->capture_default_str();
    app.add_option("--slope", config.slope,
                   "Minimum slope between consecutive picks (slis)")
        ->capture_default_str();
    app.add_option("--range", range_spec,
                   "min-index-gap,max-index-gap,min-value-gap,max-value-gap (rlis)");
    app.add_option("--format", format_name, "plain|csv")->capture_default_str();
    app.add_option("--column", config.column, "1-based csv column holding the value")
        ->capture_default_str();
    app.add_flag("--emit-warmup", config.emit_warmup,
                 "Also report while the window is filling");
    app.add_flag("--oracle-check", config.oracle_check,
                 "Verify every report against a quadratic reference");
    app.add_flag("--benchmark", config.benchmark,
                 "Maintenance throughput only; reports are suppressed");
    app.add_option("--input", input_path, "Input file, or - for stdin")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return winlis::stream::kExitUsage;
    }

    if (auto kind = winlis::stream::parse_query_kind(query_name)) {
        config.query = *kind;
    } else {
        std::cerr << "error: unknown query '" << query_name << "'\n";
        return winlis::stream::kExitUsage;
    }
    if (format_name == "plain") {
        config.format = winlis::stream::InputFormat::plain;
    } else if (format_name == "csv") {
        config.format = winlis::stream::InputFormat::csv;
    } else {
        std::cerr << "error: unknown format '" << format_name << "'\n";
        return winlis::stream::kExitUsage;
    }
    config.has_slope = app.count("--slope") > 0;
    config.has_range = app.count("--range") > 0;
    if (config.has_range && !parse_range_spec(range_spec, config.range)) {
        std::cerr << "error: bad --range '" << range_spec << "', want LI,UI,LV,UV\n";
        return winlis::stream::kExitUsage;
    }

    if (input_path == "-") {
        return winlis::stream::run(config, std::cin, std::cout, std::cerr);
    }
    std::ifstream input(input_path);
    if (!input) {
        std::cerr << "error: cannot open input file '" << input_path << "'\n";
        return winlis::stream::kExitUsage;
    }
    return winlis::stream::run(config, input, std::cout, std::cerr);
}
