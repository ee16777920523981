#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "winlis/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace winlis::oracle;
using testsupport::Chain;

namespace {

// The seven-item example used throughout: values 3 9 6 2 8 5 7 at
// positions 1..7. Its four LIS and their metrics were worked out by hand
// and are frozen below.
const std::vector<double> kExample = {3, 9, 6, 2, 8, 5, 7};

Chain chain_of(std::initializer_list<std::pair<std::int64_t, double>> pairs)
{
    return Chain(pairs);
}

}  // namespace

TEST_CASE("rising lengths follow the non-strict compatibility order")
{
    CHECK(dp_rising_lengths(make_sequence(kExample)) ==
          std::vector<int>{1, 2, 2, 1, 3, 2, 3});
    // Equal values extend each other (non-strict), so a constant run has
    // growing rising lengths.
    CHECK(dp_rising_lengths(make_sequence({5, 5, 5})) == std::vector<int>{1, 2, 3});
    CHECK(dp_rising_lengths(make_sequence({})).empty());
    CHECK(dp_rising_lengths(make_sequence({4})) == std::vector<int>{1});
    CHECK(dp_rising_lengths(make_sequence({3, 2, 1})) == std::vector<int>{1, 1, 1});
}

TEST_CASE("dp_table records every predecessor of each item")
{
    const DPTable table = dp_table(make_sequence(kExample));
    CHECK(table.lis_length == 3);
    // 7 at index 6 can follow either 6 (index 2) or 5 (index 5).
    CHECK(table.predecessors[6] == std::vector<std::size_t>{2, 5});
    // 8 at index 4 can only follow 6: 9 is larger, 5 comes later.
    CHECK(table.predecessors[4] == std::vector<std::size_t>{2});
    // 5 at index 5 can follow 3 or 2.
    CHECK(table.predecessors[5] == std::vector<std::size_t>{0, 3});
    CHECK(table.predecessors[0].empty());
}

TEST_CASE("enumeration lists each LIS exactly once in backtrack order")
{
    const Enumeration all = dp_enumerate(make_sequence(kExample), kEnumerationCap);
    REQUIRE(all.sequences.size() == 4);
    CHECK_FALSE(all.truncated);
    // Ending items in index order (8 then 7), predecessors in index order.
    CHECK(testsupport::canonical_chain(all.sequences[0]) ==
          chain_of({{1, 3}, {3, 6}, {5, 8}}));
    CHECK(testsupport::canonical_chain(all.sequences[1]) ==
          chain_of({{1, 3}, {3, 6}, {7, 7}}));
    CHECK(testsupport::canonical_chain(all.sequences[2]) ==
          chain_of({{1, 3}, {6, 5}, {7, 7}}));
    CHECK(testsupport::canonical_chain(all.sequences[3]) ==
          chain_of({{4, 2}, {6, 5}, {7, 7}}));
    CHECK(dp_count_lis(make_sequence(kExample)) == 4);
}

TEST_CASE("enumeration cap truncates and says so")
{
    const Enumeration capped = dp_enumerate(make_sequence(kExample), 2);
    CHECK(capped.sequences.size() == 2);
    CHECK(capped.truncated);
    // The count saturates at its limit the same way.
    CHECK(dp_count_lis(make_sequence(kExample), 2) == 2);
    CHECK(dp_count_lis(make_sequence(kExample), 3) == 3);
}

TEST_CASE("metrics of a single chain")
{
    const Sequence chain = {{3, 1}, {6, 3}, {8, 5}};
    CHECK(metric_of(chain, Metric::weight) == 17.0);
    CHECK(metric_of(chain, Metric::gap) == 5.0);
    CHECK(metric_of(chain, Metric::width) == 4.0);
    CHECK(metric_of({}, Metric::weight) == 0.0);
}

TEST_CASE("post_filter keeps exactly the metric-extreme chains, input order")
{
    const Enumeration all = dp_enumerate(make_sequence(kExample), kEnumerationCap);

    const auto heaviest = post_filter(all.sequences, Metric::weight, Extremum::largest);
    REQUIRE(heaviest.size() == 1);
    CHECK(testsupport::canonical_chain(heaviest[0]) == chain_of({{1, 3}, {3, 6}, {5, 8}}));

    const auto lightest = post_filter(all.sequences, Metric::weight, Extremum::smallest);
    REQUIRE(lightest.size() == 1);
    CHECK(testsupport::canonical_chain(lightest[0]) == chain_of({{4, 2}, {6, 5}, {7, 7}}));

    const auto widest_gap = post_filter(all.sequences, Metric::gap, Extremum::largest);
    CHECK(testsupport::canonical_set(widest_gap) ==
          std::vector<Chain>{chain_of({{1, 3}, {3, 6}, {5, 8}}),
                             chain_of({{4, 2}, {6, 5}, {7, 7}})});

    const auto narrowest_gap = post_filter(all.sequences, Metric::gap, Extremum::smallest);
    CHECK(testsupport::canonical_set(narrowest_gap) ==
          std::vector<Chain>{chain_of({{1, 3}, {3, 6}, {7, 7}}),
                             chain_of({{1, 3}, {6, 5}, {7, 7}})});

    const auto widest = post_filter(all.sequences, Metric::width, Extremum::largest);
    CHECK(testsupport::canonical_set(widest) ==
          std::vector<Chain>{chain_of({{1, 3}, {3, 6}, {7, 7}}),
                             chain_of({{1, 3}, {6, 5}, {7, 7}})});

    const auto narrowest = post_filter(all.sequences, Metric::width, Extremum::smallest);
    REQUIRE(narrowest.size() == 1);
    CHECK(testsupport::canonical_chain(narrowest[0]) == chain_of({{4, 2}, {6, 5}, {7, 7}}));
}

TEST_CASE("pair predicates: slope")
{
    const Item a{3, 1};
    const Item b{6, 3};
    CHECK(slope_pair_ok(a, b, 1.0));       // rise 3 over 2 positions
    CHECK(slope_pair_ok(a, b, 1.5));       // boundary holds (>=)
    CHECK_FALSE(slope_pair_ok(a, b, 2.0));
    CHECK_FALSE(slope_pair_ok(b, a, 0.0));  // wrong order
    CHECK(slope_pair_ok(Item{5, 1}, Item{5, 4}, 0.0));
    CHECK_FALSE(slope_pair_ok(Item{6, 1}, Item{5, 4}, 0.0));  // value drops
}

TEST_CASE("pair predicates: range")
{
    const Item a{3, 1};
    const Item b{6, 3};
    CHECK(range_pair_ok(a, b, 1, 2, 1, 3));
    CHECK(range_pair_ok(a, b, 2, 2, 3, 3));  // both boundaries inclusive
    CHECK_FALSE(range_pair_ok(a, b, 3, 4, 1, 3));   // index gap too small
    CHECK_FALSE(range_pair_ok(a, b, 1, 1, 1, 3));   // index gap too large
    CHECK_FALSE(range_pair_ok(a, b, 1, 2, 4, 9));   // value gap too small
    CHECK_FALSE(range_pair_ok(a, b, 1, 2, 0, 2));   // value gap too large
}

TEST_CASE("brute_feasible on the example: slope bounds")
{
    const Sequence seq = make_sequence(kExample);
    auto slope1 = [](const Item& x, const Item& y) { return slope_pair_ok(x, y, 1.0); };
    // Hand check: 3-6-8 climbs 3/2 then 2/2; 2-5-7 climbs 3/2 then 2/1;
    // the two chains through position 7 from value 3 are too flat.
    CHECK(testsupport::canonical_set(brute_feasible(seq, slope1)) ==
          std::vector<Chain>{chain_of({{1, 3}, {3, 6}, {5, 8}}),
                             chain_of({{4, 2}, {6, 5}, {7, 7}})});
    auto slope2 = [](const Item& x, const Item& y) { return slope_pair_ok(x, y, 2.0); };
    CHECK(brute_feasible(seq, slope2).empty());
}

TEST_CASE("brute_feasible on the example: range bounds")
{
    const Sequence seq = make_sequence(kExample);
    auto in_range = [](const Item& x, const Item& y) {
        return range_pair_ok(x, y, 1, 2, 1, 3);
    };
    CHECK(testsupport::canonical_set(brute_feasible(seq, in_range)) ==
          std::vector<Chain>{chain_of({{1, 3}, {3, 6}, {5, 8}}),
                             chain_of({{4, 2}, {6, 5}, {7, 7}})});
}

TEST_CASE("brute_feasible refuses oversized inputs")
{
    const Sequence big = make_sequence(std::vector<double>(21, 1.0));
    auto always = [](const Item&, const Item&) { return true; };
    CHECK_THROWS_AS((void)brute_feasible(big, always), std::invalid_argument);
}

TEST_CASE("extreme aggregates agree with filtered enumeration on the example")
{
    const Sequence seq = make_sequence(kExample);
    CHECK(dp_extreme_weight(seq, Extremum::largest) == 17.0);
    CHECK(dp_extreme_weight(seq, Extremum::smallest) == 14.0);
    CHECK(dp_extreme_gap(seq, Extremum::largest) == 5.0);
    CHECK(dp_extreme_gap(seq, Extremum::smallest) == 4.0);
    CHECK(dp_extreme_width(seq, Extremum::largest) == 6);
    CHECK(dp_extreme_width(seq, Extremum::smallest) == 3);
    CHECK(dp_count_extreme_gap(seq, Extremum::largest, 100) == 2);
    CHECK(dp_count_extreme_gap(seq, Extremum::smallest, 100) == 2);
    CHECK(dp_count_extreme_width(seq, Extremum::largest, 100) == 2);
    CHECK(dp_count_extreme_width(seq, Extremum::smallest, 100) == 1);
}

TEST_CASE("extreme aggregates match post_filter on random digit sequences")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> length(1, 14);
    for (int round = 0; round < 400; ++round) {
        const Sequence seq =
            make_sequence(testsupport::digit_values(rng, length(rng)));
        const Enumeration all = dp_enumerate(seq, kEnumerationCap);
        if (all.truncated) {
            continue;
        }
        for (const Extremum extremum : {Extremum::largest, Extremum::smallest}) {
            const auto by_weight = post_filter(all.sequences, Metric::weight, extremum);
            CHECK(dp_extreme_weight(seq, extremum) ==
                  metric_of(by_weight.front(), Metric::weight));
            const auto by_gap = post_filter(all.sequences, Metric::gap, extremum);
            CHECK(dp_extreme_gap(seq, extremum) ==
                  metric_of(by_gap.front(), Metric::gap));
            CHECK(dp_count_extreme_gap(seq, extremum, all.sequences.size() + 1) ==
                  by_gap.size());
            const auto by_width = post_filter(all.sequences, Metric::width, extremum);
            CHECK(static_cast<double>(dp_extreme_width(seq, extremum)) ==
                  metric_of(by_width.front(), Metric::width));
            CHECK(dp_count_extreme_width(seq, extremum, all.sequences.size() + 1) ==
                  by_width.size());
        }
    }
}

TEST_CASE("longest feasible chain length")
{
    const Sequence seq = make_sequence(kExample);
    auto slope1 = [](const Item& x, const Item& y) { return slope_pair_ok(x, y, 1.0); };
    auto slope2 = [](const Item& x, const Item& y) { return slope_pair_ok(x, y, 2.0); };
    CHECK(dp_longest_feasible(seq, slope1) == 3);
    CHECK(dp_longest_feasible(seq, slope2) == 2);  // e.g. 3 then 9
    CHECK(dp_longest_feasible({}, slope1) == 0);
    // Consistency with brute force on small random inputs.
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> length(1, 10);
    std::uniform_real_distribution<double> slope(0.0, 3.0);
    for (int round = 0; round < 200; ++round) {
        const Sequence sample =
            make_sequence(testsupport::digit_values(rng, length(rng)));
        const double s = slope(rng);
        auto ok = [s](const Item& x, const Item& y) { return slope_pair_ok(x, y, s); };
        const bool full_length_exists =
            dp_longest_feasible(sample, ok) == dp_table(sample).lis_length;
        CHECK(full_length_exists == !brute_feasible(sample, ok).empty());
    }
}
