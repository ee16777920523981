// Quadratic reference implementations used to cross-check the linked
// structure. Everything here trades speed for obviousness and shares no
// code with the engine itself.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace winlis::oracle {

struct Item {
    double value = 0.0;
    std::int64_t position = 0;
};

using Sequence = std::vector<Item>;

bool operator==(const Item& a, const Item& b);

// Wraps raw values with positions 1..n.
Sequence make_sequence(const std::vector<double>& values);

// rising_length[i] is the length of the longest non-strictly increasing
// subsequence ending at item i. predecessors[i] lists the indices j < i
// with values[j] <= values[i] and rising_length[j] == rising_length[i] - 1.
struct DPTable {
    std::vector<int> rising_length;
    std::vector<std::vector<std::size_t>> predecessors;
    int lis_length = 0;
};

DPTable dp_table(const Sequence& seq);

std::vector<int> dp_rising_lengths(const Sequence& seq);

inline constexpr std::size_t kEnumerationCap = 256;

// All longest increasing subsequences, found by backtracking through the
// DP table. sequences is complete unless truncated is set, which happens
// once cap sequences have been produced.
struct Enumeration {
    std::vector<Sequence> sequences;
    bool truncated = false;
};

Enumeration dp_enumerate(const Sequence& seq, std::size_t cap = kEnumerationCap);

// Exact number of longest increasing subsequences, saturated at limit so
// callers can cheaply decide whether dp_enumerate would truncate.
std::size_t dp_count_lis(const Sequence& seq, std::size_t limit = kEnumerationCap + 1);

enum class Metric { weight, gap, width };
enum class Extremum { smallest, largest };

double metric_of(const Sequence& seq, Metric metric);

// Keeps the candidates whose metric attains the extremum, in input order.
std::vector<Sequence> post_filter(const std::vector<Sequence>& candidates,
                                  Metric metric, Extremum extremum);

// Admissibility of a consecutive pair under the slope and range variants.
// Both imply from.value <= to.value given non-negative lower bounds; the
// position order is checked explicitly.
bool slope_pair_ok(const Item& from, const Item& to, double slope);
bool range_pair_ok(const Item& from, const Item& to,
                   std::int64_t min_index_gap, std::int64_t max_index_gap,
                   double min_value_gap, double max_value_gap);

using PairPredicate = std::function<bool(const Item&, const Item&)>;

// Every increasing subsequence of full LIS length whose consecutive pairs
// all satisfy pair_ok. Exhaustive, so inputs longer than 20 items are
// rejected with std::invalid_argument.
std::vector<Sequence> brute_feasible(const Sequence& seq, const PairPredicate& pair_ok);

// Extremal aggregates over all LIS at once, computed by DP so they stay
// usable when the LIS set is too large to enumerate. Weights accumulate
// head-to-tail, matching metric_of over an enumerated chain exactly.
double dp_extreme_weight(const Sequence& seq, Extremum extremum);
double dp_extreme_gap(const Sequence& seq, Extremum extremum);
std::int64_t dp_extreme_width(const Sequence& seq, Extremum extremum);

// Number of LIS attaining the gap/width extremum, saturated at limit.
std::size_t dp_count_extreme_gap(const Sequence& seq, Extremum extremum, std::size_t limit);
std::size_t dp_count_extreme_width(const Sequence& seq, Extremum extremum, std::size_t limit);

// Length of the longest chain whose consecutive pairs all satisfy
// pair_ok; a constrained chain of full LIS length exists iff this
// reaches the LIS length.
int dp_longest_feasible(const Sequence& seq, const PairPredicate& pair_ok);

}  // namespace winlis::oracle
