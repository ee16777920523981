// Query layer. Everything here reads the structure without modifying it:
// chain enumeration, single-chain extraction, the weight/gap/width
// extremum variants, and the slope- and range-constrained variants.
// Derived tables are stamped with the structure generation so stale reads
// fail loudly instead of silently.

#pragma once

#include "winlis/qnlist.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace winlis {

struct SequenceItem {
    double value = 0.0;
    std::int64_t position = 0;
};

bool operator==(const SequenceItem& a, const SequenceItem& b);

// One rising chain of full LIS length, oldest item first.
struct ResultSequence {
    std::vector<SequenceItem> items;

    double weight() const;       // sum of values
    double gap() const;          // last value minus first value
    std::int64_t width() const;  // last position minus first position
};

bool operator==(const ResultSequence& a, const ResultSequence& b);

int lis_length(const QNList& structure);

// Every LIS exactly once, each of full length. Deterministic order:
// ending items are taken from the deepest list head to tail, and
// predecessor blocks are explored newest first.
std::vector<ResultSequence> enumerate_all(const QNList& structure);

// One LIS with no further guarantees: the chain of up links from the
// deepest list's tail.
ResultSequence single_lis(const QNList& structure);

// Per-item chain-head links, derived by one pass per adjacent list pair.
// Following up links from an item yields the newest (latest-position,
// smallest-value) head over all LIS ending there; following leftmost
// predecessors yields the oldest (earliest-position, largest-value) head.
// Any head of any LIS ending at the item lies between the two.
class SweepTable {
public:
    void fill_up_heads(const QNList& structure);
    void fill_leftmost(const QNList& structure);

    bool has_up_heads() const { return has_up_heads_; }
    bool has_leftmost() const { return has_leftmost_; }

    // True while the structure has not mutated since the fills ran.
    bool valid_for(const QNList& structure) const
    {
        return generation_ == structure.generation();
    }

    const Node* up_head(const Node& node) const;
    const Node* leftmost_head(const Node& node) const;
    const Node* leftmost_parent(const Node& node) const;  // null on list 1

private:
    struct Entry {
        const Node* up_head = nullptr;
        const Node* leftmost_head = nullptr;
        const Node* leftmost_parent = nullptr;
    };

    const Entry& entry(const Node& node) const;

    std::unordered_map<std::int64_t, Entry> entries_;  // keyed by position
    std::uint64_t generation_ = 0;
    bool has_up_heads_ = false;
    bool has_leftmost_ = false;
};

// Black marks used by the constrained single-chain queries, stored beside
// the structure and keyed by position. Items on list 1 are never marked.
class ColorMarks {
public:
    void mark_black(const Node& node);
    bool is_black(const Node& node) const;
    std::size_t black_count() const { return black_.size(); }

private:
    std::unordered_set<std::int64_t> black_;
};

// The heaviest / lightest LIS by value sum. The heaviest chain follows
// leftmost predecessors from the deepest list's head, the lightest
// follows up links from its tail; ties may resolve to any extremal chain.
ResultSequence max_weight(const QNList& structure);
ResultSequence min_weight(const QNList& structure);

struct GapResults {
    std::vector<ResultSequence> sequences;
    double gap = 0.0;
};

struct WidthResults {
    std::vector<ResultSequence> sequences;
    std::int64_t width = 0;
};

// All LIS whose value span (gap) or position span (width) attains the
// extremum over every LIS. Enumeration cost is proportional to the
// output, plus one sweep.
GapResults max_gap(const QNList& structure);
GapResults min_gap(const QNList& structure);
WidthResults max_width(const QNList& structure);
WidthResults min_width(const QNList& structure);

// Consecutive-pair bounds for the range-constrained variant: position
// gaps within [min_index_gap, max_index_gap] and value gaps within
// [min_value_gap, max_value_gap].
struct RangeBounds {
    std::int64_t min_index_gap = 1;
    std::int64_t max_index_gap = 1;
    double min_value_gap = 0.0;
    double max_value_gap = 0.0;
};

// The per-list marking passes behind slis/rlis, exposed for inspection:
// an item turns black when no unmarked item one list up can precede it
// under the pair constraint.
ColorMarks slope_coloration(const QNList& structure, double slope);
ColorMarks range_coloration(const QNList& structure, const RangeBounds& bounds);

// One LIS whose every consecutive pair rises by at least `slope` per
// position step, or nullopt when no such LIS exists. slope must be
// finite and non-negative; violations throw std::invalid_argument.
std::optional<ResultSequence> slis(const QNList& structure, double slope);

// One LIS whose every consecutive pair satisfies `bounds`, or nullopt
// when no such LIS exists. Requires 0 < min_index_gap <= max_index_gap
// and 0 <= min_value_gap <= max_value_gap (finite); violations throw
// std::invalid_argument.
std::optional<ResultSequence> rlis(const QNList& structure, const RangeBounds& bounds);

}  // namespace winlis
