// Core linked structure: every item in the current window sits in the
// horizontal list matching its rising length (the length of the longest
// non-strictly increasing run that ends at it), and carries four links:
// left/right along its own list, up/down to the newest earlier item one
// list above/below. The whole structure is a constant number of pointers
// per item, so it stays linear in the window size.

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace winlis {

struct Node {
    double value = 0.0;
    std::int64_t position = 0;  // global arrival index, never reused
    Node* left = nullptr;       // same list, next larger value
    Node* right = nullptr;      // same list, next smaller value
    Node* up = nullptr;         // newest earlier item one list up
    Node* down = nullptr;       // newest earlier item one list down, if any
    int level = 0;              // 1-based list index, equals rising length
};

// Whether a chain through `b` can be extended backwards to `a`:
// `a` arrived strictly earlier and is not larger.
inline bool can_precede(const Node& a, const Node& b)
{
    return a.position < b.position && a.value <= b.value;
}

struct HorizontalList {
    Node* head = nullptr;  // largest value, earliest position
    Node* tail = nullptr;  // smallest value, latest position
};

struct InvariantReport {
    bool ok = true;
    std::string detail;          // first violation found, empty when ok
    std::size_t node_count = 0;
    std::size_t link_count = 0;  // non-null left/right/up/down pointers
};

namespace detail {
struct QNListInternals;
}

class QNList {
public:
    QNList() = default;
    QNList(QNList&&) noexcept = default;
    QNList& operator=(QNList&&) noexcept = default;
    QNList(const QNList&) = delete;
    QNList& operator=(const QNList&) = delete;

    // Builds from raw values with positions 1..n.
    static QNList from_values(std::span<const double> values);
    static QNList from_values(std::initializer_list<double> values)
    {
        return from_values(std::span<const double>(values.begin(), values.size()));
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    int list_count() const { return static_cast<int>(lists_.size()); }
    const HorizontalList& list(int level) const { return lists_[static_cast<std::size_t>(level) - 1]; }

    // Oldest item still held; the next one a deletion removes.
    const Node* oldest() const { return items_.empty() ? nullptr : items_.front().get(); }
    std::int64_t last_position() const { return last_position_; }

    // Items in arrival order (equivalently, ascending position).
    std::vector<const Node*> arrival_order() const;

    // Places one incoming value. The position must exceed every position
    // inserted so far and the value must be finite; violations throw
    // std::invalid_argument. Returns the 1-based list index the item
    // landed in. Costs one binary search over the list tails.
    int insert(double value, std::int64_t position);

    // Bumped by every mutation; lets derived tables detect staleness.
    std::uint64_t generation() const { return generation_; }

    // Tail comparisons performed by the most recent / all inserts.
    std::size_t last_insert_probes() const { return last_insert_probes_; }
    std::size_t total_insert_probes() const { return total_insert_probes_; }
    std::size_t insert_count() const { return insert_count_; }

    // Nodes touched by the most recent / all head deletions.
    std::size_t last_delete_touches() const { return last_delete_touches_; }
    std::size_t total_delete_touches() const { return total_delete_touches_; }
    std::size_t delete_count() const { return delete_count_; }

    // Full structural audit: list ordering, link reciprocity, cached
    // levels, the newest-earlier characterization of up/down links, and
    // the per-item link budget. Quadratic-free; intended for tests.
    InvariantReport check_invariants() const;

private:
    std::deque<std::unique_ptr<Node>> items_;  // arrival order, front = oldest
    std::vector<HorizontalList> lists_;        // lists_[t-1] holds level t
    std::int64_t last_position_ = 0;
    std::uint64_t generation_ = 0;
    std::size_t last_insert_probes_ = 0;
    std::size_t total_insert_probes_ = 0;
    std::size_t insert_count_ = 0;
    std::size_t last_delete_touches_ = 0;
    std::size_t total_delete_touches_ = 0;
    std::size_t delete_count_ = 0;

    friend struct detail::QNListInternals;
};

// The items that can directly precede `node` in a rising chain: a
// consecutive run of its upper list ending at node.up, returned in list
// order. Empty for items on list 1.
std::vector<const Node*> predecessors(const Node& node);

inline int rising_length(const Node& node)
{
    return node.level;
}

}  // namespace winlis
