// Mutable access to QNList internals for the maintenance passes.
// Not installed; only the library sources include it.

#pragma once

#include "winlis/qnlist.hpp"

namespace winlis::detail {

struct QNListInternals {
    static std::deque<std::unique_ptr<Node>>& items(QNList& q) { return q.items_; }
    static std::vector<HorizontalList>& lists(QNList& q) { return q.lists_; }

    static void bump_generation(QNList& q) { ++q.generation_; }

    static void record_delete(QNList& q, std::size_t touches)
    {
        q.last_delete_touches_ = touches;
        q.total_delete_touches_ += touches;
        ++q.delete_count_;
    }
};

}  // namespace winlis::detail
