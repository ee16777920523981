// Sliding-window maintenance. Deleting the oldest item never rebuilds:
// each list splits into the block that climbs one list up (every item
// there loses the deleted head from the bottom of its chains) and the
// block that stays, the blocks are restitched horizontally, and the few
// up/down links that crossed a seam are repaired with one-way cursor
// walks. The whole pass touches a bounded number of nodes per item held.

#pragma once

#include "winlis/qnlist.hpp"

#include <cstddef>
#include <vector>

namespace winlis {

// One list's split. The left part (head..left_tail) is the block promoted
// one list up; the right part (right_head..tail) stays. Either side may be
// empty; the flags make that explicit.
struct ListDivision {
    Node* left_head = nullptr;
    Node* left_tail = nullptr;
    Node* right_head = nullptr;
    Node* right_tail = nullptr;
    bool all_left = false;
    bool all_right = false;
};

struct Division {
    std::vector<ListDivision> lists;  // index t-1 describes list t

    // Split of the given list; an empty division past the last list, so
    // callers can ask about the lists below any level uniformly.
    const ListDivision& at(int level) const
    {
        static const ListDivision empty{};
        const std::size_t index = static_cast<std::size_t>(level) - 1;
        return index < lists.size() ? lists[index] : empty;
    }
};

// Computes the promoted/stationary split of every list for the removal of
// the oldest item, walking only the boundary of each list. The structure
// is not modified; the non-const reference is needed only so the returned
// division may hold mutable node pointers for the later passes.
// Precondition: the structure is non-empty.
Division divide(QNList& structure, std::size_t* touches = nullptr);

// Restitches every list t to (promoted block of list t+1) ++ (stationary
// block of list t), drops the deleted head from list 1, refreshes cached
// levels of promoted items, and prunes the last list if it emptied.
// Up/down links still describe the old shape afterwards; the two update
// passes below complete the deletion.
void merge_horizontal(QNList& structure, const Division& division, std::size_t* touches = nullptr);

// Repairs up links of promoted blocks. Within each block only the suffix
// whose up link pointed at the tail of the next promoted block needs new
// targets; a cursor over the merged upper list finds them left to right
// without ever backing up.
void update_up_neighbors(QNList& structure, const Division& division, std::size_t* touches = nullptr);

// Repairs down links of stationary blocks. Within each block only the
// prefix whose down link pointed at the tail of the promoted block below
// needs new targets, all of which lie in the promoted block two lists
// below (the left part of the merged lower list); a cursor walks it right
// to left. Links may become absent.
void update_down_neighbors(QNList& structure, const Division& division, std::size_t* touches = nullptr);

// Removes the oldest item: divide, merge, repair up links, repair down
// links, release the node. Total node touches are recorded on the
// structure's deletion counters. Throws std::logic_error when empty.
void delete_head(QNList& structure);

// A fixed-capacity window over a value stream. Positions are assigned
// 1, 2, 3, ... and never reused.
class WindowState {
public:
    // Throws std::invalid_argument when capacity is zero.
    explicit WindowState(std::size_t capacity);

    std::size_t capacity() const { return capacity_; }
    std::size_t occupancy() const { return structure_.size(); }
    bool full() const { return structure_.size() == capacity_; }
    std::int64_t next_position() const { return next_position_; }
    const QNList& structure() const { return structure_; }

    // Admits one value: evicts the oldest item first when the window is
    // full, inserts otherwise (warm-up). Returns the assigned position.
    // Non-finite values throw std::invalid_argument.
    std::int64_t slide(double value);

private:
    std::size_t capacity_;
    QNList structure_;
    std::int64_t next_position_ = 1;
};

}  // namespace winlis
