#include "winlis/window.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "qnlist_internals.hpp"

namespace winlis {

namespace {

using detail::QNListInternals;

void touch(std::size_t* touches, std::size_t n = 1)
{
    if (touches != nullptr) {
        *touches += n;
    }
}

}  // namespace

Division divide(QNList& structure, std::size_t* touches)
{
    assert(!structure.empty());
    auto& lists = QNListInternals::lists(structure);
    Division division;
    division.lists.resize(lists.size());

    // List 1: exactly the oldest item leaves; the rest of the list stays.
    {
        ListDivision& d = division.lists[0];
        Node* head = lists[0].head;
        touch(touches);
        d.left_head = head;
        d.left_tail = head;
        if (head->right != nullptr) {
            d.right_head = head->right;
            d.right_tail = lists[0].tail;
        } else {
            d.all_left = true;
        }
    }

    for (std::size_t t = 1; t < lists.size(); ++t) {
        const ListDivision& above = division.lists[t - 1];
        ListDivision& d = division.lists[t];
        touch(touches);
        if (above.right_head == nullptr) {
            // Nothing stays above, so every chain through this list lost
            // the deleted item: the whole list promotes.
            d.left_head = lists[t].head;
            d.left_tail = lists[t].tail;
            d.all_left = true;
            continue;
        }
        Node* boundary = above.right_head->down;
        touch(touches);
        if (boundary == nullptr) {
            // No item here arrived before the stationary block above, so
            // nothing promotes from this list (or any deeper one).
            d.right_head = lists[t].head;
            d.right_tail = lists[t].tail;
            d.all_right = true;
            continue;
        }
        d.left_head = lists[t].head;
        d.left_tail = boundary;
        if (boundary->right != nullptr) {
            d.right_head = boundary->right;
            d.right_tail = lists[t].tail;
        } else {
            d.all_left = true;
        }
    }
    return division;
}

void merge_horizontal(QNList& structure, const Division& division, std::size_t* touches)
{
    auto& lists = QNListInternals::lists(structure);
    const int old_count = static_cast<int>(lists.size());
    std::vector<HorizontalList> merged(lists.size());

    for (int t = 1; t <= old_count; ++t) {
        const ListDivision& promoted = division.at(t + 1);  // becomes the prefix
        const ListDivision& stays = division.at(t);         // keeps its level
        Node* head = promoted.left_head != nullptr ? promoted.left_head : stays.right_head;
        Node* tail = stays.right_head != nullptr ? stays.right_tail : promoted.left_tail;

        if (promoted.left_head != nullptr) {
            for (Node* n = promoted.left_head;; n = n->right) {
                touch(touches);
                n->level = t;
                if (n == promoted.left_tail) {
                    break;
                }
            }
            promoted.left_head->left = nullptr;
            promoted.left_tail->right = stays.right_head;
        }
        if (stays.right_head != nullptr) {
            touch(touches);
            stays.right_head->left = promoted.left_tail;
        }
        assert(head != nullptr || t == old_count);
        merged[static_cast<std::size_t>(t) - 1] = HorizontalList{head, tail};
    }

    // Detach the deleted item; delete_head releases its node afterwards.
    Node* removed = division.at(1).left_head;
    removed->left = removed->right = removed->up = removed->down = nullptr;

    if (!merged.empty() && merged.back().head == nullptr) {
        merged.pop_back();
    }
    lists = std::move(merged);
    QNListInternals::bump_generation(structure);
}

void update_up_neighbors(QNList& structure, const Division& division, std::size_t* touches)
{
    const int old_count = static_cast<int>(division.lists.size());
    for (int t = 1; t <= old_count - 1; ++t) {
        const ListDivision& block = division.at(t + 1);  // promoted to list t
        if (block.left_head == nullptr) {
            continue;
        }
        if (t == 1) {
            // The block now forms the front of list 1: nothing above it.
            for (Node* n = block.left_head;; n = n->right) {
                touch(touches);
                n->up = nullptr;
                if (n == block.left_tail) {
                    break;
                }
            }
            continue;
        }
        Node* x = division.at(t).left_tail;  // promoted tail one list up
        assert(x != nullptr);
        Node* last = block.left_tail;
        touch(touches);
        if (last->up != x) {
            // Up links grow rightward along a list, so if even the block
            // tail pointed below x, no link in the block crossed the seam.
            continue;
        }
        Node* first = last;
        while (first->left != nullptr && first->left->up == x) {
            touch(touches);
            first = first->left;
        }
        // Every new target lies at or right of x in the merged upper
        // list; the cursor advances monotonically across the block.
        Node* cursor = x;
        for (Node* n = first;; n = n->right) {
            touch(touches);
            while (cursor->right != nullptr && cursor->right->position < n->position) {
                touch(touches);
                cursor = cursor->right;
            }
            n->up = cursor;
            if (n == block.left_tail) {
                break;
            }
        }
    }
    QNListInternals::bump_generation(structure);
}

void update_down_neighbors(QNList& structure, const Division& division, std::size_t* touches)
{
    const int old_count = static_cast<int>(division.lists.size());
    for (int t = 1; t <= old_count; ++t) {
        const ListDivision& stays = division.at(t);
        const ListDivision& promoted_below = division.at(t + 1);
        if (stays.right_head == nullptr || promoted_below.left_head == nullptr) {
            continue;
        }
        Node* y = promoted_below.left_tail;
        Node* a_k = stays.right_head;
        touch(touches);
        assert(a_k->down == y);
        if (a_k->down != y) {
            continue;
        }
        // Down links that pointed into the promoted block form a prefix
        // of the stationary block.
        Node* last = a_k;
        while (last->right != nullptr && last->right->down == y) {
            touch(touches);
            last = last->right;
        }
        // Replacement targets can only sit in the promoted prefix of the
        // merged list below: everything that stayed down there arrived
        // after y, hence after every item of this prefix. The cursor
        // walks that prefix right to left and may run off its head, in
        // which case the link becomes absent.
        Node* cursor = division.at(t + 2).left_tail;
        for (Node* n = last;; n = n->left) {
            touch(touches);
            while (cursor != nullptr && cursor->position > n->position) {
                touch(touches);
                cursor = cursor->left;
            }
            n->down = cursor;
            if (n == a_k) {
                break;
            }
        }
    }
    QNListInternals::bump_generation(structure);
}

void delete_head(QNList& structure)
{
    if (structure.empty()) {
        throw std::logic_error("winlis::delete_head: structure is empty");
    }
    std::size_t touches = 0;
    const Division division = divide(structure, &touches);
    merge_horizontal(structure, division, &touches);
    update_up_neighbors(structure, division, &touches);
    update_down_neighbors(structure, division, &touches);

    auto& items = QNListInternals::items(structure);
    assert(items.front().get() == division.at(1).left_head);
    items.pop_front();
    QNListInternals::record_delete(structure, touches);
    QNListInternals::bump_generation(structure);
}

WindowState::WindowState(std::size_t capacity) : capacity_(capacity)
{
    if (capacity_ == 0) {
        throw std::invalid_argument("winlis::WindowState: capacity must be at least 1");
    }
}

std::int64_t WindowState::slide(double value)
{
    if (!std::isfinite(value)) {
        throw std::invalid_argument("winlis::WindowState::slide: value must be finite");
    }
    if (full()) {
        delete_head(structure_);
    }
    const std::int64_t position = next_position_;
    structure_.insert(value, position);
    ++next_position_;
    return position;
}

}  // namespace winlis
