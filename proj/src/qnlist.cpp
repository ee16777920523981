#include "winlis/qnlist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace winlis {

QNList QNList::from_values(std::span<const double> values)
{
    QNList q;
    std::int64_t position = 0;
    for (double value : values) {
        q.insert(value, ++position);
    }
    return q;
}

std::vector<const Node*> QNList::arrival_order() const
{
    std::vector<const Node*> items;
    items.reserve(items_.size());
    for (const auto& item : items_) {
        items.push_back(item.get());
    }
    return items;
}

int QNList::insert(double value, std::int64_t position)
{
    if (!std::isfinite(value)) {
        throw std::invalid_argument("winlis::QNList::insert: value must be finite");
    }
    if (position <= last_position_) {
        throw std::invalid_argument("winlis::QNList::insert: positions must be positive and strictly increasing");
    }

    // Find the first list whose tail is strictly larger than the new value;
    // equal values fall through to the next list down. List tails are
    // non-decreasing from list 1 on, so a binary search works, and each
    // iteration costs exactly one tail probe.
    std::size_t probes = 0;
    std::size_t lo = 0;
    std::size_t hi = lists_.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ++probes;
        if (lists_[mid].tail->value > value) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    const std::size_t k = lo;

    auto owned = std::make_unique<Node>();
    Node* node = owned.get();
    node->value = value;
    node->position = position;
    node->level = static_cast<int>(k) + 1;

    if (k == lists_.size()) {
        lists_.push_back(HorizontalList{node, node});
    } else {
        Node* old_tail = lists_[k].tail;
        old_tail->right = node;
        node->left = old_tail;
        lists_[k].tail = node;
    }
    if (k > 0) {
        node->up = lists_[k - 1].tail;
    }
    if (k + 1 < lists_.size()) {
        node->down = lists_[k + 1].tail;
    }

    items_.push_back(std::move(owned));
    last_position_ = position;
    last_insert_probes_ = probes;
    total_insert_probes_ += probes;
    ++insert_count_;
    ++generation_;
    return node->level;
}

std::vector<const Node*> predecessors(const Node& node)
{
    std::vector<const Node*> block;
    for (const Node* p = node.up; p != nullptr && can_precede(*p, node); p = p->left) {
        block.push_back(p);
    }
    std::reverse(block.begin(), block.end());
    return block;
}

namespace {

std::string describe(const Node& node)
{
    std::ostringstream out;
    out << node.value << "@" << node.position;
    return out.str();
}

// The up link of an item on list t must point at the latest-arriving item
// of list t-1 with an earlier position (such an item always exists); the
// down link mirrors this one list below but may be absent. Both lists are
// sorted by position, so one tandem walk per list pair checks every link.
bool check_vertical(const HorizontalList& target, const HorizontalList& source,
                    bool up_direction, InvariantReport& report)
{
    const Node* best = nullptr;  // newest source item before the target cursor
    const Node* candidate = source.head;
    for (const Node* node = target.head; node != nullptr; node = node->right) {
        while (candidate != nullptr && candidate->position < node->position) {
            best = candidate;
            candidate = candidate->right;
        }
        const Node* link = up_direction ? node->up : node->down;
        if (link != best) {
            report.ok = false;
            report.detail = std::string(up_direction ? "up" : "down") +
                            " link of " + describe(*node) + " does not match the newest earlier item " +
                            (best ? describe(*best) : std::string("<none>"));
            return false;
        }
        if (!up_direction && link != nullptr && link->value <= node->value) {
            report.ok = false;
            report.detail = "down link of " + describe(*node) + " is not larger than the item";
            return false;
        }
    }
    return true;
}

}  // namespace

InvariantReport QNList::check_invariants() const
{
    InvariantReport report;
    auto fail = [&report](const std::string& detail) {
        report.ok = false;
        report.detail = detail;
    };

    std::size_t counted = 0;
    for (std::size_t i = 0; i < lists_.size(); ++i) {
        const HorizontalList& list = lists_[i];
        if (list.head == nullptr || list.tail == nullptr) {
            fail("list " + std::to_string(i + 1) + " has a null endpoint");
            return report;
        }
        if (list.head->left != nullptr || list.tail->right != nullptr) {
            fail("list " + std::to_string(i + 1) + " endpoints are linked outward");
            return report;
        }
        const Node* prev = nullptr;
        for (const Node* node = list.head; node != nullptr; node = node->right) {
            ++counted;
            report.link_count += (node->left != nullptr) + (node->right != nullptr) +
                                 (node->up != nullptr) + (node->down != nullptr);
            if (node->level != static_cast<int>(i) + 1) {
                fail("cached level of " + describe(*node) + " disagrees with its list");
                return report;
            }
            if (node->left != prev) {
                fail("left link of " + describe(*node) + " is not its list neighbor");
                return report;
            }
            if (prev != nullptr) {
                if (prev->value <= node->value) {
                    fail("values do not strictly decrease at " + describe(*node));
                    return report;
                }
                if (prev->position >= node->position) {
                    fail("positions do not strictly increase at " + describe(*node));
                    return report;
                }
            }
            prev = node;
        }
        if (prev != list.tail) {
            fail("tail of list " + std::to_string(i + 1) + " is unreachable from its head");
            return report;
        }
        if (i > 0 && lists_[i - 1].tail->value > list.tail->value) {
            fail("list tails decrease between lists " + std::to_string(i) + " and " + std::to_string(i + 1));
            return report;
        }
        if (i == 0) {
            for (const Node* node = list.head; node != nullptr; node = node->right) {
                if (node->up != nullptr) {
                    fail("item " + describe(*node) + " on list 1 has an up link");
                    return report;
                }
            }
        } else if (!check_vertical(lists_[i], lists_[i - 1], true, report)) {
            return report;
        }
        const HorizontalList below =
            i + 1 < lists_.size() ? lists_[i + 1] : HorizontalList{};
        if (!check_vertical(lists_[i], below, false, report)) {
            return report;
        }
    }

    report.node_count = counted;
    if (counted != items_.size()) {
        fail("lists hold " + std::to_string(counted) + " items but " +
             std::to_string(items_.size()) + " are owned");
        return report;
    }
    if (report.link_count > 4 * counted) {
        fail("link budget exceeded: " + std::to_string(report.link_count) + " links for " +
             std::to_string(counted) + " items");
        return report;
    }

    std::int64_t prev_position = std::numeric_limits<std::int64_t>::min();
    for (const auto& item : items_) {
        if (item->position <= prev_position) {
            fail("arrival order is not strictly increasing at " + describe(*item));
            return report;
        }
        prev_position = item->position;
    }
    return report;
}

}  // namespace winlis
