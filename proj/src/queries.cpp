#include "winlis/queries.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace winlis {

bool operator==(const SequenceItem& a, const SequenceItem& b)
{
    return a.value == b.value && a.position == b.position;
}

bool operator==(const ResultSequence& a, const ResultSequence& b)
{
    return a.items == b.items;
}

double ResultSequence::weight() const
{
    double sum = 0.0;
    for (const SequenceItem& item : items) {
        sum += item.value;
    }
    return sum;
}

double ResultSequence::gap() const
{
    return items.empty() ? 0.0 : items.back().value - items.front().value;
}

std::int64_t ResultSequence::width() const
{
    return items.empty() ? 0 : items.back().position - items.front().position;
}

int lis_length(const QNList& structure)
{
    return structure.list_count();
}

namespace {

// Turns a chain collected tail-first into a result sequence.
ResultSequence from_reversed_path(const std::vector<const Node*>& path)
{
    ResultSequence seq;
    seq.items.reserve(path.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        seq.items.push_back(SequenceItem{(*it)->value, (*it)->position});
    }
    return seq;
}

enum class ScanOrder { newest_first, oldest_first };

// Depth-first chain collection with an explicit stack. Each item's
// admissible predecessors form one consecutive run of the list above;
// newest_first starts that run at the up link and moves left,
// oldest_first starts at the leftmost predecessor and moves right. The
// admit filter must hold on a consecutive sub-run anchored at the
// starting end (the constrained variants pin the chain head, which has
// exactly that shape), so the scan stops at its first rejection. Every
// admitted item extends to at least one emitted chain, which keeps the
// total work proportional to the output.
template <typename Admit>
void collect_chains(ScanOrder order, const std::vector<const Node*>& seeds,
                    const SweepTable* table, const Admit& admit,
                    std::vector<ResultSequence>& out)
{
    struct Frame {
        const Node* node;
        const Node* cursor;
    };
    std::vector<Frame> stack;
    std::vector<const Node*> path;

    auto first_candidate = [&](const Node& n) -> const Node* {
        if (n.level <= 1) {
            return nullptr;
        }
        return order == ScanOrder::newest_first ? n.up : table->leftmost_parent(n);
    };
    auto push_node = [&](const Node* n) {
        stack.push_back(Frame{n, first_candidate(*n)});
        path.push_back(n);
        if (n->level == 1) {
            out.push_back(from_reversed_path(path));
        }
    };

    for (const Node* seed : seeds) {
        push_node(seed);
        while (!stack.empty()) {
            Frame& top = stack.back();
            const Node* candidate = top.cursor;
            if (candidate != nullptr && can_precede(*candidate, *top.node) && admit(*candidate)) {
                top.cursor =
                    order == ScanOrder::newest_first ? candidate->left : candidate->right;
                push_node(candidate);
            } else {
                stack.pop_back();
                path.pop_back();
            }
        }
    }
}

std::vector<const Node*> deepest_list_items(const QNList& structure)
{
    std::vector<const Node*> items;
    if (structure.list_count() == 0) {
        return items;
    }
    for (const Node* n = structure.list(structure.list_count()).head; n != nullptr; n = n->right) {
        items.push_back(n);
    }
    return items;
}

constexpr auto admit_all = [](const Node&) { return true; };

}  // namespace

std::vector<ResultSequence> enumerate_all(const QNList& structure)
{
    std::vector<ResultSequence> out;
    collect_chains(ScanOrder::newest_first, deepest_list_items(structure), nullptr, admit_all, out);
    return out;
}

ResultSequence single_lis(const QNList& structure)
{
    std::vector<const Node*> path;
    if (structure.list_count() == 0) {
        return ResultSequence{};
    }
    for (const Node* n = structure.list(structure.list_count()).tail; n != nullptr; n = n->up) {
        path.push_back(n);
    }
    return from_reversed_path(path);
}

void SweepTable::fill_up_heads(const QNList& structure)
{
    if (generation_ != structure.generation()) {
        entries_.clear();
        has_up_heads_ = false;
        has_leftmost_ = false;
        generation_ = structure.generation();
    }
    entries_.reserve(structure.size());
    for (int t = 1; t <= structure.list_count(); ++t) {
        for (const Node* n = structure.list(t).head; n != nullptr; n = n->right) {
            const Node* head = t == 1 ? n : entries_.at(n->up->position).up_head;
            entries_[n->position].up_head = head;
        }
    }
    has_up_heads_ = true;
}

void SweepTable::fill_leftmost(const QNList& structure)
{
    if (generation_ != structure.generation()) {
        entries_.clear();
        has_up_heads_ = false;
        has_leftmost_ = false;
        generation_ = structure.generation();
    }
    entries_.reserve(structure.size());
    for (int t = 1; t <= structure.list_count(); ++t) {
        if (t == 1) {
            for (const Node* n = structure.list(t).head; n != nullptr; n = n->right) {
                Entry& e = entries_[n->position];
                e.leftmost_head = n;
                e.leftmost_parent = nullptr;
            }
            continue;
        }
        // The leftmost predecessor of successive items only moves right:
        // one shared cursor over the list above covers the whole list.
        // The value test suffices because the scan can never pass the up
        // link, which already arrived earlier.
        const Node* candidate = structure.list(t - 1).head;
        for (const Node* n = structure.list(t).head; n != nullptr; n = n->right) {
            while (candidate != nullptr && candidate->value > n->value) {
                candidate = candidate->right;
            }
            assert(candidate != nullptr && can_precede(*candidate, *n));
            const Node* head = entries_.at(candidate->position).leftmost_head;
            Entry& e = entries_[n->position];
            e.leftmost_parent = candidate;
            e.leftmost_head = head;
        }
    }
    has_leftmost_ = true;
}

const SweepTable::Entry& SweepTable::entry(const Node& node) const
{
    auto it = entries_.find(node.position);
    assert(it != entries_.end());
    return it->second;
}

const Node* SweepTable::up_head(const Node& node) const
{
    assert(has_up_heads_);
    return entry(node).up_head;
}

const Node* SweepTable::leftmost_head(const Node& node) const
{
    assert(has_leftmost_);
    return entry(node).leftmost_head;
}

const Node* SweepTable::leftmost_parent(const Node& node) const
{
    assert(has_leftmost_);
    return entry(node).leftmost_parent;
}

void ColorMarks::mark_black(const Node& node)
{
    assert(node.level > 1);
    black_.insert(node.position);
}

bool ColorMarks::is_black(const Node& node) const
{
    return black_.contains(node.position);
}

ResultSequence max_weight(const QNList& structure)
{
    if (structure.list_count() == 0) {
        return ResultSequence{};
    }
    // Walk leftmost predecessors: at every step the largest admissible
    // value, hence the heaviest chain overall.
    std::vector<const Node*> path;
    const Node* current = structure.list(structure.list_count()).head;
    path.push_back(current);
    while (current->level > 1) {
        const Node* p = current->up;
        while (p->left != nullptr && can_precede(*p->left, *current)) {
            p = p->left;
        }
        path.push_back(p);
        current = p;
    }
    return from_reversed_path(path);
}

ResultSequence min_weight(const QNList& structure)
{
    if (structure.list_count() == 0) {
        return ResultSequence{};
    }
    std::vector<const Node*> path;
    for (const Node* n = structure.list(structure.list_count()).tail; n != nullptr; n = n->up) {
        path.push_back(n);
    }
    return from_reversed_path(path);
}

namespace {

// Shared engine for the gap/width extrema. Measures every deepest-list
// item against the chain head its sweep direction pins, keeps the items
// attaining the extremum, and re-enumerates their chains restricted to
// that head.
template <typename MetricT, typename Measure>
std::pair<std::vector<ResultSequence>, MetricT>
head_extremum(const QNList& structure, bool use_leftmost, bool want_max, const Measure& measure)
{
    std::vector<ResultSequence> sequences;
    if (structure.list_count() == 0) {
        return {sequences, MetricT{}};
    }
    SweepTable table;
    if (use_leftmost) {
        table.fill_leftmost(structure);
    } else {
        table.fill_up_heads(structure);
    }
    auto head_of = [&](const Node& n) {
        return use_leftmost ? table.leftmost_head(n) : table.up_head(n);
    };

    const std::vector<const Node*> tails = deepest_list_items(structure);
    MetricT best = measure(*tails.front(), *head_of(*tails.front()));
    for (const Node* n : tails) {
        const MetricT m = measure(*n, *head_of(*n));
        if (want_max ? m > best : m < best) {
            best = m;
        }
    }
    const ScanOrder order = use_leftmost ? ScanOrder::oldest_first : ScanOrder::newest_first;
    for (const Node* n : tails) {
        if (measure(*n, *head_of(*n)) != best) {
            continue;
        }
        const Node* pinned = head_of(*n);
        collect_chains(order, {n}, &table,
                       [&](const Node& c) { return head_of(c) == pinned; }, sequences);
    }
    return {sequences, best};
}

double value_span(const Node& tail, const Node& head)
{
    return tail.value - head.value;
}

std::int64_t position_span(const Node& tail, const Node& head)
{
    return tail.position - head.position;
}

}  // namespace

GapResults max_gap(const QNList& structure)
{
    // The newest head is the smallest-valued one, so it realizes the
    // largest value span for each ending item.
    auto [sequences, best] = head_extremum<double>(structure, false, true, value_span);
    return GapResults{std::move(sequences), best};
}

GapResults min_gap(const QNList& structure)
{
    auto [sequences, best] = head_extremum<double>(structure, true, false, value_span);
    return GapResults{std::move(sequences), best};
}

WidthResults max_width(const QNList& structure)
{
    // The oldest head is the earliest one, so it realizes the widest
    // position span for each ending item.
    auto [sequences, best] = head_extremum<std::int64_t>(structure, true, true, position_span);
    return WidthResults{std::move(sequences), best};
}

WidthResults min_width(const QNList& structure)
{
    auto [sequences, best] = head_extremum<std::int64_t>(structure, false, false, position_span);
    return WidthResults{std::move(sequences), best};
}

namespace {

// Pair admissibility, written with the exact expressions the reference
// oracle uses so borderline comparisons agree bit for bit.
bool slope_ok(const Node& from, const Node& to, double slope)
{
    if (from.position >= to.position || from.value > to.value) {
        return false;
    }
    const double gap = static_cast<double>(to.position - from.position);
    return to.value - from.value >= slope * gap;
}

bool range_ok(const Node& from, const Node& to, const RangeBounds& bounds)
{
    if (from.position >= to.position || from.value > to.value) {
        return false;
    }
    const std::int64_t index_gap = to.position - from.position;
    const double value_gap = to.value - from.value;
    return index_gap >= bounds.min_index_gap && index_gap <= bounds.max_index_gap &&
           value_gap >= bounds.min_value_gap && value_gap <= bounds.max_value_gap;
}

// From the first unmarked item of the deepest list, extend backwards one
// list at a time through unmarked admissible predecessors. The marking
// pass guarantees each step finds one before running off the block.
template <typename Proper>
std::optional<ResultSequence> constrained_chain(const QNList& structure, const ColorMarks& marks,
                                                const Proper& proper)
{
    const int m = structure.list_count();
    if (m == 0) {
        return std::nullopt;
    }
    const Node* seed = nullptr;
    for (const Node* n = structure.list(m).head; n != nullptr; n = n->right) {
        if (!marks.is_black(*n)) {
            seed = n;
            break;
        }
    }
    if (seed == nullptr) {
        return std::nullopt;
    }
    std::vector<const Node*> path{seed};
    const Node* current = seed;
    while (current->level > 1) {
        const Node* p = current->up;
        while (p != nullptr && (marks.is_black(*p) || !proper(*p, *current))) {
            p = p->left;
        }
        assert(p != nullptr);
        if (p == nullptr) {
            return std::nullopt;
        }
        path.push_back(p);
        current = p;
    }
    return from_reversed_path(path);
}

}  // namespace

ColorMarks slope_coloration(const QNList& structure, double slope)
{
    ColorMarks marks;
    for (int t = 2; t <= structure.list_count(); ++t) {
        // One cursor over the list above serves the whole list: items it
        // skips (marked, too large, or too shallow a rise) stay useless
        // for every later item, and items beyond the current position may
        // come back into play, so the cursor never retreats past them.
        const Node* candidate = structure.list(t - 1).head;
        for (const Node* n = structure.list(t).head; n != nullptr; n = n->right) {
            while (candidate != nullptr && candidate->position < n->position &&
                   (marks.is_black(*candidate) || !slope_ok(*candidate, *n, slope))) {
                candidate = candidate->right;
            }
            if (candidate == nullptr || candidate->position > n->position) {
                marks.mark_black(*n);
            }
        }
    }
    return marks;
}

ColorMarks range_coloration(const QNList& structure, const RangeBounds& bounds)
{
    ColorMarks marks;
    for (int t = 2; t <= structure.list_count(); ++t) {
        // The cursor seeks the oldest unmarked item that already rises
        // enough (value gap >= lower bound) and sits near enough (index
        // gap <= upper bound); both only get harder for later items, so
        // skips are permanent. Whether that item also respects the two
        // remaining bounds decides the mark: both only get easier toward
        // older candidates, so no candidate can do better.
        const Node* candidate = structure.list(t - 1).head;
        for (const Node* n = structure.list(t).head; n != nullptr; n = n->right) {
            while (candidate != nullptr && candidate->position < n->position &&
                   (marks.is_black(*candidate) ||
                    n->value - candidate->value < bounds.min_value_gap ||
                    n->position - candidate->position > bounds.max_index_gap)) {
                candidate = candidate->right;
            }
            if (candidate == nullptr || candidate->position > n->position ||
                n->value - candidate->value > bounds.max_value_gap ||
                n->position - candidate->position < bounds.min_index_gap) {
                marks.mark_black(*n);
            }
        }
    }
    return marks;
}

std::optional<ResultSequence> slis(const QNList& structure, double slope)
{
    if (!std::isfinite(slope) || slope < 0.0) {
        throw std::invalid_argument("winlis::slis: slope must be finite and non-negative");
    }
    const ColorMarks marks = slope_coloration(structure, slope);
    return constrained_chain(structure, marks,
                             [slope](const Node& from, const Node& to) { return slope_ok(from, to, slope); });
}

std::optional<ResultSequence> rlis(const QNList& structure, const RangeBounds& bounds)
{
    if (bounds.min_index_gap <= 0 || bounds.max_index_gap < bounds.min_index_gap) {
        throw std::invalid_argument("winlis::rlis: need 0 < min_index_gap <= max_index_gap");
    }
    if (!std::isfinite(bounds.min_value_gap) || !std::isfinite(bounds.max_value_gap) ||
        bounds.min_value_gap < 0.0 || bounds.max_value_gap < bounds.min_value_gap) {
        throw std::invalid_argument("winlis::rlis: need 0 <= min_value_gap <= max_value_gap");
    }
    const ColorMarks marks = range_coloration(structure, bounds);
    return constrained_chain(structure, marks,
                             [&bounds](const Node& from, const Node& to) { return range_ok(from, to, bounds); });
}

}  // namespace winlis
