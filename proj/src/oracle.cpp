#include "winlis/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace winlis::oracle {

bool operator==(const Item& a, const Item& b)
{
    return a.value == b.value && a.position == b.position;
}

Sequence make_sequence(const std::vector<double>& values)
{
    Sequence seq;
    seq.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        seq.push_back(Item{values[i], static_cast<std::int64_t>(i + 1)});
    }
    return seq;
}

DPTable dp_table(const Sequence& seq)
{
    const std::size_t n = seq.size();
    DPTable table;
    table.rising_length.assign(n, 1);
    table.predecessors.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (seq[j].value <= seq[i].value) {
                table.rising_length[i] =
                    std::max(table.rising_length[i], table.rising_length[j] + 1);
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (seq[j].value <= seq[i].value &&
                table.rising_length[j] == table.rising_length[i] - 1) {
                table.predecessors[i].push_back(j);
            }
        }
        table.lis_length = std::max(table.lis_length, table.rising_length[i]);
    }
    return table;
}

std::vector<int> dp_rising_lengths(const Sequence& seq)
{
    return dp_table(seq).rising_length;
}

namespace {

// Emits the chain ending at index i with the partial chain `suffix` held in
// reverse (tail first). Returns false once the cap is reached.
bool backtrack(const Sequence& seq, const DPTable& table, std::size_t i,
               std::vector<std::size_t>& suffix, Enumeration& out, std::size_t cap)
{
    suffix.push_back(i);
    bool keep_going = true;
    if (table.rising_length[i] == 1) {
        if (out.sequences.size() >= cap) {
            out.truncated = true;
            keep_going = false;
        } else {
            Sequence chain;
            chain.reserve(suffix.size());
            for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
                chain.push_back(seq[*it]);
            }
            out.sequences.push_back(std::move(chain));
        }
    } else {
        for (std::size_t j : table.predecessors[i]) {
            if (!backtrack(seq, table, j, suffix, out, cap)) {
                keep_going = false;
                break;
            }
        }
    }
    suffix.pop_back();
    return keep_going;
}

}  // namespace

Enumeration dp_enumerate(const Sequence& seq, std::size_t cap)
{
    Enumeration out;
    const DPTable table = dp_table(seq);
    if (table.lis_length == 0) {
        return out;
    }
    std::vector<std::size_t> suffix;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (table.rising_length[i] != table.lis_length) {
            continue;
        }
        if (!backtrack(seq, table, i, suffix, out, cap)) {
            break;
        }
    }
    return out;
}

std::size_t dp_count_lis(const Sequence& seq, std::size_t limit)
{
    const DPTable table = dp_table(seq);
    if (table.lis_length == 0) {
        return 0;
    }
    const std::size_t n = seq.size();
    std::vector<std::size_t> count(n, 0);
    auto saturating_add = [limit](std::size_t a, std::size_t b) {
        return std::min(limit, a + b);
    };
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (table.rising_length[i] == 1) {
            count[i] = 1;
        } else {
            for (std::size_t j : table.predecessors[i]) {
                count[i] = saturating_add(count[i], count[j]);
            }
        }
        if (table.rising_length[i] == table.lis_length) {
            total = saturating_add(total, count[i]);
        }
    }
    return total;
}

double metric_of(const Sequence& seq, Metric metric)
{
    if (seq.empty()) {
        return 0.0;
    }
    switch (metric) {
    case Metric::weight: {
        double sum = 0.0;
        for (const Item& item : seq) {
            sum += item.value;
        }
        return sum;
    }
    case Metric::gap:
        return seq.back().value - seq.front().value;
    case Metric::width:
        return static_cast<double>(seq.back().position - seq.front().position);
    }
    return 0.0;
}

std::vector<Sequence> post_filter(const std::vector<Sequence>& candidates,
                                  Metric metric, Extremum extremum)
{
    std::vector<Sequence> kept;
    if (candidates.empty()) {
        return kept;
    }
    double best = metric_of(candidates.front(), metric);
    for (const Sequence& seq : candidates) {
        const double m = metric_of(seq, metric);
        if (extremum == Extremum::largest ? m > best : m < best) {
            best = m;
        }
    }
    for (const Sequence& seq : candidates) {
        if (metric_of(seq, metric) == best) {
            kept.push_back(seq);
        }
    }
    return kept;
}

bool slope_pair_ok(const Item& from, const Item& to, double slope)
{
    if (from.position >= to.position || from.value > to.value) {
        return false;
    }
    const double gap = static_cast<double>(to.position - from.position);
    return to.value - from.value >= slope * gap;
}

bool range_pair_ok(const Item& from, const Item& to,
                   std::int64_t min_index_gap, std::int64_t max_index_gap,
                   double min_value_gap, double max_value_gap)
{
    if (from.position >= to.position || from.value > to.value) {
        return false;
    }
    const std::int64_t index_gap = to.position - from.position;
    const double value_gap = to.value - from.value;
    return index_gap >= min_index_gap && index_gap <= max_index_gap &&
           value_gap >= min_value_gap && value_gap <= max_value_gap;
}

namespace {

void extend_chain(const Sequence& seq, const PairPredicate& pair_ok,
                  std::size_t target_length, std::vector<std::size_t>& chain,
                  std::vector<Sequence>& out)
{
    if (chain.size() == target_length) {
        Sequence found;
        found.reserve(chain.size());
        for (std::size_t index : chain) {
            found.push_back(seq[index]);
        }
        out.push_back(std::move(found));
        return;
    }
    const std::size_t last = chain.back();
    for (std::size_t next = last + 1; next < seq.size(); ++next) {
        if (seq[last].value <= seq[next].value && pair_ok(seq[last], seq[next])) {
            chain.push_back(next);
            extend_chain(seq, pair_ok, target_length, chain, out);
            chain.pop_back();
        }
    }
}

}  // namespace

std::vector<Sequence> brute_feasible(const Sequence& seq, const PairPredicate& pair_ok)
{
    if (seq.size() > 20) {
        throw std::invalid_argument("winlis::oracle::brute_feasible: sequence longer than 20 items");
    }
    std::vector<Sequence> out;
    const int target = dp_table(seq).lis_length;
    if (target == 0) {
        return out;
    }
    std::vector<std::size_t> chain;
    for (std::size_t start = 0; start < seq.size(); ++start) {
        chain.assign(1, start);
        extend_chain(seq, pair_ok, static_cast<std::size_t>(target), chain, out);
    }
    return out;
}

double dp_extreme_weight(const Sequence& seq, Extremum extremum)
{
    const DPTable table = dp_table(seq);
    if (table.lis_length == 0) {
        return 0.0;
    }
    const bool want_max = extremum == Extremum::largest;
    std::vector<double> weight(seq.size(), 0.0);
    bool any = false;
    double best = 0.0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (table.rising_length[i] == 1) {
            weight[i] = seq[i].value;
        } else {
            double prefix = weight[table.predecessors[i].front()];
            for (std::size_t j : table.predecessors[i]) {
                if (want_max ? weight[j] > prefix : weight[j] < prefix) {
                    prefix = weight[j];
                }
            }
            weight[i] = prefix + seq[i].value;
        }
        if (table.rising_length[i] == table.lis_length &&
            (!any || (want_max ? weight[i] > best : weight[i] < best))) {
            best = weight[i];
            any = true;
        }
    }
    return best;
}

namespace {

// Shared machinery for the span aggregates: a chain's gap (or width) is
// its tail value (or position) minus its head's, so the extreme span per
// tail pins an extreme head feature, and equal-feature heads never hide
// distinct chains because list values and positions are distinct along
// any predecessor level. FeatureT is double for gaps, int64 for widths.
template <typename FeatureT, typename FeatureFn>
void span_extremes(const Sequence& seq, Extremum extremum, std::size_t limit,
                   FeatureFn&& feature, FeatureT& best_out, std::size_t& count_out)
{
    const DPTable table = dp_table(seq);
    best_out = FeatureT{};
    count_out = 0;
    if (table.lis_length == 0) {
        return;
    }
    // The widest span wants the smallest head feature and vice versa.
    const bool minimize_head = extremum == Extremum::largest;
    auto saturating_add = [limit](std::size_t a, std::size_t b) {
        return std::min(limit, a + b);
    };
    std::vector<FeatureT> head(seq.size(), FeatureT{});
    std::vector<std::size_t> chains(seq.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (table.rising_length[i] == 1) {
            head[i] = feature(seq[i]);
            chains[i] = 1;
        } else {
            bool first = true;
            for (std::size_t j : table.predecessors[i]) {
                if (first || (minimize_head ? head[j] < head[i] : head[j] > head[i])) {
                    head[i] = head[j];
                    chains[i] = chains[j];
                    first = false;
                } else if (head[j] == head[i]) {
                    chains[i] = saturating_add(chains[i], chains[j]);
                }
            }
        }
        if (table.rising_length[i] != table.lis_length) {
            continue;
        }
        const FeatureT span = feature(seq[i]) - head[i];
        if (!any || (extremum == Extremum::largest ? span > best_out : span < best_out)) {
            best_out = span;
            count_out = chains[i];
            any = true;
        } else if (span == best_out) {
            count_out = saturating_add(count_out, chains[i]);
        }
    }
}

}  // namespace

double dp_extreme_gap(const Sequence& seq, Extremum extremum)
{
    double best = 0.0;
    std::size_t count = 0;
    span_extremes<double>(seq, extremum, kEnumerationCap + 1,
                          [](const Item& item) { return item.value; }, best, count);
    return best;
}

std::int64_t dp_extreme_width(const Sequence& seq, Extremum extremum)
{
    std::int64_t best = 0;
    std::size_t count = 0;
    span_extremes<std::int64_t>(seq, extremum, kEnumerationCap + 1,
                                [](const Item& item) { return item.position; }, best, count);
    return best;
}

std::size_t dp_count_extreme_gap(const Sequence& seq, Extremum extremum, std::size_t limit)
{
    double best = 0.0;
    std::size_t count = 0;
    span_extremes<double>(seq, extremum, limit,
                          [](const Item& item) { return item.value; }, best, count);
    return count;
}

std::size_t dp_count_extreme_width(const Sequence& seq, Extremum extremum, std::size_t limit)
{
    std::int64_t best = 0;
    std::size_t count = 0;
    span_extremes<std::int64_t>(seq, extremum, limit,
                                [](const Item& item) { return item.position; }, best, count);
    return count;
}

int dp_longest_feasible(const Sequence& seq, const PairPredicate& pair_ok)
{
    std::vector<int> best(seq.size(), 1);
    int longest = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (seq[j].value <= seq[i].value && pair_ok(seq[j], seq[i]) &&
                best[j] + 1 > best[i]) {
                best[i] = best[j] + 1;
            }
        }
        longest = std::max(longest, best[i]);
    }
    return longest;
}

}  // namespace winlis::oracle
