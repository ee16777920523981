#pragma once

#include "winlis/oracle.hpp"
#include "winlis/qnlist.hpp"
#include "winlis/queries.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

inline std::vector<double> digit_values(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> digit(0, 9);
    std::vector<double> values(n);
    for (double& v : values) {
        v = static_cast<double>(digit(rng));
    }
    return values;
}

inline std::vector<double> real_values(std::mt19937& rng, std::size_t n)
{
    std::uniform_real_distribution<double> real(-100.0, 100.0);
    std::vector<double> values(n);
    for (double& v : values) {
        v = real(rng);
    }
    return values;
}

// Canonical chain form for set comparison: (position, value) pairs,
// chains sorted lexicographically.
using Chain = std::vector<std::pair<std::int64_t, double>>;

inline Chain canonical_chain(const winlis::ResultSequence& seq)
{
    Chain chain;
    chain.reserve(seq.items.size());
    for (const winlis::SequenceItem& item : seq.items) {
        chain.emplace_back(item.position, item.value);
    }
    return chain;
}

inline Chain canonical_chain(const winlis::oracle::Sequence& seq)
{
    Chain chain;
    chain.reserve(seq.size());
    for (const winlis::oracle::Item& item : seq) {
        chain.emplace_back(item.position, item.value);
    }
    return chain;
}

template <typename Seqs>
std::vector<Chain> canonical_set(const Seqs& sequences)
{
    std::vector<Chain> out;
    out.reserve(sequences.size());
    for (const auto& seq : sequences) {
        out.push_back(canonical_chain(seq));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Rebuilds a structure from another's live items, keeping the original
// stream positions, so a maintained window can be checked against a
// from-scratch build.
inline winlis::QNList rebuild(const winlis::QNList& live)
{
    winlis::QNList fresh;
    for (const winlis::Node* node : live.arrival_order()) {
        fresh.insert(node->value, node->position);
    }
    return fresh;
}

// Node-for-node equality of two structures: same lists, same items in
// the same order, and the same four links everywhere (matched by
// position, the stable item identity). On mismatch, `detail` names the
// first difference.
inline bool structures_identical(const winlis::QNList& a, const winlis::QNList& b,
                                 std::string* detail = nullptr)
{
    auto fail = [detail](std::string message) {
        if (detail) {
            *detail = std::move(message);
        }
        return false;
    };
    if (a.size() != b.size()) {
        return fail("sizes differ");
    }
    if (a.list_count() != b.list_count()) {
        return fail("list counts differ");
    }
    auto link_position = [](const winlis::Node* node) {
        return node ? node->position : -1;
    };
    for (int level = 1; level <= a.list_count(); ++level) {
        const winlis::Node* x = a.list(level).head;
        const winlis::Node* y = b.list(level).head;
        while (x || y) {
            if (!x || !y) {
                return fail("list " + std::to_string(level) + " lengths differ");
            }
            if (x->value != y->value || x->position != y->position) {
                return fail("list " + std::to_string(level) + " items differ at position " +
                            std::to_string(x->position));
            }
            if (link_position(x->left) != link_position(y->left) ||
                link_position(x->right) != link_position(y->right) ||
                link_position(x->up) != link_position(y->up) ||
                link_position(x->down) != link_position(y->down)) {
                return fail("links differ at position " + std::to_string(x->position) +
                            " (level " + std::to_string(level) + ")");
            }
            x = x->right;
            y = y->right;
        }
    }
    return true;
}

// The window contents in arrival order as an oracle sequence, keeping
// stream positions.
inline winlis::oracle::Sequence oracle_sequence(const winlis::QNList& structure)
{
    winlis::oracle::Sequence seq;
    for (const winlis::Node* node : structure.arrival_order()) {
        seq.push_back(winlis::oracle::Item{node->value, node->position});
    }
    return seq;
}

}  // namespace testsupport
