#include <doctest.h>

#include "test_support.hpp"
#include "winlis/oracle.hpp"
#include "winlis/qnlist.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace winlis;

namespace {

const std::vector<double> kExample = {3, 9, 6, 2, 8, 5, 7};

const Node* at_position(const QNList& structure, std::int64_t position)
{
    for (const Node* node : structure.arrival_order()) {
        if (node->position == position) {
            return node;
        }
    }
    return nullptr;
}

std::vector<double> list_values(const QNList& structure, int level)
{
    std::vector<double> values;
    for (const Node* node = structure.list(level).head; node; node = node->right) {
        values.push_back(node->value);
    }
    return values;
}

std::int64_t position_of(const Node* node)
{
    return node ? node->position : -1;
}

}  // namespace

TEST_CASE("building the example yields the expected level lists")
{
    const QNList structure = QNList::from_values(kExample);
    REQUIRE(structure.list_count() == 3);
    CHECK(structure.size() == 7);
    CHECK(list_values(structure, 1) == std::vector<double>{3, 2});
    CHECK(list_values(structure, 2) == std::vector<double>{9, 6, 5});
    CHECK(list_values(structure, 3) == std::vector<double>{8, 7});
    CHECK(structure.check_invariants().ok);
}

TEST_CASE("up links point to the newest earlier item one level up")
{
    const QNList structure = QNList::from_values(kExample);
    CHECK(position_of(at_position(structure, 2)->up) == 1);  // 9 -> 3
    CHECK(position_of(at_position(structure, 3)->up) == 1);  // 6 -> 3
    CHECK(position_of(at_position(structure, 6)->up) == 4);  // 5 -> 2
    CHECK(position_of(at_position(structure, 5)->up) == 3);  // 8 -> 6
    CHECK(position_of(at_position(structure, 7)->up) == 6);  // 7 -> 5
    CHECK(at_position(structure, 1)->up == nullptr);
    CHECK(at_position(structure, 4)->up == nullptr);
}

TEST_CASE("down links point to the newest earlier item one level down")
{
    const QNList structure = QNList::from_values(kExample);
    CHECK(at_position(structure, 1)->down == nullptr);       // nothing below 3 yet
    CHECK(position_of(at_position(structure, 4)->down) == 3);  // 2 -> 6
    CHECK(at_position(structure, 2)->down == nullptr);
    CHECK(at_position(structure, 3)->down == nullptr);
    CHECK(position_of(at_position(structure, 6)->down) == 5);  // 5 -> 8
    CHECK(at_position(structure, 5)->down == nullptr);
    CHECK(at_position(structure, 7)->down == nullptr);
}

TEST_CASE("levels equal the quadratic rising lengths")
{
    const QNList structure = QNList::from_values(kExample);
    const auto lengths = oracle::dp_rising_lengths(oracle::make_sequence(kExample));
    const auto nodes = structure.arrival_order();
    REQUIRE(nodes.size() == lengths.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        CHECK(nodes[i]->level == lengths[i]);
        CHECK(rising_length(*nodes[i]) == lengths[i]);
    }
}

TEST_CASE("predecessor blocks via the up link")
{
    const QNList structure = QNList::from_values(kExample);
    auto positions = [&](std::int64_t pos) {
        std::vector<std::int64_t> out;
        for (const Node* p : predecessors(*at_position(structure, pos))) {
            out.push_back(p->position);
        }
        return out;
    };
    CHECK(positions(7) == std::vector<std::int64_t>{3, 6});  // 7 after 6 or 5
    CHECK(positions(5) == std::vector<std::int64_t>{3});     // 8 only after 6
    CHECK(positions(6) == std::vector<std::int64_t>{1, 4});  // 5 after 3 or 2
    CHECK(positions(1).empty());
    CHECK(positions(4).empty());
}

TEST_CASE("equal values land on separate lists")
{
    const QNList structure = QNList::from_values({5, 5, 5});
    REQUIRE(structure.list_count() == 3);
    CHECK(list_values(structure, 1) == std::vector<double>{5});
    CHECK(list_values(structure, 2) == std::vector<double>{5});
    CHECK(list_values(structure, 3) == std::vector<double>{5});
    CHECK(structure.check_invariants().ok);
}

TEST_CASE("insert returns the landing level")
{
    QNList structure;
    CHECK(structure.insert(4, 1) == 1);
    CHECK(structure.insert(9, 2) == 2);
    CHECK(structure.insert(7, 3) == 2);
    CHECK(structure.insert(1, 4) == 1);
    CHECK(structure.insert(8, 5) == 3);
}

TEST_CASE("a descending stream keeps one list and one probe per insert")
{
    QNList structure;
    structure.insert(1000, 1);
    CHECK(structure.last_insert_probes() == 0);  // nothing to probe yet
    for (int i = 2; i <= 1000; ++i) {
        structure.insert(1000 - i, i);
        CHECK(structure.list_count() == 1);
        CHECK(structure.last_insert_probes() == 1);
    }
    CHECK(structure.total_insert_probes() == 999);
    CHECK(structure.insert_count() == 1000);
}

TEST_CASE("probe count is logarithmic in the list count")
{
    std::mt19937 rng(11);
    for (const bool reals : {false, true}) {
        QNList structure;
        const auto values = reals ? testsupport::real_values(rng, 600)
                                  : testsupport::digit_values(rng, 600);
        std::int64_t position = 0;
        for (double v : values) {
            const int before = structure.list_count();
            structure.insert(v, ++position);
            if (before >= 1) {
                const auto bound = static_cast<std::size_t>(
                    std::ceil(std::log2(static_cast<double>(before))) + 1.0);
                CHECK(structure.last_insert_probes() <= bound);
            }
        }
        CHECK(structure.check_invariants().ok);
    }
}

TEST_CASE("random builds keep all structural invariants")
{
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::size_t> length(1, 80);
    for (int round = 0; round < 60; ++round) {
        const auto values = round % 2 == 0
                                ? testsupport::digit_values(rng, length(rng))
                                : testsupport::real_values(rng, length(rng));
        const QNList structure = QNList::from_values(values);
        const InvariantReport report = structure.check_invariants();
        INFO(report.detail);
        CHECK(report.ok);
        CHECK(report.node_count == values.size());
        CHECK(report.link_count <= 4 * values.size());
        // Levels must partition the items exactly as the DP does.
        const auto lengths = oracle::dp_rising_lengths(oracle::make_sequence(values));
        const auto nodes = structure.arrival_order();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            CHECK(nodes[i]->level == lengths[i]);
        }
    }
}

TEST_CASE("insert rejects bad values and stale positions")
{
    QNList structure;
    structure.insert(1.5, 3);
    CHECK_THROWS_AS(structure.insert(std::nan(""), 4), std::invalid_argument);
    CHECK_THROWS_AS(structure.insert(1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(structure.insert(1.0, 2), std::invalid_argument);
    CHECK(structure.insert(1.0, 4) == 1);
    CHECK(structure.size() == 2);
}

TEST_CASE("arrival order reports items oldest first")
{
    const QNList structure = QNList::from_values(kExample);
    const auto nodes = structure.arrival_order();
    REQUIRE(nodes.size() == 7);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        CHECK(nodes[i]->position == static_cast<std::int64_t>(i + 1));
        CHECK(nodes[i]->value == kExample[i]);
    }
    CHECK(structure.oldest() == nodes.front());
    CHECK(structure.last_position() == 7);
}
