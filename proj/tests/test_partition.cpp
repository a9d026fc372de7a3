#include <doctest.h>

#include "pgaut/partition.hpp"
#include "pgaut/power_graph.hpp"
#include "oracles.hpp"

using namespace pgaut;

namespace {

bool is_equitable(const Graph& g, const OrderedPartition& p) {
    for (const auto& target : p.cells) {
        Bitset mask(g.vertex_count());
        for (int v : target) mask.set(v);
        for (const auto& cell : p.cells) {
            std::size_t first = Bitset::and_count(g.row(cell[0]), mask);
            for (int v : cell)
                if (Bitset::and_count(g.row(v), mask) != first) return false;
        }
    }
    return true;
}

bool refines(const OrderedPartition& fine, const OrderedPartition& coarse) {
    // every fine cell inside some coarse cell, coarse order preserved
    std::size_t ci = 0;
    std::size_t consumed = 0;
    for (const auto& cell : fine.cells) {
        while (ci < coarse.cells.size() && consumed == coarse.cells[ci].size()) {
            ++ci;
            consumed = 0;
        }
        if (ci >= coarse.cells.size()) return false;
        for (int v : cell) {
            const auto& cc = coarse.cells[ci];
            if (std::find(cc.begin(), cc.end(), v) == cc.end()) return false;
        }
        consumed += cell.size();
    }
    return true;
}

}  // namespace

TEST_CASE("refine: unit partition on a complete graph stays one cell") {
    auto g = oracles::complete_graph(7);
    auto p = refine(g, OrderedPartition::unit(7));
    REQUIRE(p.cells.size() == 1);
    CHECK(p.cells[0].size() == 7);
}

TEST_CASE("refine: unit partition on P(Z_6) gives {0,1,5},{2,4},{3}") {
    auto g = build_power_graph(6).graph;
    auto p = refine(g, OrderedPartition::unit(6));
    REQUIRE(p.cells.size() == 3);
    CHECK(p.cells[0] == std::vector<int>{0, 1, 5});
    CHECK(p.cells[1] == std::vector<int>{2, 4});
    CHECK(p.cells[2] == std::vector<int>{3});
}

TEST_CASE("refine: discrete partition unchanged") {
    auto g = build_power_graph(6).graph;
    auto p = refine(g, OrderedPartition::discrete(6));
    CHECK(p == OrderedPartition::discrete(6));
}

TEST_CASE("refine is idempotent, equitable, and order-preserving") {
    std::vector<Graph> graphs;
    for (std::uint64_t n : {6, 12, 30, 45, 60})
        graphs.push_back(build_power_graph(n).graph);
    graphs.push_back(oracles::petersen_graph());
    graphs.push_back(oracles::cycle_graph(9));
    graphs.push_back(oracles::path_graph(8));
    for (int s = 0; s < 5; ++s)
        graphs.push_back(oracles::random_graph(10, 0.4, 100 + s));

    for (const auto& g : graphs) {
        auto once = refine(g, OrderedPartition::unit(g.vertex_count()));
        CHECK(is_equitable(g, once));
        CHECK(refine(g, once) == once);
        CHECK(refines(once, OrderedPartition::unit(g.vertex_count())));
    }
}

TEST_CASE("individualize splits the chosen cell, singleton first") {
    OrderedPartition p;
    p.cells = {{0, 1, 5}, {2, 4}, {3}};
    auto q = individualize(p, 0, 1);
    REQUIRE(q.cells.size() == 4);
    CHECK(q.cells[0] == std::vector<int>{1});
    CHECK(q.cells[1] == std::vector<int>{0, 5});
    CHECK(q.cells[2] == std::vector<int>{2, 4});
    CHECK(q.cells[3] == std::vector<int>{3});
    CHECK_THROWS_AS(individualize(p, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(individualize(p, 0, 3), std::invalid_argument);
}

TEST_CASE("refine_from_split agrees with full refinement") {
    for (std::uint64_t n : {12, 30, 60}) {
        auto g = build_power_graph(n).graph;
        auto base = refine(g, OrderedPartition::unit(g.vertex_count()));
        for (std::size_t c = 0; c < base.cells.size(); ++c) {
            if (base.cells[c].size() < 2) continue;
            auto split = individualize(base, int(c), base.cells[c][0]);
            CHECK(refine_from_split(g, split, int(c)) == refine(g, split));
        }
    }
}

TEST_CASE("refine on P(Z_12) reaches the generator-class partition") {
    auto g = build_power_graph(12).graph;
    auto p = refine(g, OrderedPartition::unit(12));
    REQUIRE(p.cells.size() == 5);
    CHECK(p.cells[0] == std::vector<int>{0, 1, 5, 7, 11});
}
