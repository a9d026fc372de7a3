#include <doctest.h>

#include "pgaut/formula.hpp"
#include "pgaut/power_graph.hpp"
#include "pgaut/search.hpp"
#include "oracles.hpp"

using namespace pgaut;

TEST_CASE("brute force: K_4, P(Z_6), path") {
    CHECK(brute_force_aut(oracles::complete_graph(4)).chain.order() == 24);
    CHECK(brute_force_aut(build_power_graph(6).graph).chain.order() == 12);
    CHECK(brute_force_aut(oracles::path_graph(3)).chain.order() == 2);
}

TEST_CASE("brute force rejects more than 10 vertices") {
    CHECK_THROWS_AS(brute_force_aut(oracles::edgeless_graph(11)), OracleTooLarge);
}

TEST_CASE("brute force survivor list is the full group") {
    auto g = brute_force_aut(build_power_graph(6).graph);
    CHECK(g.generators.size() == 12);
    for (const auto& p : g.generators)
        CHECK(is_graph_automorphism(build_power_graph(6).graph, p));
}

TEST_CASE("engine on P(Z_6): order 12, (2 4) among generators, 3-cycle member") {
    auto graph = build_power_graph(6).graph;
    auto aut = automorphism_group(graph);
    CHECK(aut.chain.order() == 12);
    auto swap24 = Permutation::from_cycles(6, {{2, 4}});
    bool has24 = false;
    for (const auto& g : aut.generators) has24 = has24 || g == swap24;
    CHECK(has24);
    CHECK(aut.chain.contains(Permutation::from_cycles(6, {{0, 1, 5}})));
    for (const auto& g : aut.generators) CHECK(is_graph_automorphism(graph, g));
}

TEST_CASE("engine on P(Z_12): order 960") {
    CHECK(automorphism_group(build_power_graph(12).graph).chain.order() == 960);
}

TEST_CASE("engine on the edgeless graph: full symmetric group") {
    CHECK(automorphism_group(oracles::edgeless_graph(5)).chain.order() == 120);
    CHECK(automorphism_group(oracles::edgeless_graph(1)).chain.order() == 1);
}

TEST_CASE("engine equals brute force on every graph in the small corpus") {
    std::vector<Graph> corpus;
    for (std::uint64_t n = 2; n <= 10; ++n)
        corpus.push_back(build_power_graph(n).graph);
    for (int m = 2; m <= 6; ++m) {
        corpus.push_back(oracles::path_graph(m));
        corpus.push_back(oracles::complete_graph(m));
        corpus.push_back(oracles::edgeless_graph(m));
    }
    for (int m = 3; m <= 8; ++m) corpus.push_back(oracles::cycle_graph(m));
    corpus.push_back(oracles::petersen_graph());
    // star K_{1,5}
    {
        Graph star(6);
        for (int v = 1; v < 6; ++v) star.add_edge(0, v);
        star.finalize();
        corpus.push_back(star);
    }
    // two disjoint triangles
    {
        Graph g(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(3, 5);
        g.finalize();
        corpus.push_back(g);
    }
    for (int s = 0; s < 8; ++s)
        corpus.push_back(oracles::random_graph(7, 0.5, 400 + s));

    for (const auto& g : corpus) {
        auto engine = automorphism_group(g);
        auto brute = brute_force_aut(g);
        CHECK(engine.chain.order() == brute.chain.order());
        for (const auto& p : engine.generators) {
            CHECK(is_graph_automorphism(g, p));
            CHECK(brute.chain.contains(p));
        }
    }
}

TEST_CASE("engine generality: cycles give 2m, Petersen gives 120") {
    for (int m = 3; m <= 12; ++m)
        CHECK(automorphism_group(oracles::cycle_graph(m)).chain.order() == 2 * m);
    CHECK(automorphism_group(oracles::petersen_graph()).chain.order() == 120);
    for (int m = 2; m <= 9; ++m)
        CHECK(automorphism_group(oracles::path_graph(m)).chain.order() == 2);
}

TEST_CASE("node budget aborts with a distinct error") {
    SearchOptions opts;
    opts.node_budget = 3;
    CHECK_THROWS_AS(automorphism_group(build_power_graph(60).graph, opts),
                    BudgetExceeded);
}

TEST_CASE("closed twin classes") {
    auto p6 = closed_twin_classes(build_power_graph(6).graph);
    REQUIRE(p6.cells.size() == 3);
    CHECK(p6.cells[0] == std::vector<int>{0, 1, 5});
    CHECK(p6.cells[1] == std::vector<int>{2, 4});
    CHECK(p6.cells[2] == std::vector<int>{3});

    auto k5 = closed_twin_classes(oracles::complete_graph(5));
    CHECK(k5.cells.size() == 1);

    auto p12 = closed_twin_classes(build_power_graph(12).graph);
    REQUIRE(p12.cells.size() == 5);
    CHECK(p12.cells[0] == std::vector<int>{0, 1, 5, 7, 11});
    CHECK(p12.cells[1] == std::vector<int>{2, 10});
    CHECK(p12.cells[2] == std::vector<int>{3, 9});
    CHECK(p12.cells[3] == std::vector<int>{4, 8});
    CHECK(p12.cells[4] == std::vector<int>{6});
}

TEST_CASE("twin lower bound: examples and divisibility") {
    CHECK(twin_lower_bound_order(build_power_graph(6).graph) == 12);
    CHECK(twin_lower_bound_order(oracles::complete_graph(4)) == 24);
    // strict on the path: bound 1 < true order 2
    CHECK(twin_lower_bound_order(oracles::path_graph(3)) == 1);

    std::vector<Graph> corpus;
    for (std::uint64_t n = 2; n <= 40; ++n)
        corpus.push_back(build_power_graph(n).graph);
    corpus.push_back(oracles::petersen_graph());
    for (int s = 0; s < 5; ++s)
        corpus.push_back(oracles::random_graph(8, 0.5, 900 + s));
    for (const auto& g : corpus) {
        BigInt bound = twin_lower_bound_order(g);
        BigInt order = automorphism_group(g).chain.order();
        CHECK(order % bound == 0);
    }
}

TEST_CASE("generator classes line up with twin classes away from prime powers") {
    for (std::uint64_t n : {6, 12, 15, 20, 30}) {
        auto pg = build_power_graph(n);
        auto twins = closed_twin_classes(pg.graph);
        auto classes = generator_classes(pg);
        // expected: {X_d : d != 1, n} plus X_1 + X_n merged
        std::vector<std::vector<int>> expect;
        std::vector<int> universal = classes.at(1);
        universal.insert(universal.end(), classes.at(n).begin(),
                         classes.at(n).end());
        std::sort(universal.begin(), universal.end());
        expect.push_back(universal);
        for (const auto& [d, members] : classes)
            if (d != 1 && d != n) expect.push_back(members);
        std::sort(expect.begin(), expect.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        CHECK(twins.cells == expect);
    }
}
