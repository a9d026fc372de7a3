#include <doctest.h>

#include "pgaut/arithmetic.hpp"
#include "pgaut/formula.hpp"
#include "pgaut/power_graph.hpp"
#include "pgaut/search.hpp"

using namespace pgaut;

TEST_CASE("formula: n=6 decomposition") {
    auto dec = aut_order_formula(6);
    CHECK_FALSE(dec.prime_power);
    CHECK(dec.order == 12);
    REQUIRE(dec.factors.size() == 2);
    CHECK(dec.factors[0] == std::pair<std::uint64_t, std::uint64_t>{2, 1});
    CHECK(dec.factors[1] == std::pair<std::uint64_t, std::uint64_t>{3, 2});
    CHECK(dec.top_factor == 3);
}

TEST_CASE("formula: prime-power branch") {
    auto dec = aut_order_formula(4);
    CHECK(dec.prime_power);
    CHECK(dec.order == 24);
    CHECK(dec.factors.empty());
    CHECK(dec.top_factor == 4);

    CHECK(aut_order_formula(1).order == 1);
    CHECK(aut_order_formula(2).order == 2);
    CHECK(aut_order_formula(7).order == 5040);
    CHECK(aut_order_formula(9).order == 362880);
    CHECK_THROWS_AS(aut_order_formula(0), std::invalid_argument);
}

TEST_CASE("formula: n=12 gives 960") {
    auto dec = aut_order_formula(12);
    CHECK(dec.order == 960);
    CHECK(dec.top_factor == 5);
    REQUIRE(dec.factors.size() == 4);
}

TEST_CASE("multiplicities plus top factor partition the vertex set") {
    for (std::uint64_t n = 1; n <= 400; ++n) {
        auto dec = aut_order_formula(n);
        std::uint64_t total = dec.top_factor;
        for (auto [d, phi] : dec.factors) {
            total += phi;
            CHECK(phi == euler_phi(d));
            CHECK(n % d == 0);
        }
        CHECK(total == n);
    }
}

TEST_CASE("formula equals brute force for n in [2,10]") {
    for (std::uint64_t n = 2; n <= 10; ++n)
        CHECK(aut_order_formula(n).order ==
              brute_force_aut(build_power_graph(n).graph).chain.order());
}

TEST_CASE("formula equals engine and twin bound on a sample") {
    for (std::uint64_t n : {12, 15, 18, 20, 24, 30, 36, 45, 60, 72, 90, 100}) {
        auto graph = build_power_graph(n).graph;
        BigInt expect = aut_order_formula(n).order;
        CHECK(automorphism_group(graph).chain.order() == expect);
        CHECK(twin_lower_bound_order(graph) == expect);
    }
}

TEST_CASE("order exceeds 64 bits without overflow (n = 120 involves 33!)") {
    auto dec = aut_order_formula(120);
    CHECK(dec.top_factor == 33);
    CHECK(dec.order % factorial(33) == 0);
    CHECK(to_decimal(dec.order).size() > 20);
}
