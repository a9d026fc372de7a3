#include <doctest.h>

#include <random>

#include "pgaut/schreier.hpp"
#include "oracles.hpp"

using namespace pgaut;

TEST_CASE("permutation basics") {
    auto id = Permutation::identity(5);
    CHECK(id.is_identity());
    CHECK(id.smallest_moved_point() == -1);

    auto t = Permutation::from_cycles(5, {{0, 1}});
    CHECK_FALSE(t.is_identity());
    CHECK(t.smallest_moved_point() == 0);
    CHECK(t(0) == 1);
    CHECK(t(1) == 0);
    CHECK(compose(t, t).is_identity());
    CHECK(t.inverse() == t);

    auto c = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
    CHECK(compose(c, c.inverse()).is_identity());
    // (f*g)(x) = f(g(x))
    CHECK(compose(c, t)(0) == c(t(0)));

    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK(t.cycle_string() == "(0 1)");
}

TEST_CASE("group order: identity-only and a transposition") {
    auto g0 = group_from_generators(4, {});
    CHECK(group_order(g0) == 1);
    CHECK(group_contains(g0, Permutation::identity(4)));
    CHECK_FALSE(group_contains(g0, Permutation::from_cycles(4, {{0, 1}})));

    auto g1 = group_from_generators(2, {Permutation::from_cycles(2, {{0, 1}})});
    CHECK(group_order(g1) == 2);
}

TEST_CASE("group order: S_5 from a transposition and a 5-cycle") {
    std::vector<Permutation> gens = {
        Permutation::from_cycles(5, {{0, 1}}),
        Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
    auto g = group_from_generators(5, gens);
    CHECK(group_order(g) == 120);
    CHECK(group_order(g) == oracles::closure_size(5, gens));
}

TEST_CASE("group order matches brute closure on assorted small groups") {
    struct Case {
        int degree;
        std::vector<Permutation> gens;
    };
    std::vector<Case> cases;
    // dihedral group of the square
    cases.push_back({4,
                     {Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                      Permutation::from_cycles(4, {{1, 3}})}});
    // alternating group A_4
    cases.push_back({4,
                     {Permutation::from_cycles(4, {{0, 1, 2}}),
                      Permutation::from_cycles(4, {{1, 2, 3}})}});
    // Klein four group acting on 4 points
    cases.push_back({4,
                     {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                      Permutation::from_cycles(4, {{0, 2}, {1, 3}})}});
    // C_6 as a product of disjoint cycles
    cases.push_back({5, {Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}})}});

    for (const auto& c : cases) {
        auto g = group_from_generators(c.degree, c.gens);
        CHECK(group_order(g) == oracles::closure_size(c.degree, c.gens));
    }
}

TEST_CASE("random subgroups of S_6: order equals closure size") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> im(6);
        std::vector<Permutation> gens;
        for (int k = 0; k < 2; ++k) {
            std::iota(im.begin(), im.end(), 0);
            std::shuffle(im.begin(), im.end(), rng);
            gens.push_back(Permutation(im));
        }
        auto g = group_from_generators(6, gens);
        CHECK(group_order(g) == oracles::closure_size(6, gens));
    }
}

TEST_CASE("membership of random words in the generators") {
    std::vector<Permutation> gens = {
        Permutation::from_cycles(7, {{0, 1, 2}}),
        Permutation::from_cycles(7, {{2, 3}, {4, 5, 6}})};
    auto g = group_from_generators(7, gens);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int t = 0; t < 50; ++t) {
        Permutation word = Permutation::identity(7);
        int len = 1 + int(rng() % 8);
        for (int i = 0; i < len; ++i) word = compose(word, gens[pick(rng)]);
        CHECK(group_contains(g, word));
    }
    // something outside the group (an odd transposition not generated)
    CHECK(group_order(g) == oracles::closure_size(7, gens));
}
