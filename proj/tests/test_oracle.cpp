#include "homsolve/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace homsolve;
using testutil::graph_from;
using testutil::random_graph;

TEST_CASE("check_hom") {
    Graph c5 = make_cycle(5);
    CHECK(check_hom(c5, c5, {1, 2, 3, 4, 5}));
    CHECK_FALSE(check_hom(make_path(2), make_path(3), {2, 2})); // constant map of an edge
    // C4 onto a single edge, alternating
    CHECK(check_hom(make_cycle(4), make_path(2), {1, 2, 1, 2}));
    CHECK_THROWS_AS(check_hom(c5, c5, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(check_hom(c5, c5, {1, 2, 3, 4, 6}), std::invalid_argument);
}

TEST_CASE("check_lihom") {
    CHECK(check_lihom(make_cycle(4), make_cycle(4), {1, 2, 3, 4}));
    // both leaves of a 2-star onto one vertex clash
    Graph star = graph_from(3, {{1, 2}, {1, 3}});
    CHECK_FALSE(check_lihom(star, make_complete(3), {1, 2, 2}));
    CHECK(check_lihom(star, make_complete(3), {1, 2, 3}));
    // C6 -> C3 by residues is locally injective
    CHECK(check_lihom(make_cycle(6), make_cycle(3), {1, 2, 3, 1, 2, 3}));
}

TEST_CASE("check_lihom equals hom plus 2-independent preimages") {
    std::mt19937 rng(149);
    auto dist_ok = [](const Graph& g, const Mapping& phi) {
        auto d = all_pairs_distances(g);
        for (size_t i = 0; i < phi.size(); ++i)
            for (size_t j = i + 1; j < phi.size(); ++j)
                if (phi[i] == phi[j] && d[i][j] >= 1 && d[i][j] <= 2)
                    return false;
        return true;
    };
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 4, m = 1 + (trial / 2) % 4;
        Graph g = random_graph(rng, n, 0.5);
        Graph h = random_graph(rng, m, 0.5);
        Mapping phi(n);
        std::uniform_int_distribution<int> img(1, m);
        for (auto& x : phi)
            x = img(rng);
        CHECK(check_lihom(g, h, phi) == (check_hom(g, h, phi) && dist_ok(g, phi)));
    }
}

TEST_CASE("check_h21") {
    Graph edge = make_path(2);
    Graph p3 = make_path(3);
    CHECK(check_h21(edge, p3, {1, 3}));       // endpoints of P3 are at distance 2
    CHECK_FALSE(check_h21(edge, p3, {1, 2})); // adjacent labels
    // distance-2 vertices need distinct labels
    CHECK_FALSE(check_h21(p3, p3, {1, 3, 1}));
    // disconnected h: unreachable labels satisfy both conditions
    Graph h2 = Graph::from_edges(2, {});
    CHECK(check_h21(edge, h2, {1, 2}));
}

TEST_CASE("check_h21 equals check_lihom into the complement") {
    std::mt19937 rng(151);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 4, m = 1 + (trial / 3) % 5;
        Graph g = random_graph(rng, n, 0.5);
        Graph h = random_graph(rng, m, 0.5);
        Graph hbar = complement(h);
        Mapping psi(n);
        std::uniform_int_distribution<int> img(1, m);
        for (auto& x : psi)
            x = img(rng);
        CHECK(check_h21(g, h, psi) == check_lihom(g, hbar, psi));
    }
}

TEST_CASE("brute search finds the lexicographically first witness") {
    auto c3_to_c5 = brute_hom(make_cycle(3), make_cycle(5));
    CHECK_FALSE(c3_to_c5.has_value());

    auto constant = brute_hom(Graph::from_edges(3, {}), make_path(1));
    REQUIRE(constant.has_value());
    CHECK(*constant == Mapping{1, 1, 1});

    Graph star = graph_from(4, {{1, 2}, {1, 3}, {1, 4}});
    auto li = brute_lihom(star, make_complete(4));
    REQUIRE(li.has_value());
    CHECK(check_lihom(star, make_complete(4), *li));
    CHECK(*li == Mapping{1, 2, 3, 4});
}

TEST_CASE("brute witnesses always pass their checkers") {
    std::mt19937 rng(157);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 1 + trial % 5, 0.4);
        Graph h = random_graph(rng, 1 + (trial * 3) % 5, 0.5);
        if (auto w = brute_hom(g, h))
            CHECK(check_hom(g, h, *w));
        if (auto w = brute_lihom(g, h))
            CHECK(check_lihom(g, h, *w));
    }
}
