#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ptg/graph.hpp"

using namespace ptg;

TEST_CASE("construction validates the direction count") {
    FieldTower tw(5, 1);
    CHECK_NOTHROW(PeisertGraph(tw, {0}));
    CHECK_THROWS_AS(PeisertGraph(tw, {}), GraphError);
    CHECK_THROWS_AS(PeisertGraph(tw, {0, 1, 2, 3, 4, 5}), GraphError);  // m > q
    CHECK_THROWS_AS(PeisertGraph(tw, {0, 7}), GraphError);              // bad code
}

TEST_CASE("single direction gives disjoint copies of K_q") {
    FieldTower tw(5, 1);
    PeisertGraph g(tw, {0});
    // components are the translates of F_q: x ~ y iff same b-coordinate
    for (Elt x = 0; x < tw.q2(); ++x)
        for (Elt y = 0; y < tw.q2(); ++y) {
            if (x == y) continue;
            CHECK(g.adjacent(x, y) == (tw.b_of(x) == tw.b_of(y)));
        }
    CHECK(g.adjacent(1, 2));  // difference -1 has direction 0
}

TEST_CASE("degree is m(q-1) for every vertex") {
    FieldTower tw(5, 1);
    PeisertGraph g(tw, {0, 1, 5});
    for (Elt x = 0; x < tw.q2(); ++x) {
        int deg = 0;
        for (Elt y = 0; y < tw.q2(); ++y)
            if (y != x && g.adjacent(x, y)) ++deg;
        CHECK(deg == 3 * (tw.q() - 1));
    }
    CHECK_THROWS_AS(g.adjacent(3, 3), GraphError);
}

TEST_CASE("canonical cliques through a vertex") {
    FieldTower tw(5, 1);
    PeisertGraph g(tw, {0, 1, 5});
    auto cliques = g.canonical_cliques_through(0);
    REQUIRE(cliques.size() == 3);
    for (const auto& c : cliques) {
        CHECK(c.size() == 5);
        CHECK(g.is_clique(c));
        CHECK(g.is_canonical(c));
        CHECK(std::count(c.begin(), c.end(), 0) == 1);
    }
    // pairwise intersection is exactly {0}
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            std::vector<Elt> inter;
            std::set_intersection(cliques[i].begin(), cliques[i].end(), cliques[j].begin(),
                                  cliques[j].end(), std::back_inserter(inter));
            CHECK(inter == std::vector<Elt>{0});
        }
    // the graph has exactly m*q distinct canonical cliques in total
    std::set<std::vector<Elt>> all;
    for (Elt x = 0; x < tw.q2(); ++x)
        for (auto& c : g.canonical_cliques_through(x)) {
            std::sort(c.begin(), c.end());
            all.insert(c);
        }
    CHECK(all.size() == 3u * 5u);
}

TEST_CASE("is_clique matches the direction test on random subsets, q = 9") {
    FieldTower tw(3, 2);
    PeisertGraph g(tw, {0, 1, 3, 7, 9});
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size_d(2, 9);
    std::uniform_int_distribution<int> elt_d(0, tw.q2() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        std::set<Elt> pick;
        int target = size_d(rng);
        while (static_cast<int>(pick.size()) < target) pick.insert(elt_d(rng));
        std::vector<Elt> c(pick.begin(), pick.end());
        bool via_s = g.is_clique(c);
        bool via_dirs = dirset_subset(direction_set(tw, c), g.dirs());
        CHECK(via_s == via_dirs);
    }
    // two elements of a non-connection coset break a clique
    int outside = 2;  // not in dirs
    CHECK_FALSE(g.has_dir(outside));
    Elt c = g.coset_rep(outside);
    CHECK_FALSE(g.is_clique({0, c}));
}

TEST_CASE("is_canonical is the collinearity test, translation invariant") {
    FieldTower tw(5, 1);
    PeisertGraph g(tw, {0, 1, 5});
    auto canon = g.canonical_cliques_through(0).front();
    CHECK(g.is_canonical(canon));
    for (Elt w = 0; w < tw.q2(); ++w) {
        std::vector<Elt> shifted;
        for (Elt x : canon) shifted.push_back(tw.add2(x, w));
        std::sort(shifted.begin(), shifted.end());
        CHECK(g.is_canonical(shifted));
    }
    CHECK_THROWS_AS(g.is_canonical({0, 1}), GraphError);  // wrong size
}

TEST_CASE("cliques are invariant under translation, exhaustively at q = 5") {
    FieldTower tw(5, 1);
    PeisertGraph g(tw, {0, 2, 4});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> elt_d(0, tw.q2() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<Elt> pick;
        while (pick.size() < 3) pick.insert(elt_d(rng));
        std::vector<Elt> c(pick.begin(), pick.end());
        bool base = g.is_clique(c);
        for (Elt w = 0; w < tw.q2(); ++w) {
            std::vector<Elt> shifted;
            for (Elt x : c) shifted.push_back(tw.add2(x, w));
            CHECK(g.is_clique(shifted) == base);
        }
    }
}

TEST_CASE("strongly regular parameters") {
    FieldTower t5(5, 1);
    auto p5 = PeisertGraph(t5, {0, 1, 5}).srg_parameters();
    REQUIRE(p5.has_value());
    CHECK(p5->vertices == 25);
    CHECK(p5->degree == 12);
    CHECK(p5->lambda == 5);
    CHECK(p5->mu == 6);

    FieldTower t9(3, 2);
    auto a = PeisertGraph(t9, {0, 1, 2, 3, 4}).srg_parameters();
    auto b = PeisertGraph(t9, {0, 2, 5, 7, 9}).srg_parameters();
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->vertices == 81);
    CHECK(a->degree == 40);
    CHECK(a->lambda == 19);  // m(m-1) + q - 2m
    CHECK(a->mu == 20);      // m(m-1)
    CHECK(a->vertices == b->vertices);
    CHECK(a->degree == b->degree);
    CHECK(a->lambda == b->lambda);
    CHECK(a->mu == b->mu);
}

TEST_CASE("graph keys round-trip") {
    FieldTower t9(3, 2);
    PeisertGraph g(t9, {0, 3, 9});
    std::string key = g.key();
    CHECK(PeisertGraph::key_q(key) == 9);
    CHECK(PeisertGraph::from_key(t9, key).dirs() == g.dirs());
    CHECK_THROWS_AS(PeisertGraph::from_key(t9, "nonsense"), GraphError);
}
