#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ptg/cliques.hpp"
#include "ptg/subspace.hpp"

using namespace ptg;

TEST_CASE("grassmannian counts") {
    CHECK(grassmannian_count(3, 1) == 4);
    CHECK(grassmannian_count(5, 1) == 6);
    CHECK(grassmannian_count(7, 1) == 8);
    CHECK(grassmannian_count(3, 2) == 130);
    CHECK(grassmannian_count(3, 2) <= big_pow(3, 8));  // <= p^(2n^2)
}

TEST_CASE("subspace enumeration matches the counts and is duplicate-free") {
    FieldTower t9(3, 2);
    auto subs = enumerate_subspaces(t9, 2);
    CHECK(subs.size() == 130);
    std::set<std::string> seen;
    for (const auto& v : subs) seen.insert(subspace_to_string(t9, v));
    CHECK(seen.size() == 130);

    FieldTower t5(5, 1);
    CHECK(enumerate_subspaces(t5, 1).size() == 6);
    CHECK_THROWS_AS(enumerate_subspaces(t9, 2, 10), BudgetExceeded);
}

TEST_CASE("spans are closed under addition and scaling") {
    FieldTower tw(3, 2);
    auto subs = enumerate_subspaces(tw, 2);
    for (size_t i = 0; i < subs.size(); i += 13) {
        auto elems = span_elements(tw, subs[i]);
        CHECK(elems.size() == 9);
        std::set<Elt> inside(elems.begin(), elems.end());
        CHECK(inside.count(0) == 1);
        for (Elt x : elems)
            for (Elt y : elems) CHECK(inside.count(tw.add2(x, y)) == 1);
        for (Elt x : elems) CHECK(subspace_contains(tw, subs[i], x));
    }
}

TEST_CASE("covering numbers over the full Grassmannian at q = 9") {
    FieldTower tw(3, 2);
    auto subs = enumerate_subspaces(tw, 2);
    int lines = 0, min_nonline = 1 << 20;
    for (const auto& v : subs) {
        int cv = cover_number(tw, v);
        if (is_base_line(tw, v)) {
            ++lines;
            CHECK(cv == 1);
        } else {
            CHECK(cv >= 4);  // sqrt(q) + 1
            min_nonline = std::min(min_nonline, cv);
        }
        // partition identity: coset intersections add up to |V| - 1
        auto elems = span_elements(tw, v);
        std::map<int, int> per_coset;
        for (Elt x : elems)
            if (x != 0) ++per_coset[tw.dir_of(x)];
        int sum = 0;
        for (auto [d, cnt] : per_coset) sum += cnt;
        CHECK(sum == static_cast<int>(elems.size()) - 1);
        CHECK(static_cast<int>(per_coset.size()) == cv);
        // cover number equals the direction count of the point image
        CHECK(cv == static_cast<int>(direction_set(tw, elems).size()));
    }
    CHECK(lines == 10);        // q + 1 lines through 0
    CHECK(min_nonline == 4);   // the bound is attained
}

TEST_CASE("every size-q subspace is a clique in its own direction graph") {
    FieldTower tw(3, 2);
    for (const auto& v : enumerate_subspaces(tw, 2)) {
        auto elems = span_elements(tw, v);
        PeisertGraph g(tw, direction_set(tw, elems));
        CHECK(g.is_clique(elems));
    }
}

TEST_CASE("base lines") {
    FieldTower tw(3, 2);
    // F_q itself and v*F_q are lines
    SubspaceBasis fq{{{1, 0, 0, 0}, {0, 1, 0, 0}}};
    SubspaceBasis vfq{{{0, 0, 1, 0}, {0, 0, 0, 1}}};
    CHECK(is_base_line(tw, fq));
    CHECK(is_base_line(tw, vfq));
}

TEST_CASE("subfield witness breaks canonicity") {
    FieldTower tw(3, 2);
    auto w = subfield_witness(tw, 1);
    CHECK_FALSE(is_base_line(tw, w));
    CHECK(cover_number(tw, w) <= 4);  // (q-1)/(p^t-1)
    auto elems = span_elements(tw, w);
    CHECK(elems.size() == 9);
    // a valid non-canonical maximum clique in any graph holding its directions
    PeisertGraph g(tw, direction_set(tw, elems));
    CHECK(g.is_clique(elems));
    CHECK_FALSE(g.is_canonical(elems));

    CHECK_THROWS_AS(subfield_witness(tw, 2), FieldError);  // t must be proper
    FieldTower t5(5, 1);
    CHECK_THROWS_AS(subfield_witness(t5, 1), FieldError);  // n = 1 has no witness
}

TEST_CASE("element coordinates round-trip") {
    FieldTower tw(3, 2);
    for (Elt x = 0; x < tw.q2(); ++x) CHECK(coords_elt(tw, elt_coords(tw, x)) == x);
}

TEST_CASE("the catalog indexes every dim-n subspace with its direction mask") {
    FieldTower tw(3, 2);
    auto cat = build_subspace_catalog(tw);
    REQUIRE(cat.bases.size() == 130);
    REQUIRE(cat.elements.size() == 130);
    REQUIRE(cat.dir_masks.size() == 130);
    for (size_t i = 0; i < cat.bases.size(); ++i) {
        std::uint64_t mask = 0;
        for (Elt x : cat.elements[i])
            if (x != 0) mask |= std::uint64_t{1} << tw.dir_of(x);
        CHECK(mask == cat.dir_masks[i]);
    }
}
