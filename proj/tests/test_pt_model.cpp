#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ptflip/pseudo_triangulation.hpp"
#include "support.hpp"

using namespace ptflip;
using test_support::convex_gon;
using test_support::random_points;
using test_support::set_A;

namespace {

PseudoTriangulation quad_with_diagonal() {
    auto ps = make_point_set({{0, 0}, {6, 0}, {6, 6}, {0, 6}});
    PseudoTriangulation T(ps);
    for (const Edge& e : T.hull_edges()) T.add_edge(e);
    T.add_edge(Edge(0, 2));
    return T;
}

} // namespace

TEST_CASE("triangulated quadrilateral validates and is pointed") {
    PseudoTriangulation T = quad_with_diagonal();
    ValidationReport rep = validate(T);
    CHECK(rep.clean());
    CHECK(rep.all_pointed());
    CHECK(T.is_pointed());
}

TEST_CASE("both diagonals cross") {
    PseudoTriangulation T = quad_with_diagonal();
    T.add_edge(Edge(1, 3));
    ValidationReport rep = validate(T);
    CHECK_FALSE(rep.clean());
    REQUIRE(rep.crossings.size() == 1);
    CHECK(rep.crossings[0] == std::pair{Edge(0, 2), Edge(1, 3)});
}

TEST_CASE("missing hull edge is reported") {
    PseudoTriangulation T = quad_with_diagonal();
    T.remove_edge(Edge(0, 1));
    ValidationReport rep = validate(T);
    CHECK_FALSE(rep.clean());
    CHECK(rep.missing_hull_edges == std::vector<Edge>{Edge(0, 1)});
}

TEST_CASE("left-shelling of the example set") {
    auto ps = set_A();
    auto [T, se] = build_left_shelling(ps);
    CHECK(T.edge_count() == 2 * 5 - 3);
    CHECK(validate(T).clean());
    CHECK(T.is_pointed());

    // derived by hand from the shelling definition: ranks 1..4 are the
    // vertices (0,6), (6,6), (2,1), (6,0)
    CHECK(se.bottom.at(2) == Edge(0, 2));
    CHECK(se.bottom.at(3) == Edge(0, 4));
    CHECK(se.top.at(2) == Edge(2, 3));
    CHECK(se.top.at(3) == Edge(2, 4));
    CHECK(se.top.at(4) == Edge(1, 2));
}

TEST_CASE("right-shelling of the example set") {
    auto ps = set_A();
    auto [T, se] = build_right_shelling(ps);
    CHECK(T.edge_count() == 7);
    CHECK(validate(T).clean());
    CHECK(T.is_pointed());
}

TEST_CASE("n=3 shelling is a single triangle") {
    auto ps = make_point_set({{0, 0}, {5, 1}, {2, 7}});
    auto [L, sl] = build_left_shelling(ps);
    auto [R, sr] = build_right_shelling(ps);
    CHECK(L.edge_count() == 3);
    CHECK(L.edges() == R.edges());
    CHECK(validate(L).clean());
}

TEST_CASE("convex position shelling is a fan from v0") {
    auto ps = convex_gon(7);
    auto [T, se] = build_left_shelling(ps);
    CHECK(validate(T).clean());
    // every top edge is the chord to the last prefix vertex, i.e. a hull edge
    for (const auto& [r, e] : se.top) {
        int prev = ps->vertex_at_rank(r - 1);
        CHECK(e == Edge(ps->vertex_at_rank(r), prev));
    }
    auto [R, sr] = build_right_shelling(ps);
    CHECK(T.edges() == R.edges()); // both are the fan at v0
}

TEST_CASE("shelling top edges are tangent to the prefix hull") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto ps = make_point_set(random_points(rng, n));
        auto [T, se] = build_left_shelling(ps);
        CHECK(validate(T).clean());
        CHECK(T.edge_count() == 2 * n - 3);
        CHECK(T.is_pointed());
        for (const auto& [r, e] : se.top) {
            int v = ps->vertex_at_rank(r);
            int t = e.other(v);
            // all earlier vertices lie on one side of the tangent line
            int pos = 0, neg = 0;
            for (int q = 0; q < r; ++q) {
                int w = ps->vertex_at_rank(q);
                if (w == t) continue;
                int s = orientation_sign(ps->at(v), ps->at(t), ps->at(w));
                (s > 0 ? pos : neg) += 1;
            }
            CHECK((pos == 0 || neg == 0));
        }
    }
}

TEST_CASE("pointedness census") {
    auto ps = set_A();
    SECTION("left-shelling is pointed") {
        auto [T, se] = build_left_shelling(ps);
        CHECK(T.is_pointed());
    }
    SECTION("full triangulation leaves the interior vertex non-pointed") {
        PseudoTriangulation T(ps);
        for (const Edge& e : T.hull_edges()) T.add_edge(e);
        for (int v : {0, 1, 2, 3}) T.add_edge(Edge(4, v));
        CHECK(validate(T).clean());
        CHECK_FALSE(T.is_pointed());
        CHECK(T.non_pointed_vertices() == std::vector<int>{4});
        CHECK(T.edge_count() == 3 * 5 - 3 - 4);
    }
    SECTION("hull-only polygon keeps every hull vertex pointed") {
        PseudoTriangulation T(ps);
        for (const Edge& e : T.hull_edges()) T.add_edge(e);
        for (int v : {0, 1, 2, 3}) CHECK(T.vertex_pointed(v));
    }
}

TEST_CASE("pointed iff edge count 2n-3 on valid pts") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        auto ps = make_point_set(random_points(rng, n));
        LabelledPT T = test_support::random_general(rng, ps, 25);
        REQUIRE(validate(T.pt).clean());
        CHECK(T.pt.is_pointed() == (T.pt.edge_count() == 2 * n - 3));
    }
}

TEST_CASE("canonical labelling") {
    SECTION("convex fan: labels 1..n-3 on the chords") {
        auto ps = convex_gon(6);
        auto [T, se] = canonical_labelling(ps);
        CHECK(T.labels.assignment().size() == 3);
        for (int r = 2; r <= 4; ++r)
            CHECK(T.labels.label_of(Edge(ps->v0(), ps->vertex_at_rank(r))) == r - 1);
    }
    SECTION("example set: internal edges get 1..2n-h-3") {
        auto ps = set_A();
        auto [T, se] = canonical_labelling(ps);
        CHECK(static_cast<int>(T.labels.assignment().size()) == 2 * 5 - 4 - 3);
        std::set<int> want = {1, 2, 3};
        CHECK(T.labels.assigned_labels() == want);
        // bottoms labelled before tops, in rank order
        CHECK(T.labels.label_of(Edge(0, 2)) == 1);
        CHECK(T.labels.label_of(Edge(0, 4)) == 2);
        CHECK(T.labels.label_of(Edge(2, 4)) == 3);
    }
    SECTION("triangle: empty labelling") {
        auto ps = make_point_set({{0, 0}, {5, 1}, {2, 7}});
        auto [T, se] = canonical_labelling(ps);
        CHECK(T.labels.assignment().empty());
    }
}

TEST_CASE("label ledger bookkeeping") {
    LabelLedger led(5, 4); // universe {1..4}
    CHECK(led.universe_size() == 4);
    led.assign(Edge(0, 2), 1);
    CHECK_THROWS_AS(led.assign(Edge(1, 3), 1), Error);
    CHECK(led.conserved());
    led.transfer(Edge(0, 2), Edge(1, 3));
    CHECK(led.label_of(Edge(1, 3)) == 1);
    CHECK(led.release(Edge(1, 3)) == 1);
    CHECK(led.is_free(1));
    CHECK(led.conserved());
}

TEST_CASE("left-shelling validates across random sets") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto ps = make_point_set(random_points(rng, n));
        auto [T, se] = build_left_shelling(ps);
        CHECK(validate(T).clean());
    }
}
