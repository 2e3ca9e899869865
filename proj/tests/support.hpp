#pragma once

// Shared fixtures and independent mini-oracles for the test suites. The
// oracles here deliberately avoid the library's own algorithms: brute-force
// hulls via half-plane checks, sign-of-determinant via big integers, etc.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "ptflip/flip_engine.hpp"
#include "ptflip/point_set.hpp"
#include "ptflip/pseudo_triangulation.hpp"

namespace test_support {

using namespace ptflip;

// The five-point square-plus-interior set used throughout the examples
// (shelling order: v0=(0,0), then (0,6), (6,6), (2,1), (6,0)).
inline PointSetPtr set_A() {
    return make_point_set({{0, 0}, {6, 0}, {6, 6}, {0, 6}, {2, 1}});
}

inline PointSetPtr convex_gon(int n, Coord radius = 1000) {
    // Vertices of a regular-ish polygon snapped to integers; spacing keeps
    // general position for the small n used in tests.
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * 3.14159265358979323846 * i / n + 0.35;
        pts.push_back({static_cast<Coord>(radius * std::cos(a)),
                       static_cast<Coord>(radius * std::sin(a))});
    }
    return make_point_set(std::move(pts));
}

// Brute-force hull membership: v is on the hull iff some line through v
// keeps all other points strictly on one side.
inline bool brute_on_hull(const std::vector<Point>& pts, std::size_t v) {
    const std::size_t n = pts.size();
    for (std::size_t w = 0; w < n; ++w) {
        if (w == v) continue;
        int pos = 0, neg = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (x == v || x == w) continue;
            int s = orientation_sign(pts[v], pts[w], pts[x]);
            (s > 0 ? pos : neg) += 1;
        }
        if (pos == 0 || neg == 0) return true;
    }
    return false;
}

// Deterministic general-position point generator for property tests.
inline std::vector<Point> random_points(std::mt19937_64& rng, int n, Coord span = 60) {
    std::vector<Point> pts;
    auto draw = [&]() -> Coord { return static_cast<Coord>(rng() % (2 * span + 1)) - span; };
    while (static_cast<int>(pts.size()) < n) {
        Point p{draw(), draw()};
        bool ok = true;
        for (const Point& q : pts)
            if (q == p) ok = false;
        for (std::size_t i = 0; ok && i < pts.size(); ++i)
            for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
                if (orientation(pts[i], pts[j], p) == Orientation::Collinear) ok = false;
        if (ok) pts.push_back(p);
    }
    return pts;
}

inline PointSetPtr random_set(std::mt19937_64& rng, int n, Coord span = 60) {
    return make_point_set(random_points(rng, n, span));
}

// Random pointed pseudo-triangulation: canonical labelling shaken by random
// exchanging flips.
inline LabelledPT random_pointed(std::mt19937_64& rng, const PointSetPtr& ps, int shakes = 30) {
    LabelledPT T = canonical_labelling(ps).first;
    for (int i = 0; i < shakes; ++i) {
        std::vector<Edge> internal = T.pt.internal_edges();
        if (internal.empty()) break;
        exchanging_flip(T, internal[rng() % internal.size()]);
    }
    return T;
}

// Random general pseudo-triangulation: mixes insertion, deletion and
// exchanging flips starting from the canonical pointed one.
inline LabelledPT random_general(std::mt19937_64& rng, const PointSetPtr& ps, int steps = 40) {
    LabelledPT T = canonical_labelling(ps).first;
    for (int i = 0; i < steps; ++i) {
        int kind = static_cast<int>(rng() % 3);
        if (kind == 0) {
            std::vector<Edge> internal = T.pt.internal_edges();
            std::vector<Edge> flippable;
            for (const Edge& e : internal)
                if (try_exchange_replacement(T.pt, e)) flippable.push_back(e);
            if (!flippable.empty()) exchanging_flip(T, flippable[rng() % flippable.size()]);
        } else if (kind == 1) {
            std::vector<Edge> candidates;
            for (int u = 0; u < ps->n(); ++u)
                for (int v = u + 1; v < ps->n(); ++v)
                    if (!T.pt.has_edge(Edge(u, v)) && can_insert(T.pt, Edge(u, v)))
                        candidates.push_back(Edge(u, v));
            if (!candidates.empty() && !T.labels.free_pool().empty()) {
                int label = *T.labels.free_pool().begin();
                insertion_flip(T, candidates[rng() % candidates.size()], label);
            }
        } else {
            std::vector<Edge> deletable;
            for (const Edge& e : T.pt.internal_edges())
                if (can_delete(T.pt, e)) deletable.push_back(e);
            if (!deletable.empty()) deletion_flip(T, deletable[rng() % deletable.size()]);
        }
    }
    return T;
}

} // namespace test_support
