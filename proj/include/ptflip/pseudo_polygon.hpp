#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <variant>
#include <vector>

#include "ptflip/pseudo_triangulation.hpp"

namespace ptflip {

// A weakly simple polygon with identified corners. Vertices may repeat at
// pinch points and antennae, so corner flags attach to walk positions.
struct PseudoPolygon {
    PointSetPtr ps;
    std::vector<int> walk;      // ccw
    std::vector<bool> corner;   // per position
    int k = 0;                  // corner count

    int size() const { return static_cast<int>(walk.size()); }
    int at(int i) const {
        int m = size();
        return walk[static_cast<std::size_t>(((i % m) + m) % m)];
    }

    std::vector<int> corner_positions() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (corner[static_cast<std::size_t>(i)]) out.push_back(i);
        return out;
    }

    std::vector<int> distinct_vertices() const {
        std::set<int> s(walk.begin(), walk.end());
        return {s.begin(), s.end()};
    }

    bool is_walk_edge(Edge e) const {
        for (int i = 0; i < size(); ++i)
            if (Edge(at(i), at(i + 1)) == e) return true;
        return false;
    }
};

inline PseudoPolygon polygon_from_face(const PointSetPtr& ps, const Face& f) {
    PseudoPolygon X;
    X.ps = ps;
    X.walk = f.walk;
    X.corner = f.corner;
    X.k = f.corner_count;
    return X;
}

// Build a polygon from an explicit ccw walk, deriving the corner flags.
inline PseudoPolygon standalone_polygon(const PointSetPtr& ps, std::vector<int> walk) {
    PseudoPolygon X;
    X.ps = ps;
    X.walk = std::move(walk);
    const int m = X.size();
    X.corner.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        bool c = orientation(ps->at(X.at(i - 1)), ps->at(X.at(i)), ps->at(X.at(i + 1))) ==
                 Orientation::CounterClockwise;
        X.corner[static_cast<std::size_t>(i)] = c;
        if (c) ++X.k;
    }
    return X;
}

namespace detail {

inline std::vector<int> normalized_cycle(const std::vector<int>& walk) {
    const std::size_t m = walk.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < m; ++s) {
        for (std::size_t i = 0; i < m; ++i) {
            int a = walk[(s + i) % m], b = walk[(best + i) % m];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    std::vector<int> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = walk[(best + i) % m];
    return out;
}

// The single bounded face of T minus `removed` that was not a face of T.
inline Face merged_face_after_removal(const PseudoTriangulation& T,
                                      const std::vector<Edge>& removed) {
    std::set<std::vector<int>> before;
    for (const Face& f : T.faces())
        if (!f.outer) before.insert(normalized_cycle(f.walk));
    std::set<Edge> edges = T.edges();
    for (const Edge& e : removed) edges.erase(e);
    FaceSet after = compute_faces(T.point_set(), edges);
    const Face* found = nullptr;
    for (const Face& f : after.faces) {
        if (f.outer || before.count(normalized_cycle(f.walk))) continue;
        if (found)
            throw Error(ErrorCode::PipelineError, "edge removal produced more than one new face");
        found = &f;
    }
    if (!found) throw Error(ErrorCode::PipelineError, "edge removal produced no new face");
    return *found;
}

// Interior angular sector of the face at walk position i: from the outgoing
// direction ccw to the reversed incoming direction.
inline std::pair<Point, Point> interior_sector(const PseudoPolygon& X, int i) {
    Point cur = X.ps->at(X.at(i));
    Point out_dir = sub(X.ps->at(X.at(i + 1)), cur);
    Point in_rev = sub(X.ps->at(X.at(i - 1)), cur);
    return {out_dir, in_rev};
}

inline bool dir_enters_interior_at(const PseudoPolygon& X, int vertex, Point dir) {
    for (int i = 0; i < X.size(); ++i) {
        if (X.at(i) != vertex) continue;
        auto [s, e] = interior_sector(X, i);
        if (dir_strictly_in_ccw_sector(s, e, dir)) return true;
    }
    return false;
}

// Open segment pq lies in the closed interior of X (touching the boundary
// only at its endpoints). Under general position it suffices that the
// segment locally enters the interior at both ends and properly crosses no
// walk edge.
inline bool diagonal_in_closed_interior(const PseudoPolygon& X, int p, int q) {
    if (p == q) return false;
    if (X.is_walk_edge(Edge(p, q))) return false;
    Point pp = X.ps->at(p), pq = X.ps->at(q);
    if (!dir_enters_interior_at(X, p, sub(pq, pp))) return false;
    if (!dir_enters_interior_at(X, q, sub(pp, pq))) return false;
    for (int i = 0; i < X.size(); ++i) {
        Point a = X.ps->at(X.at(i));
        Point b = X.ps->at(X.at(i + 1));
        if (segments_properly_cross(pp, pq, a, b)) return false;
    }
    return true;
}

// Does vertex p keep a reflex angle when the diagonal pq is added to the
// polygon-local rotation (walk edges at p plus the candidate)?
inline bool pointed_after_insertion(const PseudoPolygon& X, int p, int q) {
    std::set<int> nbrs;
    for (int i = 0; i < X.size(); ++i) {
        if (X.at(i) == p) {
            nbrs.insert(X.at(i - 1));
            nbrs.insert(X.at(i + 1));
        }
    }
    nbrs.insert(q);
    Point o = X.ps->at(p);
    std::vector<Point> dirs;
    for (int w : nbrs) dirs.push_back(sub(X.ps->at(w), o));
    if (dirs.size() <= 1) return true;
    std::sort(dirs.begin(), dirs.end(),
              [](Point a, Point b) { return ccw_direction_less(a, b); });
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        Point d1 = dirs[i];
        Point d2 = dirs[(i + 1) % dirs.size()];
        if (cross(d1, d2) < 0) return true;
    }
    return false;
}

} // namespace detail

// Merge the two faces incident to an internal edge into one pseudo-polygon.
inline PseudoPolygon face_merge(const PseudoTriangulation& T, Edge e) {
    if (!T.has_edge(e))
        throw Error(ErrorCode::InvalidInput, "edge " + to_string(e) + " not in triangulation");
    if (T.is_hull_edge(e))
        throw Error(ErrorCode::NotFlippable, "cannot merge across hull edge " + to_string(e));
    Face f = detail::merged_face_after_removal(T, {e});
    return polygon_from_face(T.point_set_ptr(), f);
}

// All diagonals that keep the pseudo-polygon pointed: brute force over
// vertex pairs with exact predicates.
inline std::vector<Edge> bitangents(const PseudoPolygon& X) {
    std::vector<Edge> out;
    std::vector<int> verts = X.distinct_vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int p = verts[i], q = verts[j];
            if (!detail::diagonal_in_closed_interior(X, p, q)) continue;
            if (!detail::pointed_after_insertion(X, p, q)) continue;
            if (!detail::pointed_after_insertion(X, q, p)) continue;
            out.emplace_back(p, q);
        }
    }
    return out;
}

struct Geodesic {
    std::vector<int> path; // vertex ids from a to b

    // Segments of the path that are not walk edges of the polygon.
    std::vector<Edge> interior_segments(const PseudoPolygon& X) const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            Edge e(path[i], path[i + 1]);
            if (!X.is_walk_edge(e)) out.push_back(e);
        }
        return out;
    }
};

namespace detail {

// Shortest vertex path inside the polygon via its visibility graph. Lengths
// use long-double square roots; under general position no two distinct
// locally-shortest paths tie, so the tolerance is immaterial at desk scale.
inline Geodesic geodesic_between_vertices(const PseudoPolygon& X, int from, int to) {
    std::vector<int> verts = X.distinct_vertices();
    std::map<int, int> id;
    for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = static_cast<int>(i);
    const int m = static_cast<int>(verts.size());

    std::vector<std::vector<std::pair<int, long double>>> adj(static_cast<std::size_t>(m));
    auto connect = [&](int p, int q) {
        long double w = std::sqrt(static_cast<long double>(squared_length(sub(X.ps->at(p), X.ps->at(q)))));
        adj[static_cast<std::size_t>(id[p])].push_back({id[q], w});
        adj[static_cast<std::size_t>(id[q])].push_back({id[p], w});
    };
    std::set<Edge> added;
    for (int i = 0; i < X.size(); ++i) {
        Edge e(X.at(i), X.at(i + 1));
        if (added.insert(e).second) connect(e.u, e.v);
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (diagonal_in_closed_interior(X, verts[i], verts[j])) connect(verts[i], verts[j]);

    std::vector<long double> dist(static_cast<std::size_t>(m),
                                  std::numeric_limits<long double>::infinity());
    std::vector<int> prev(static_cast<std::size_t>(m), -1);
    using QE = std::pair<long double, int>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    int s = id.at(from), t = id.at(to);
    dist[static_cast<std::size_t>(s)] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        for (auto [w, len] : adj[static_cast<std::size_t>(u)]) {
            if (d + len < dist[static_cast<std::size_t>(w)]) {
                dist[static_cast<std::size_t>(w)] = d + len;
                prev[static_cast<std::size_t>(w)] = u;
                pq.push({d + len, w});
            }
        }
    }
    if (std::isinf(static_cast<double>(dist[static_cast<std::size_t>(t)])))
        throw Error(ErrorCode::PipelineError, "no path inside polygon");
    Geodesic g;
    for (int cur = t; cur != -1; cur = prev[static_cast<std::size_t>(cur)])
        g.path.push_back(verts[static_cast<std::size_t>(cur)]);
    std::reverse(g.path.begin(), g.path.end());
    return g;
}

} // namespace detail

// Shortest path between two corners of X.
inline Geodesic geodesic(const PseudoPolygon& X, int corner_pos_a, int corner_pos_b) {
    if (!X.corner[static_cast<std::size_t>(corner_pos_a)] ||
        !X.corner[static_cast<std::size_t>(corner_pos_b)])
        throw Error(ErrorCode::InvalidInput, "geodesic endpoints must be corners");
    int a = X.at(corner_pos_a), b = X.at(corner_pos_b);
    if (a == b) throw Error(ErrorCode::InvalidInput, "geodesic endpoints must be distinct");
    return detail::geodesic_between_vertices(X, a, b);
}

// Wedge condition of the opposite-flip lemma: with `a` a corner of a
// pseudo-triangle and e on the chain opposite a, the flip of e lands on a
// whenever every vertex of the pseudo-triangle across e lies in the closed
// wedge spanned by extending a's corner edges.
inline bool wedge_flip_predicate(const PseudoTriangulation& T, int a, Edge e) {
    if (!T.has_edge(e) || e.contains(a))
        throw Error(ErrorCode::InvalidInput, "edge must lie opposite the corner");
    const FaceSet& fs = T.face_set();
    int fa = fs.face_of_dart(e.u, e.v);
    int fb = fs.face_of_dart(e.v, e.u);
    int near = -1, far = -1;
    for (int fi : {fa, fb}) {
        if (fi < 0 || fs.faces[static_cast<std::size_t>(fi)].outer) continue;
        const Face& f = fs.faces[static_cast<std::size_t>(fi)];
        bool corner_at_a = false;
        for (int i = 0; i < f.size(); ++i)
            if (f.at(i) == a && f.corner[static_cast<std::size_t>(i)]) corner_at_a = true;
        if (corner_at_a)
            near = fi;
        else
            far = fi;
    }
    if (near < 0 || far < 0)
        throw Error(ErrorCode::InvalidInput, "corner/edge pair does not match a face");

    const Face& f = fs.faces[static_cast<std::size_t>(near)];
    int pos = -1;
    for (int i = 0; i < f.size(); ++i)
        if (f.at(i) == a && f.corner[static_cast<std::size_t>(i)]) pos = i;
    Point pa = T.point_set().at(a);
    Point s = sub(T.point_set().at(f.at(pos + 1)), pa); // outgoing edge of the corner
    Point t = sub(T.point_set().at(f.at(pos - 1)), pa); // incoming edge reversed

    for (int w : fs.faces[static_cast<std::size_t>(far)].walk) {
        if (w == a) continue;
        Point d = sub(T.point_set().at(w), pa);
        if (cross(s, d) < 0 || cross(d, t) < 0) return false; // outside closed wedge
    }
    return true;
}

// Certificate for swapping two consecutive bottom edges: either the merged
// pseudo-pentagon already has five bitangents, or one top edge must be
// flipped out of the way first.
struct AlreadyFive {};
struct FlipTopFirst {
    Edge top;
};
using FiveBitangentCertificate = std::variant<AlreadyFive, FlipTopFirst>;

namespace detail {

// Face incident to the rank-m bottom edge on the side of rank m+1.
inline const Face& face_right_of_bottom(const PseudoTriangulation& T, int m) {
    const PointSet& ps = T.point_set();
    Edge b(ps.v0(), ps.vertex_at_rank(m));
    int beyond = ps.vertex_at_rank(m + 1);
    const FaceSet& fs = T.face_set();
    for (int fi : {fs.face_of_dart(b.u, b.v), fs.face_of_dart(b.v, b.u)}) {
        if (fi < 0) continue;
        const Face& f = fs.faces[static_cast<std::size_t>(fi)];
        if (!f.outer && f.contains_vertex(beyond)) return f;
    }
    throw Error(ErrorCode::PipelineError, "no face right of bottom edge");
}

} // namespace detail

// a and b are the bottom edges of ranks k and k+1 of a left-shelling
// pseudo-triangulation; both must be internal.
inline FiveBitangentCertificate five_bitangent_certificates(const PseudoTriangulation& T,
                                                            Edge a, Edge b) {
    const PointSet& ps = T.point_set();
    int v0 = ps.v0();
    if (!a.contains(v0) || !b.contains(v0) || !T.has_edge(a) || !T.has_edge(b))
        throw Error(ErrorCode::InvalidInput, "expected two bottom edges");
    if (T.is_hull_edge(a) || T.is_hull_edge(b))
        throw Error(ErrorCode::InvalidInput, "bottom edges must be internal");
    int ra = ps.rank_of(a.other(v0));
    int rb = ps.rank_of(b.other(v0));
    if (rb != ra + 1)
        throw Error(ErrorCode::InvalidInput, "bottom edges must be rank-consecutive");
    const Face& right = detail::face_right_of_bottom(T, rb);
    if (right.size() == 3) return AlreadyFive{};
    // The top endpoint of b has degree two; its top edge is the one to flip.
    int vb = b.other(v0);
    if (T.degree(vb) != 2)
        throw Error(ErrorCode::PipelineError, "non-triangle case expects a degree-2 top endpoint");
    for (int w : T.rotation(vb))
        if (w != v0) return FlipTopFirst{Edge(vb, w)};
    throw Error(ErrorCode::PipelineError, "no top edge at bottom endpoint");
}

} // namespace ptflip
