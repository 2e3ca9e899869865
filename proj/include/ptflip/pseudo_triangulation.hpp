#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptflip/error.hpp"
#include "ptflip/geometry.hpp"
#include "ptflip/point_set.hpp"

namespace ptflip {

// Undirected edge between vertex indices, stored normalized (u < v).
struct Edge {
    int u = -1;
    int v = -1;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool contains(int w) const { return u == w || v == w; }
    int other(int w) const { return u == w ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(Edge e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// A face of the planar subdivision. `walk` lists vertex indices along the
// boundary; bounded faces run counter-clockwise (interior on the left), the
// outer face clockwise. Weakly simple walks may repeat vertices.
struct Face {
    std::vector<int> walk;
    std::vector<bool> corner; // per walk position: convex interior angle
    int corner_count = 0;
    bool outer = false;
    bool simple = true;   // no repeated vertex in the walk
    Int128 area2 = 0;     // twice the signed area

    int size() const { return static_cast<int>(walk.size()); }
    int at(int i) const {
        int m = size();
        return walk[static_cast<std::size_t>(((i % m) + m) % m)];
    }
    bool contains_vertex(int v) const {
        return std::find(walk.begin(), walk.end(), v) != walk.end();
    }
};

// Rotation system: per vertex, incident neighbours in ccw angular order.
inline std::vector<std::vector<int>> build_rotations(const PointSet& ps,
                                                     const std::set<Edge>& edges) {
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(ps.n()));
    for (const Edge& e : edges) {
        rot[static_cast<std::size_t>(e.u)].push_back(e.v);
        rot[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (int v = 0; v < ps.n(); ++v) {
        Point o = ps.at(v);
        std::sort(rot[static_cast<std::size_t>(v)].begin(), rot[static_cast<std::size_t>(v)].end(),
                  [&](int a, int b) { return ccw_direction_less(sub(ps.at(a), o), sub(ps.at(b), o)); });
    }
    return rot;
}

struct FaceSet {
    std::vector<Face> faces;
    int outer_index = -1;
    // dart (u,v) -> index of the face with that dart on its boundary
    std::map<std::pair<int, int>, int> dart_face;

    int face_of_dart(int u, int v) const {
        auto it = dart_face.find({u, v});
        return it == dart_face.end() ? -1 : it->second;
    }
};

// Trace all faces of the plane graph via the rotation system. The next dart
// of (u -> v) is (v -> w) with w the ccw-predecessor of u around v, which
// walks bounded faces counter-clockwise.
inline FaceSet compute_faces(const PointSet& ps, const std::set<Edge>& edges) {
    auto rot = build_rotations(ps, edges);
    std::vector<std::unordered_map<int, int>> pos(static_cast<std::size_t>(ps.n()));
    for (int v = 0; v < ps.n(); ++v)
        for (std::size_t i = 0; i < rot[static_cast<std::size_t>(v)].size(); ++i)
            pos[static_cast<std::size_t>(v)][rot[static_cast<std::size_t>(v)][i]] = static_cast<int>(i);

    FaceSet out;
    std::set<std::pair<int, int>> visited;
    for (const Edge& e : edges) {
        for (auto [su, sv] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (visited.count({su, sv})) continue;
            Face f;
            int u = su, v = sv;
            do {
                visited.insert({u, v});
                out.dart_face[{u, v}] = static_cast<int>(out.faces.size());
                f.walk.push_back(u);
                const auto& rv = rot[static_cast<std::size_t>(v)];
                int idx = pos[static_cast<std::size_t>(v)].at(u);
                int w = rv[static_cast<std::size_t>((idx + rv.size() - 1) % rv.size())];
                u = v;
                v = w;
            } while (!(u == su && v == sv));

            const int m = f.size();
            for (int i = 0; i < m; ++i) {
                Point a = ps.at(f.at(i));
                Point b = ps.at(f.at(i + 1));
                f.area2 += Int128(a.x) * Int128(b.y) - Int128(b.x) * Int128(a.y);
            }
            f.outer = f.area2 < 0;
            f.corner.resize(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
                bool c = orientation(ps.at(f.at(i - 1)), ps.at(f.at(i)), ps.at(f.at(i + 1))) ==
                         Orientation::CounterClockwise;
                f.corner[static_cast<std::size_t>(i)] = c;
                if (c) ++f.corner_count;
            }
            {
                std::vector<int> w = f.walk;
                std::sort(w.begin(), w.end());
                f.simple = std::adjacent_find(w.begin(), w.end()) == w.end();
            }
            if (f.outer) out.outer_index = static_cast<int>(out.faces.size());
            out.faces.push_back(std::move(f));
        }
    }
    return out;
}

// Planar subdivision of the convex hull of a point set. Faces and rotations
// are derived from the coordinates on demand and cached; every mutation
// invalidates the cache (desk-scale recomputation keeps mutations honest).
class PseudoTriangulation {
public:
    PseudoTriangulation() = default;
    explicit PseudoTriangulation(PointSetPtr ps, std::set<Edge> edges = {})
        : ps_(std::move(ps)), edges_(std::move(edges)) {}

    const PointSet& point_set() const { return *ps_; }
    const PointSetPtr& point_set_ptr() const { return ps_; }
    const std::set<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(Edge e) const { return edges_.count(e) > 0; }

    void add_edge(Edge e) {
        edges_.insert(e);
        dirty_ = true;
    }
    void remove_edge(Edge e) {
        edges_.erase(e);
        dirty_ = true;
    }

    bool is_hull_edge(Edge e) const {
        const auto& hull = ps_->hull();
        for (std::size_t i = 0; i < hull.size(); ++i)
            if (Edge(hull[i], hull[(i + 1) % hull.size()]) == e) return true;
        return false;
    }

    std::vector<Edge> hull_edges() const {
        std::vector<Edge> out;
        const auto& hull = ps_->hull();
        for (std::size_t i = 0; i < hull.size(); ++i)
            out.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
        return out;
    }

    std::vector<Edge> internal_edges() const {
        std::vector<Edge> out;
        for (const Edge& e : edges_)
            if (!is_hull_edge(e)) out.push_back(e);
        return out;
    }

    int degree(int v) const {
        refresh();
        return static_cast<int>(rot_[static_cast<std::size_t>(v)].size());
    }

    const std::vector<int>& rotation(int v) const {
        refresh();
        return rot_[static_cast<std::size_t>(v)];
    }

    const FaceSet& face_set() const {
        refresh();
        return faces_;
    }
    const std::vector<Face>& faces() const { return face_set().faces; }

    // A vertex is pointed iff some consecutive angular gap in its rotation
    // exceeds pi. Degree <= 1 vertices are trivially pointed.
    bool vertex_pointed(int v) const {
        refresh();
        const auto& rv = rot_[static_cast<std::size_t>(v)];
        if (rv.size() <= 1) return true;
        Point o = ps_->at(v);
        for (std::size_t i = 0; i < rv.size(); ++i) {
            Point d1 = sub(ps_->at(rv[i]), o);
            Point d2 = sub(ps_->at(rv[(i + 1) % rv.size()]), o);
            if (cross(d1, d2) < 0) return true;
            if (cross(d1, d2) == 0 && rv.size() == 2) return false; // exact pi gaps
        }
        return false;
    }

    std::vector<int> pointed_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < ps_->n(); ++v)
            if (vertex_pointed(v)) out.push_back(v);
        return out;
    }

    std::vector<int> non_pointed_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < ps_->n(); ++v)
            if (!vertex_pointed(v)) out.push_back(v);
        return out;
    }

    bool is_pointed() const {
        return static_cast<int>(pointed_vertices().size()) == ps_->n();
    }

    friend bool operator==(const PseudoTriangulation& a, const PseudoTriangulation& b) {
        return a.edges_ == b.edges_;
    }

private:
    void refresh() const {
        if (!dirty_) return;
        rot_ = build_rotations(*ps_, edges_);
        faces_ = compute_faces(*ps_, edges_);
        dirty_ = false;
    }

    PointSetPtr ps_;
    std::set<Edge> edges_;
    mutable bool dirty_ = true;
    mutable std::vector<std::vector<int>> rot_;
    mutable FaceSet faces_;
};

struct ValidationReport {
    std::vector<std::pair<Edge, Edge>> crossings;
    std::vector<Edge> missing_hull_edges;
    std::vector<int> bad_faces;       // indices of bounded faces that are not pseudo-triangles
    std::vector<int> low_degree;      // vertices of degree < 2
    bool edge_count_in_range = true;  // 2n-3 <= |E| <= 3n-3-h
    bool area_covered = true;         // bounded faces tile the hull interior
    std::vector<int> pointed;         // census
    int n = 0;

    bool clean() const {
        return crossings.empty() && missing_hull_edges.empty() && bad_faces.empty() &&
               low_degree.empty() && edge_count_in_range && area_covered;
    }
    bool all_pointed() const { return static_cast<int>(pointed.size()) == n; }
};

// Executable form of the pseudo-triangulation definition: plane embedding,
// all hull edges present, and every bounded face a pseudo-triangle.
inline ValidationReport validate(const PseudoTriangulation& T) {
    const PointSet& ps = T.point_set();
    ValidationReport rep;
    rep.n = ps.n();

    std::vector<Edge> es(T.edges().begin(), T.edges().end());
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (segments_properly_cross(ps.at(es[i].u), ps.at(es[i].v), ps.at(es[j].u),
                                        ps.at(es[j].v)))
                rep.crossings.emplace_back(es[i], es[j]);

    for (const Edge& he : PseudoTriangulation(T).hull_edges())
        if (!T.has_edge(he)) rep.missing_hull_edges.push_back(he);

    for (int v = 0; v < ps.n(); ++v)
        if (T.degree(v) < 2) rep.low_degree.push_back(v);

    const int n = ps.n(), h = ps.h();
    rep.edge_count_in_range = T.edge_count() >= 2 * n - 3 && T.edge_count() <= 3 * n - 3 - h;

    if (rep.crossings.empty()) {
        const FaceSet& fs = T.face_set();
        Int128 bounded_area = 0;
        for (std::size_t i = 0; i < fs.faces.size(); ++i) {
            const Face& f = fs.faces[i];
            if (f.outer) continue;
            bounded_area += f.area2;
            if (f.corner_count != 3 || !f.simple) rep.bad_faces.push_back(static_cast<int>(i));
        }
        Int128 hull_area = 0;
        const auto& hull = ps.hull();
        for (std::size_t i = 0; i < hull.size(); ++i) {
            Point a = ps.at(hull[i]);
            Point b = ps.at(hull[(i + 1) % hull.size()]);
            hull_area += Int128(a.x) * Int128(b.y) - Int128(b.x) * Int128(a.y);
        }
        rep.area_covered = bounded_area == hull_area;
    } else {
        rep.area_covered = false;
    }

    rep.pointed = T.pointed_vertices();
    return rep;
}

// Bijection between internal edges and a subset of {1, ..., 3n-3-2h}.
class LabelLedger {
public:
    LabelLedger() = default;
    LabelLedger(int n, int h) : universe_size_(3 * n - 3 - 2 * h) {
        for (int l = 1; l <= universe_size_; ++l) free_.insert(l);
    }

    int universe_size() const { return universe_size_; }
    const std::map<Edge, int>& assignment() const { return assigned_; }
    const std::set<int>& free_pool() const { return free_; }

    bool has_label(Edge e) const { return assigned_.count(e) > 0; }
    int label_of(Edge e) const {
        auto it = assigned_.find(e);
        if (it == assigned_.end())
            throw Error(ErrorCode::InvalidInput, "edge " + to_string(e) + " carries no label");
        return it->second;
    }
    bool is_free(int label) const { return free_.count(label) > 0; }

    std::optional<Edge> edge_of(int label) const {
        for (const auto& [e, l] : assigned_)
            if (l == label) return e;
        return std::nullopt;
    }

    void assign(Edge e, int label) {
        if (label < 1 || label > universe_size_)
            throw Error(ErrorCode::InvalidInput, "label " + std::to_string(label) + " outside universe");
        if (!free_.count(label))
            throw Error(ErrorCode::LabelInUse, "label " + std::to_string(label) + " is not free");
        if (assigned_.count(e))
            throw Error(ErrorCode::InvalidInput, "edge " + to_string(e) + " already labelled");
        free_.erase(label);
        assigned_[e] = label;
    }

    int release(Edge e) {
        auto it = assigned_.find(e);
        if (it == assigned_.end())
            throw Error(ErrorCode::InvalidInput, "edge " + to_string(e) + " carries no label");
        int label = it->second;
        assigned_.erase(it);
        free_.insert(label);
        return label;
    }

    // Exchanging flips move the old edge's label onto the new edge.
    void transfer(Edge from, Edge to) {
        auto it = assigned_.find(from);
        if (it == assigned_.end())
            throw Error(ErrorCode::InvalidInput, "edge " + to_string(from) + " carries no label");
        int label = it->second;
        assigned_.erase(it);
        assigned_[to] = label;
    }

    bool conserved() const {
        if (static_cast<int>(assigned_.size() + free_.size()) != universe_size_) return false;
        std::set<int> seen = free_;
        for (const auto& [e, l] : assigned_)
            if (!seen.insert(l).second) return false;
        return static_cast<int>(seen.size()) == universe_size_;
    }

    std::set<int> assigned_labels() const {
        std::set<int> out;
        for (const auto& [e, l] : assigned_) out.insert(l);
        return out;
    }

    friend bool operator==(const LabelLedger& a, const LabelLedger& b) {
        return a.universe_size_ == b.universe_size_ && a.assigned_ == b.assigned_;
    }

private:
    int universe_size_ = 0;
    std::map<Edge, int> assigned_;
    std::set<int> free_;
};

struct LabelledPT {
    PseudoTriangulation pt;
    LabelLedger labels;

    friend bool operator==(const LabelledPT& a, const LabelledPT& b) {
        return a.pt == b.pt && a.labels == b.labels;
    }
};

// Per-rank bottom/top edges of a shelling construction.
struct ShellingEdges {
    std::map<int, Edge> bottom; // rank -> {v0, v_rank}, ranks >= 1
    std::map<int, Edge> top;    // rank -> tangent edge, ranks >= 2
};

namespace detail {

// Tangent vertex from p to a strictly convex polygon (ccw index list),
// excluding `exclude`: the unique hull vertex t != exclude with both hull
// neighbours strictly on one side of line(p, t).
inline int tangent_vertex(const PointSet& ps, const std::vector<int>& hull, Point p, int exclude) {
    const std::size_t m = hull.size();
    for (std::size_t i = 0; i < m; ++i) {
        int t = hull[i];
        if (t == exclude) continue;
        if (m == 2) return t; // segment hull: the other endpoint is the tangent
        int prev = hull[(i + m - 1) % m];
        int next = hull[(i + 1) % m];
        int s1 = orientation_sign(p, ps.at(t), ps.at(prev));
        int s2 = orientation_sign(p, ps.at(t), ps.at(next));
        if (s1 != 0 && s1 == s2) return t;
    }
    throw Error(ErrorCode::PipelineError, "no tangent vertex found");
}

inline std::pair<PseudoTriangulation, ShellingEdges> build_shelling(const PointSetPtr& psp,
                                                                    bool left) {
    const PointSet& ps = *psp;
    const int n = ps.n();
    // Left-shelling inserts vertices in clockwise order around v0 (rank
    // order); the right-shelling inserts them counter-clockwise.
    std::vector<int> seq;
    if (left)
        for (int r = 1; r < n; ++r) seq.push_back(r);
    else
        for (int r = n - 1; r >= 1; --r) seq.push_back(r);

    PseudoTriangulation T(psp);
    ShellingEdges se;
    const int v0 = ps.v0();
    std::vector<int> prefix = {v0, ps.vertex_at_rank(seq[0])};
    se.bottom[seq[0]] = Edge(v0, ps.vertex_at_rank(seq[0]));
    T.add_edge(se.bottom[seq[0]]);

    for (std::size_t i = 1; i < seq.size(); ++i) {
        int r = seq[i];
        int v = ps.vertex_at_rank(r);
        std::vector<int> hull =
            prefix.size() >= 3 ? convex_hull_indices(ps.points(), prefix) : prefix;
        int t = tangent_vertex(ps, hull, ps.at(v), v0);
        se.bottom[r] = Edge(v0, v);
        se.top[r] = Edge(v, t);
        T.add_edge(se.bottom[r]);
        T.add_edge(se.top[r]);
        prefix.push_back(v);
    }
    return {std::move(T), std::move(se)};
}

} // namespace detail

// Union of the convex hulls of the shelling prefixes: every vertex past the
// first contributes a bottom edge to v0 and a top edge tangent to the hull
// of the earlier vertices.
inline std::pair<PseudoTriangulation, ShellingEdges> build_left_shelling(const PointSetPtr& ps) {
    return detail::build_shelling(ps, true);
}

inline std::pair<PseudoTriangulation, ShellingEdges> build_right_shelling(const PointSetPtr& ps) {
    return detail::build_shelling(ps, false);
}

inline bool is_left_shelling(const PseudoTriangulation& T) {
    auto [L, se] = build_left_shelling(T.point_set_ptr());
    return T.edges() == L.edges();
}

// Canonical labelling: internal bottom edges labelled 1,2,... in clockwise
// rank order around v0, then internal top edges in the same order.
inline std::pair<LabelledPT, ShellingEdges> canonical_labelling(const PointSetPtr& ps) {
    auto [T, se] = build_left_shelling(ps);
    LabelLedger ledger(ps->n(), ps->h());
    int next = 1;
    for (const auto& [r, e] : se.bottom)
        if (!T.is_hull_edge(e)) ledger.assign(e, next++);
    for (const auto& [r, e] : se.top)
        if (!T.is_hull_edge(e)) ledger.assign(e, next++);
    return {LabelledPT{std::move(T), std::move(ledger)}, se};
}

} // namespace ptflip

template <>
struct std::hash<ptflip::Edge> {
    std::size_t operator()(const ptflip::Edge& e) const noexcept {
        return std::hash<long long>()((static_cast<long long>(e.u) << 32) ^ e.v);
    }
};
