#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "ptflip/error.hpp"
#include "ptflip/geometry.hpp"

namespace ptflip {

// Convex hull as a ccw cyclic vertex-index sequence (Andrew's monotone chain,
// strict turns only; assumes no duplicate points).
inline std::vector<int> convex_hull_indices(const std::vector<Point>& pts,
                                            const std::vector<int>& subset) {
    if (subset.size() < 3)
        throw Error(ErrorCode::InvalidInput, "convex hull requires at least 3 points");
    std::vector<int> order = subset;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
    });
    const std::size_t m = order.size();
    std::vector<int> hull(2 * m);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) { // lower hull
        while (k >= 2 && orientation_sign(pts[hull[k - 2]], pts[hull[k - 1]], pts[order[i]]) <= 0)
            --k;
        hull[k++] = order[i];
    }
    for (std::size_t i = m - 1, t = k + 1; i-- > 0;) { // upper hull
        while (k >= t && orientation_sign(pts[hull[k - 2]], pts[hull[k - 1]], pts[order[i]]) <= 0)
            --k;
        hull[k++] = order[i];
    }
    hull.resize(k - 1);
    return hull;
}

// An immutable point set in general position, carrying the derived data the
// shelling constructions need: hull walk, convex-layer count, and the
// clockwise shelling order around the bottom-most vertex.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
        validate();
        compute_hull();
        compute_layers();
        compute_shelling();
    }

    int n() const { return static_cast<int>(points_.size()); }
    int h() const { return static_cast<int>(hull_.size()); }
    int c() const { return layer_count_; }

    const std::vector<Point>& points() const { return points_; }
    Point at(int i) const { return points_[static_cast<std::size_t>(i)]; }

    // Hull vertex indices in counter-clockwise order.
    const std::vector<int>& hull() const { return hull_; }
    bool on_hull(int v) const { return on_hull_[static_cast<std::size_t>(v)]; }

    const std::vector<std::vector<int>>& convex_layers() const { return layers_; }

    // shelling_order()[0] is the bottom-most vertex v0; the rest follow in
    // clockwise angular order around it.
    const std::vector<int>& shelling_order() const { return shelling_; }
    // rank_of(v): position of vertex v in the shelling order.
    int rank_of(int v) const { return rank_[static_cast<std::size_t>(v)]; }
    int vertex_at_rank(int r) const { return shelling_[static_cast<std::size_t>(r)]; }
    int v0() const { return shelling_[0]; }

private:
    void validate() {
        const int n = static_cast<int>(points_.size());
        if (n < 3)
            throw Error(ErrorCode::InvalidInput, "point set requires at least 3 points");
        for (const Point& p : points_) {
            if (std::llabs(p.x) > kMaxCoord || std::llabs(p.y) > kMaxCoord)
                throw Error(ErrorCode::InvalidInput,
                            "coordinate magnitude exceeds " + std::to_string(kMaxCoord));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (points_[i] == points_[j])
                    throw Error(ErrorCode::InvalidInput,
                                "duplicate points at indices " + std::to_string(i) + "," +
                                    std::to_string(j));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (orientation(points_[i], points_[j], points_[k]) == Orientation::Collinear)
                        throw Error(ErrorCode::InvalidInput,
                                    "collinear triple at indices " + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k));
    }

    void compute_hull() {
        std::vector<int> all(points_.size());
        std::iota(all.begin(), all.end(), 0);
        hull_ = convex_hull_indices(points_, all);
        on_hull_.assign(points_.size(), false);
        for (int v : hull_) on_hull_[static_cast<std::size_t>(v)] = true;
    }

    void compute_layers() {
        std::vector<int> remaining(points_.size());
        std::iota(remaining.begin(), remaining.end(), 0);
        layers_.clear();
        while (!remaining.empty()) {
            if (remaining.size() <= 2) {
                layers_.push_back(remaining);
                break;
            }
            std::vector<int> layer = convex_hull_indices(points_, remaining);
            layers_.push_back(layer);
            std::vector<bool> peel(points_.size(), false);
            for (int v : layer) peel[static_cast<std::size_t>(v)] = true;
            std::erase_if(remaining, [&](int v) { return peel[static_cast<std::size_t>(v)]; });
        }
        layer_count_ = static_cast<int>(layers_.size());
    }

    void compute_shelling() {
        const int n = static_cast<int>(points_.size());
        int bottom = 0;
        for (int i = 1; i < n; ++i) {
            const Point& p = points_[i];
            const Point& b = points_[bottom];
            if (p.y < b.y || (p.y == b.y && p.x < b.x)) bottom = i;
        }
        shelling_.clear();
        shelling_.push_back(bottom);
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (i != bottom) rest.push_back(i);
        const Point o = points_[bottom];
        // All other points lie in the closed upper half-plane of o. Clockwise
        // order around o = decreasing polar angle: points on the negative
        // x-ray first, then the open upper half-plane, then the positive ray.
        auto angle_class = [&](int v) {
            const Point& p = points_[v];
            if (p.y == o.y) return p.x < o.x ? 0 : 2;
            return 1;
        };
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            int ca = angle_class(a), cb = angle_class(b);
            if (ca != cb) return ca < cb;
            return orientation_sign(o, points_[a], points_[b]) < 0; // a -> b is a right turn
        });
        shelling_.insert(shelling_.end(), rest.begin(), rest.end());
        rank_.assign(points_.size(), -1);
        for (int r = 0; r < n; ++r) rank_[static_cast<std::size_t>(shelling_[r])] = r;
    }

    std::vector<Point> points_;
    std::vector<int> hull_;
    std::vector<bool> on_hull_;
    std::vector<std::vector<int>> layers_;
    int layer_count_ = 0;
    std::vector<int> shelling_;
    std::vector<int> rank_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

inline PointSetPtr make_point_set(std::vector<Point> points) {
    return std::make_shared<const PointSet>(std::move(points));
}

} // namespace ptflip
