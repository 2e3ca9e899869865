#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>

#include "ptflip/error.hpp"

namespace ptflip {

using Coord = std::int64_t;

// Coordinates are capped so that 3x3 orientation determinants, computed in
// __int128, stay far from overflow: |dx|,|dy| <= 2^32, products <= 2^64,
// and the determinant fits in ~65 bits.
inline constexpr Coord kMaxCoord = Coord(1) << 31;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

using Int128 = __int128;

inline Int128 cross(Point o, Point a, Point b) {
    return Int128(a.x - o.x) * Int128(b.y - o.y) - Int128(a.y - o.y) * Int128(b.x - o.x);
}

// Cross product of free vectors.
inline Int128 cross(Point u, Point v) {
    return Int128(u.x) * Int128(v.y) - Int128(u.y) * Int128(v.x);
}

inline Int128 dot(Point u, Point v) {
    return Int128(u.x) * Int128(v.x) + Int128(u.y) * Int128(v.y);
}

inline Point sub(Point a, Point b) { return Point{a.x - b.x, a.y - b.y}; }

enum class Orientation { Clockwise, CounterClockwise, Collinear };

inline Orientation orientation(Point p, Point q, Point r) {
    Int128 d = cross(p, q, r);
    if (d > 0) return Orientation::CounterClockwise;
    if (d < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

inline int orientation_sign(Point p, Point q, Point r) {
    Int128 d = cross(p, q, r);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

inline Int128 squared_length(Point u) {
    return Int128(u.x) * Int128(u.x) + Int128(u.y) * Int128(u.y);
}

// Strict interior intersection of segments ab and cd. Segments sharing an
// endpoint never properly cross; under general position no other kind of
// touching can occur.
inline bool segments_properly_cross(Point a, Point b, Point c, Point d) {
    int d1 = orientation_sign(a, b, c);
    int d2 = orientation_sign(a, b, d);
    int d3 = orientation_sign(c, d, a);
    int d4 = orientation_sign(c, d, b);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

inline bool point_on_closed_segment(Point a, Point b, Point p) {
    if (orientation_sign(a, b, p) != 0) return false;
    return dot(sub(p, a), sub(p, b)) <= 0;
}

// Angular half of a direction, splitting the full turn at the positive
// x-axis: 0 for angles in [0, pi), 1 for [pi, 2pi). Zero vectors are invalid.
inline int angular_half(Point d) {
    assert(d.x != 0 || d.y != 0);
    if (d.y > 0) return 0;
    if (d.y < 0) return 1;
    return d.x > 0 ? 0 : 1;
}

// Counter-clockwise order of directions starting at the positive x-axis.
// Equal directions compare as equivalent (neither less).
inline bool ccw_direction_less(Point da, Point db) {
    int ha = angular_half(da);
    int hb = angular_half(db);
    if (ha != hb) return ha < hb;
    return cross(da, db) > 0;
}

// True if direction d lies strictly inside the ccw sector from s to e.
// The sector spans from s counter-clockwise to e; if s and e are the same
// direction the sector is the full turn minus that ray.
inline bool dir_strictly_in_ccw_sector(Point s, Point e, Point d) {
    Int128 se = cross(s, e);
    Int128 sd = cross(s, d);
    Int128 de = cross(d, e);
    if (se > 0) return sd > 0 && de > 0;
    if (se < 0) return sd > 0 || de > 0;
    // s and e parallel
    if (dot(s, e) > 0) {
        // same direction: full-turn sector, everything but the ray itself
        return !(sd == 0 && dot(s, d) > 0);
    }
    // opposite directions: sector is exactly pi
    return sd > 0;
}

} // namespace ptflip

template <>
struct std::hash<ptflip::Point> {
    std::size_t operator()(const ptflip::Point& p) const noexcept {
        std::size_t h = std::hash<long long>()(p.x);
        h ^= std::hash<long long>()(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};
