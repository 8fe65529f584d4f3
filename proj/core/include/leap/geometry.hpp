#ifndef LEAP_GEOMETRY_HPP
#define LEAP_GEOMETRY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

namespace leap {

// All board geometry lives on the integer lattice of *doubled* square centers:
// a square whose center sits at (x, y) in ordinary units is stored as
// (2x, 2y).  This keeps half-integer centers (odd-sized boards centered on a
// square corner, diagonal scalings, pinwheel nets) exact without ever touching
// floating point.
using coord = std::int64_t;

struct Vec2 {
    coord x = 0;
    coord y = 0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(coord k, Vec2 v) { return {k * v.x, k * v.y}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }

    // Lexicographic by x then y; this is the tie-break order used everywhere
    // a canonical square has to be picked.
    friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

// A square is identified with its doubled center.
using Square = Vec2;

constexpr Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }  // counterclockwise

constexpr Vec2 rot90k(Vec2 v, int k) {
    k &= 3;
    for (int i = 0; i < k; ++i) v = rot90(v);
    return v;
}

constexpr Vec2 reflect_x_axis(Vec2 v) { return {v.x, -v.y}; }
constexpr Vec2 reflect_y_axis(Vec2 v) { return {-v.x, v.y}; }
constexpr Vec2 reflect_diag(Vec2 v) { return {v.y, v.x}; }        // across y = x
constexpr Vec2 reflect_antidiag(Vec2 v) { return {-v.y, -v.x}; }  // across y = -x

constexpr coord cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr coord dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// 2x2 integer matrix, row-major: [[a, b], [c, d]].  Vectors act as columns.
struct Mat2 {
    coord a = 0, b = 0, c = 0, d = 0;

    static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
    static constexpr Mat2 zero() { return {0, 0, 0, 0}; }

    constexpr Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    constexpr coord det() const { return a * d - b * c; }

    friend constexpr Mat2 operator+(Mat2 m, Mat2 n) { return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}; }
    friend constexpr Mat2 operator-(Mat2 m, Mat2 n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }
    constexpr Mat2 operator-() const { return {-a, -b, -c, -d}; }
    friend constexpr Mat2 operator*(Mat2 m, Mat2 n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

// --- exact segment predicates (used by the simple-polygon check) -----------

// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
constexpr int orientation(Vec2 a, Vec2 b, Vec2 c) {
    const coord s = cross(b - a, c - a);
    return s > 0 ? 1 : s < 0 ? -1 : 0;
}

constexpr bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Whether the closed segments [a,b] and [c,d] share at least one point.
bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Whether the closed polygonal cycle through `pts` (consecutive points joined
// by straight segments, last joined to first) is the contour of a simple
// polygon: vertices distinct, no zero-length or collinear-overlapping edges,
// adjacent edges meeting only at their shared vertex, all other pairs disjoint.
bool is_simple_polygon(const std::vector<Vec2>& pts);

}  // namespace leap

#endif  // LEAP_GEOMETRY_HPP
