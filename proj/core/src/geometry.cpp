#include "leap/geometry.hpp"

#include <algorithm>

namespace leap {

bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);

    if (o1 != o2 && o3 != o4) return true;  // proper crossing

    // Collinear / endpoint contact.
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool is_simple_polygon(const std::vector<Vec2>& pts) {
    const std::size_t n = pts.size();
    if (n < 3) return false;

    std::vector<Vec2> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    const auto at = [&](std::size_t i) { return pts[i % n]; };

    for (std::size_t i = 0; i < n; ++i) {
        // Adjacent edges (i, i+1) and (i+1, i+2) share exactly pts[i+1]: a
        // zero-degree turn would fold the second edge back over the first.
        const Vec2 u = at(i) - at(i + 1);
        const Vec2 v = at(i + 2) - at(i + 1);
        if (cross(u, v) == 0 && dot(u, v) > 0) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
            if (segments_touch(at(i), at(i + 1), at(j), at(j + 1))) return false;
        }
    }
    return true;
}

}  // namespace leap
