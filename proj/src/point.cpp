#include "dsarr/point.hpp"

#include "dsarr/errors.hpp"

namespace dsarr {

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != 0) return false;
    Vec ab = b - a;
    Rational t = dot(p - a, ab);
    return t >= 0 && t <= dot(ab, ab);
}

Rational point_segment_dist2(const Point& p, const Point& a, const Point& b) {
    Vec ab = b - a;
    Rational len2 = dot(ab, ab);
    if (len2 == 0) return dist2(p, a);
    Rational t = dot(p - a, ab) / len2;
    if (t <= 0) return dist2(p, a);
    if (t >= 1) return dist2(p, b);
    Point proj = a + t * ab;
    return dist2(p, proj);
}

Rational segment_segment_dist2(const Point& a1, const Point& a2, const Point& b1,
                               const Point& b2) {
    // Straddle test for proper/improper intersection, else endpoint distances.
    int o1 = orientation(a1, a2, b1);
    int o2 = orientation(a1, a2, b2);
    int o3 = orientation(b1, b2, a1);
    int o4 = orientation(b1, b2, a2);
    bool meets = false;
    if (o1 != o2 && o3 != o4 && (o1 != 0 || o2 != 0) && (o3 != 0 || o4 != 0)) meets = true;
    if (o1 == 0 && on_segment(a1, a2, b1)) meets = true;
    if (o2 == 0 && on_segment(a1, a2, b2)) meets = true;
    if (o3 == 0 && on_segment(b1, b2, a1)) meets = true;
    if (o4 == 0 && on_segment(b1, b2, a2)) meets = true;
    if (meets) return Rational(0);
    Rational best = point_segment_dist2(b1, a1, a2);
    Rational d = point_segment_dist2(b2, a1, a2);
    if (d < best) best = d;
    d = point_segment_dist2(a1, b1, b2);
    if (d < best) best = d;
    d = point_segment_dist2(a2, b1, b2);
    if (d < best) best = d;
    return best;
}

Json point_to_json(const Point& p) {
    return Json::array({rat_to_json(p.x), rat_to_json(p.y)});
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw InputError("expected point [[xn,xd],[yn,yd]], got: " + j.dump());
    }
    return Point{rat_from_json(j[0]), rat_from_json(j[1])};
}

namespace {

// Quadrant index in counterclockwise order from the positive x-axis.
int quadrant(const Vec& v) {
    if (v.dx > 0 && v.dy >= 0) return 0;
    if (v.dx <= 0 && v.dy > 0) return 1;
    if (v.dx < 0 && v.dy <= 0) return 2;
    return 3;
}

}  // namespace

bool angle_less(const Vec& a, const Vec& b) {
    int qa = quadrant(a);
    int qb = quadrant(b);
    if (qa != qb) return qa < qb;
    return cross(a, b) > 0;
}

}  // namespace dsarr
