#pragma once

#include <compare>

#include "dsarr/rational.hpp"

namespace dsarr {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic order; exact, used for deterministic ids everywhere.
    friend bool operator<(const Point& a, const Point& b) {
        int cx = cmp(a.x, b.x);
        if (cx != 0) return cx < 0;
        return a.y < b.y;
    }
};

struct Vec {
    Rational dx;
    Rational dy;

    friend bool operator==(const Vec& a, const Vec& b) = default;
    bool is_zero() const { return dx == 0 && dy == 0; }
};

inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& p, const Vec& v) { return {p.x + v.dx, p.y + v.dy}; }
inline Vec operator*(const Rational& t, const Vec& v) { return {t * v.dx, t * v.dy}; }
inline Vec operator-(const Vec& v) { return {-v.dx, -v.dy}; }

inline Rational cross(const Vec& a, const Vec& b) { return a.dx * b.dy - a.dy * b.dx; }
inline Rational dot(const Vec& a, const Vec& b) { return a.dx * b.dx + a.dy * b.dy; }

// Sign of the signed area of triangle (a, b, c): >0 left turn, <0 right turn.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b - a, c - a));
}

inline Rational dist2(const Point& a, const Point& b) {
    Vec d = a - b;
    return d.dx * d.dx + d.dy * d.dy;
}

// True iff p lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p);

// Squared distance from p to the closed segment [a, b].
Rational point_segment_dist2(const Point& p, const Point& a, const Point& b);

// Squared distance between two closed segments.
Rational segment_segment_dist2(const Point& a1, const Point& a2, const Point& b1,
                               const Point& b2);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

// Angular comparison of direction vectors, counterclockwise starting from
// the positive x-axis. Exact: quadrant index first, cross product within.
bool angle_less(const Vec& a, const Vec& b);

}  // namespace dsarr
