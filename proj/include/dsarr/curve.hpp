#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsarr/point.hpp"

namespace dsarr {

// Curve classes by number of finite endpoints: G0 bi-infinite, G1
// semi-infinite, G2 bounded.
enum class CurveClass { G0, G1, G2 };

std::string curve_class_name(CurveClass c);
CurveClass curve_class_from_name(const std::string& name);

// A curve is a simple polyline with optional terminal rays. Ray directions
// point away from the adjacent vertex, toward infinity.
//
// Curve parameter: segment i spans params [i, i+1]; a point v0 + t*start_ray
// has param -t; a point vm + t*end_ray has param m + t. Params increase from
// the start side to the end side.
//
// G1 curves are normalized so the finite endpoint comes first: start_ray is
// empty and end_ray is set; the finite endpoint vertices.front() is the
// distinguished endpoint.
struct Curve {
    std::string id;
    std::vector<Point> vertices;
    std::optional<Vec> start_ray;
    std::optional<Vec> end_ray;

    CurveClass cls() const;
    int segment_count() const { return static_cast<int>(vertices.size()) - 1; }
};

// One straight piece of a curve: a segment or a terminal ray.
struct Piece {
    Point origin;
    Vec dir;
    bool unbounded = false;   // t in [0, inf) instead of [0, 1]
    Rational param_base;      // param(t) = param_base + t * param_sign
    int param_sign = 1;       // -1 only for the start ray
    int index = 0;            // -1 start ray, 0..m-1 segments, m end ray
};

std::vector<Piece> curve_pieces(const Curve& c);

bool param_is_vertex(const Curve& c, const Rational& t);
bool param_is_finite_endpoint(const Curve& c, const Rational& t);
Point point_at_param(const Curve& c, const Rational& t);

// Polyline between two finite params, endpoints included, in param order.
std::vector<Point> sub_polyline(const Curve& c, Rational t0, Rational t1);

struct CurveSet {
    CurveClass cls = CurveClass::G2;
    int s = 1;  // maximum allowed pairwise crossings
    std::vector<Curve> curves;

    // Validates structure (uniform class, unique ids, simple vertex chains),
    // normalizes G1 orientation, and merges redundant collinear vertices.
    static CurveSet make(CurveClass cls, int s, std::vector<Curve> curves);

    int index_of(const std::string& id) const;  // -1 when absent

    Json to_json() const;
    static CurveSet from_json(const Json& j);
};

}  // namespace dsarr
