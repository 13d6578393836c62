#pragma once

#include <optional>
#include <vector>

#include "dsarr/curve.hpp"

namespace dsarr {

enum class SegRelation {
    None,
    ProperCrossing,        // transversal at one interior point of both segments
    Overlap,               // collinear with a shared sub-segment
    SharedEndpoint,        // exactly one common endpoint
    EndpointOnInterior,    // an endpoint of one lies inside the other
};

struct SegIntersection {
    SegRelation kind = SegRelation::None;
    std::optional<Point> point;  // set for ProperCrossing
};

// Classifies the intersection of open segments (p1,p2) and (p3,p4).
SegIntersection segment_intersection(const Point& p1, const Point& p2, const Point& p3,
                                     const Point& p4);

// Exhaustive classified contacts between two distinct curves.
struct PairContact {
    enum Kind {
        Transversal,      // proper crossing in piece interiors
        Overlap,          // collinear overlap of pieces
        EndpointContact,  // a finite curve endpoint lies on the other curve
        JointContact,     // an interior polyline vertex lies on the other curve
    } kind;
    Point at;
    Rational param_a;
    Rational param_b;
};

std::vector<PairContact> pair_contacts(const Curve& a, const Curve& b);

// Self-contacts of one curve beyond the shared joints of adjacent pieces.
std::vector<PairContact> self_contacts(const Curve& c);

struct CurveCrossing {
    Point p;
    Rational param_a;
    Rational param_b;

    friend bool operator==(const CurveCrossing& x, const CurveCrossing& y) {
        return x.p == y.p && x.param_a == y.param_a && x.param_b == y.param_b;
    }
};

// All transversal crossings ordered along a. Throws InputError when any
// contact is degenerate, naming the pair and location.
std::vector<CurveCrossing> crossing_points(const Curve& a, const Curve& b);

// Curve param of p when p lies on c.
std::optional<Rational> param_on_curve(const Curve& c, const Point& p);

}  // namespace dsarr
