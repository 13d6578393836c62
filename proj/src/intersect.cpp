#include "dsarr/intersect.hpp"

#include <algorithm>

#include "dsarr/errors.hpp"

namespace dsarr {

namespace {

struct PieceHit {
    enum Kind { None, At, Overlap } kind = None;
    Rational ta, tb;  // piece-local parameters of the contact point
};

bool in_piece_range(const Piece& p, const Rational& t) {
    if (t < 0) return false;
    if (!p.unbounded && t > 1) return false;
    return true;
}

// Overlap of collinear pieces: true when they share more than one point.
bool collinear_overlap(const Piece& A, const Piece& B, Rational& shared_ta) {
    // Map B's endpoints onto A's parameter line.
    Rational len2 = dot(A.dir, A.dir);
    Rational b0 = dot(B.origin - A.origin, A.dir) / len2;
    // B direction in units of A params per B param.
    Rational slope = dot(B.dir, A.dir) / len2;
    // B covers params [b0, b0 + slope] (segment) or a half-line.
    Rational lo = b0, hi = b0;
    bool lo_inf = false, hi_inf = false;
    if (B.unbounded) {
        if (slope > 0) hi_inf = true;
        else lo_inf = true;
    } else {
        Rational other = b0 + slope;
        lo = std::min(b0, other);
        hi = std::max(b0, other);
    }
    Rational alo(0), ahi(1);
    bool ahi_inf = A.unbounded;
    Rational rlo = lo_inf ? alo : std::max(alo, lo);
    bool hi_open = false;
    Rational rhi;
    if (ahi_inf && hi_inf) {
        // both extend forever in A-increasing direction
        shared_ta = rlo;
        return true;
    }
    if (ahi_inf) rhi = hi;
    else if (hi_inf) rhi = ahi;
    else rhi = std::min(ahi, hi);
    (void)hi_open;
    if (rlo > rhi) return false;
    shared_ta = rlo;
    return rlo < rhi;  // a single shared point is not an overlap
}

PieceHit piece_intersect(const Piece& A, const Piece& B) {
    PieceHit hit;
    Rational den = cross(A.dir, B.dir);
    Vec w = B.origin - A.origin;
    if (den == 0) {
        if (cross(w, A.dir) != 0) return hit;  // parallel, distinct lines
        Rational shared;
        if (collinear_overlap(A, B, shared)) {
            hit.kind = PieceHit::Overlap;
            hit.ta = shared;
            return hit;
        }
        // Collinear, at most one shared point: endpoints touching.
        // Resolve by checking B's origin and (if bounded) B's far endpoint.
        Rational len2 = dot(A.dir, A.dir);
        for (int side = 0; side < (B.unbounded ? 1 : 2); ++side) {
            Rational tb = Rational(side);
            Point q = B.origin + tb * B.dir;
            Rational ta = dot(q - A.origin, A.dir) / len2;
            if (in_piece_range(A, ta) && in_piece_range(B, tb)) {
                hit.kind = PieceHit::At;
                hit.ta = ta;
                hit.tb = tb;
                return hit;
            }
        }
        // A's endpoints inside B's range
        Rational blen2 = dot(B.dir, B.dir);
        for (int side = 0; side < (A.unbounded ? 1 : 2); ++side) {
            Rational ta = Rational(side);
            Point q = A.origin + ta * A.dir;
            Rational tb = dot(q - B.origin, B.dir) / blen2;
            if (in_piece_range(A, ta) && in_piece_range(B, tb)) {
                hit.kind = PieceHit::At;
                hit.ta = ta;
                hit.tb = tb;
                return hit;
            }
        }
        return hit;
    }
    Rational ta = cross(w, B.dir) / den;
    Rational tb = cross(w, A.dir) / den;
    if (!in_piece_range(A, ta) || !in_piece_range(B, tb)) return hit;
    hit.kind = PieceHit::At;
    hit.ta = ta;
    hit.tb = tb;
    return hit;
}

Rational global_param(const Piece& p, const Rational& t) {
    return p.param_base + Rational(p.param_sign) * t;
}

}  // namespace

SegIntersection segment_intersection(const Point& p1, const Point& p2, const Point& p3,
                                     const Point& p4) {
    if (p1 == p2 || p3 == p4) throw InputError("degenerate segment");
    Piece A{p1, p2 - p1, false, Rational(0), 1, 0};
    Piece B{p3, p4 - p3, false, Rational(0), 1, 0};
    PieceHit hit = piece_intersect(A, B);
    SegIntersection out;
    switch (hit.kind) {
        case PieceHit::None: return out;
        case PieceHit::Overlap:
            out.kind = SegRelation::Overlap;
            return out;
        case PieceHit::At: {
            bool a_end = hit.ta == 0 || hit.ta == 1;
            bool b_end = hit.tb == 0 || hit.tb == 1;
            if (!a_end && !b_end) {
                out.kind = SegRelation::ProperCrossing;
                out.point = A.origin + hit.ta * A.dir;
            } else if (a_end && b_end) {
                out.kind = SegRelation::SharedEndpoint;
            } else {
                out.kind = SegRelation::EndpointOnInterior;
            }
            return out;
        }
    }
    return out;
}

namespace {

// Shared scan over piece pairs; same_curve skips adjacent joints.
std::vector<PairContact> contacts_impl(const Curve& a, const Curve& b, bool same_curve) {
    std::vector<PairContact> out;
    auto pa = curve_pieces(a);
    auto pb = curve_pieces(b);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        for (std::size_t j = same_curve ? i + 1 : 0; j < pb.size(); ++j) {
            if (same_curve && j == i + 1) {
                // Adjacent pieces share their joint; only an overlap beyond
                // it is a contact. Overlaps were rejected at normalization
                // except ray/segment opposite-collinear cases.
                PieceHit h = piece_intersect(pa[i], pb[j]);
                if (h.kind == PieceHit::Overlap) {
                    out.push_back(PairContact{PairContact::Overlap,
                                              pa[i].origin + h.ta * pa[i].dir,
                                              global_param(pa[i], h.ta), Rational(0)});
                }
                continue;
            }
            PieceHit h = piece_intersect(pa[i], pb[j]);
            if (h.kind == PieceHit::None) continue;
            if (h.kind == PieceHit::Overlap) {
                Point at = pa[i].origin + h.ta * pa[i].dir;
                out.push_back(PairContact{PairContact::Overlap, at,
                                          global_param(pa[i], h.ta), Rational(0)});
                continue;
            }
            Point at = pa[i].origin + h.ta * pa[i].dir;
            Rational ga = global_param(pa[i], h.ta);
            Rational gb = global_param(pb[j], h.tb);
            bool a_vertex = param_is_vertex(a, ga);
            bool b_vertex = param_is_vertex(b, gb);
            PairContact::Kind kind;
            if (!a_vertex && !b_vertex) {
                kind = PairContact::Transversal;
            } else if ((a_vertex && param_is_finite_endpoint(a, ga)) ||
                       (b_vertex && param_is_finite_endpoint(b, gb))) {
                kind = PairContact::EndpointContact;
            } else {
                kind = PairContact::JointContact;
            }
            out.push_back(PairContact{kind, at, ga, gb});
        }
    }
    // A contact at a vertex shows up once per incident piece; keep one.
    std::sort(out.begin(), out.end(), [](const PairContact& x, const PairContact& y) {
        if (x.at != y.at) return x.at < y.at;
        return x.kind < y.kind;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PairContact& x, const PairContact& y) {
                              return x.at == y.at;
                          }),
              out.end());
    return out;
}

}  // namespace

std::vector<PairContact> pair_contacts(const Curve& a, const Curve& b) {
    return contacts_impl(a, b, false);
}

std::vector<PairContact> self_contacts(const Curve& c) {
    return contacts_impl(c, c, true);
}

std::vector<CurveCrossing> crossing_points(const Curve& a, const Curve& b) {
    auto contacts = pair_contacts(a, b);
    std::vector<CurveCrossing> out;
    for (const PairContact& c : contacts) {
        if (c.kind != PairContact::Transversal) {
            throw InputError("degenerate contact between '" + a.id + "' and '" + b.id +
                             "' at (" + rat_str(c.at.x) + ", " + rat_str(c.at.y) + ")");
        }
        out.push_back(CurveCrossing{c.at, c.param_a, c.param_b});
    }
    std::sort(out.begin(), out.end(), [](const CurveCrossing& x, const CurveCrossing& y) {
        return x.param_a < y.param_a;
    });
    return out;
}

std::optional<Rational> param_on_curve(const Curve& c, const Point& p) {
    for (const Piece& piece : curve_pieces(c)) {
        if (cross(p - piece.origin, piece.dir) != 0) continue;
        Rational len2 = dot(piece.dir, piece.dir);
        Rational t = dot(p - piece.origin, piece.dir) / len2;
        if (!in_piece_range(piece, t)) continue;
        return global_param(piece, t);
    }
    return std::nullopt;
}

}  // namespace dsarr
