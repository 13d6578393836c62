#pragma once

#include <vector>

#include "dsarr/curve.hpp"
#include "dsarr/intersect.hpp"

namespace dsarr {

// Half-edge subdivision of the plane induced by a validated curve set.
// Unbounded curves are clipped to an exact rectangular frame strictly
// containing every vertex of the unclipped arrangement; the frame and the
// clip points are artificial and excluded from all reported combinatorics.
struct Arrangement {
    struct Vertex {
        Point p;
        bool artificial = false;
        std::vector<int> out;  // outgoing half-edges, counterclockwise
    };

    struct HalfEdge {
        int origin = -1;
        int twin = -1;
        int next = -1;
        int prev = -1;
        int curve = -1;  // -1 for frame edges
        bool forward = true;  // runs along increasing curve param
        Rational param_from, param_to;  // curve params at origin/target
        std::vector<Point> geom;        // origin .. target, with bends
        int face = -1;
        bool artificial = false;
    };

    struct Walk {
        std::vector<int> halves;  // one orbit, face on the left
        Rational area2;           // doubled signed area
        bool has_real = false;
        int face = -1;
    };

    struct Face {
        std::vector<int> walks;  // outer walk first (absent for outer_face)
        bool artificial_outer = false;  // region beyond the frame
        bool unbounded = false;         // true face is unbounded
    };

    CurveSet cs;
    Point frame_lo, frame_hi;
    std::vector<Vertex> vertices;
    std::vector<HalfEdge> halves;
    std::vector<Walk> walks;
    std::vector<Face> faces;

    long real_vertices = 0;
    long real_edges = 0;
    long real_faces = 0;
    int components = 0;  // of the frame-closed picture

    int target_of(int h) const { return halves[static_cast<std::size_t>(halves[static_cast<std::size_t>(h)].twin)].origin; }
};

// Preconditions: validate_general_position(cs) is clean. Extra points extend
// the frame so later point queries stay inside it.
Arrangement build_arrangement(const CurveSet& cs,
                              const std::vector<Point>& extra_frame_points = {});

// Face containing p. Throws InputError when p lies on a curve or outside the
// construction frame (rebuild with p as an extra frame point for the latter).
int locate(const Arrangement& arr, const Point& p);

// One true boundary component of a face: a maximal run of real half-edges of
// one walk (linear, reaching infinity at both ends) or a fully real walk
// (circular).
struct BoundaryRun {
    bool circular = false;
    std::vector<int> halves;  // DCEL order, face on the left
};

std::vector<BoundaryRun> face_components(const Arrangement& arr, int face);

struct FaceComplexity {
    long total = 0;
    std::vector<long> per_component;
};

// Vertices and edges along the face boundary, counted with multiplicity,
// artificial features excluded.
FaceComplexity face_complexity(const Arrangement& arr, int face);

std::vector<int> curves_on_face(const Arrangement& arr, int face);

Json arrangement_to_json(const Arrangement& arr);

}  // namespace dsarr
