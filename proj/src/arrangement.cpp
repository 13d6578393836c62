#include "dsarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dsarr/errors.hpp"

namespace dsarr {

namespace {

struct ClipInfo {
    std::vector<Point> pts;       // clipped polyline
    std::vector<Rational> params; // curve param of each clipped vertex
};

// Exit point of a ray from a point strictly inside the frame.
std::pair<Point, Rational> ray_exit(const Point& o, const Vec& d, const Point& lo,
                                    const Point& hi) {
    Rational best_t(-1);
    bool have = false;
    auto consider = [&](const Rational& t) {
        if (t <= 0) return;
        if (!have || t < best_t) {
            best_t = t;
            have = true;
        }
    };
    if (d.dx != 0) {
        consider((lo.x - o.x) / d.dx);
        consider((hi.x - o.x) / d.dx);
    }
    if (d.dy != 0) {
        consider((lo.y - o.y) / d.dy);
        consider((hi.y - o.y) / d.dy);
    }
    if (!have) throw InternalError("ray does not leave the frame");
    Point p = o + best_t * d;
    // smallest positive t crossing a side line of an enclosing box is on the box
    return {p, best_t};
}

ClipInfo clip_curve(const Curve& c, const Point& lo, const Point& hi) {
    ClipInfo out;
    int m = c.segment_count();
    if (c.start_ray) {
        auto [p, t] = ray_exit(c.vertices.front(), *c.start_ray, lo, hi);
        out.pts.push_back(p);
        out.params.push_back(-t);
    }
    for (int i = 0; i <= m; ++i) {
        out.pts.push_back(c.vertices[static_cast<std::size_t>(i)]);
        out.params.push_back(Rational(i));
    }
    if (c.end_ray) {
        auto [p, t] = ray_exit(c.vertices.back(), *c.end_ray, lo, hi);
        out.pts.push_back(p);
        out.params.push_back(Rational(m) + t);
    }
    return out;
}

struct SweepSegment {
    Point a, b;       // lex ordered: a < b
    int curve;
    Rational pa, pb;  // params at a and b
};

struct FoundCrossing {
    Point p;
    Rational param;  // on the owning curve
};

// Lexicographic event sweep: segments sorted by their smaller endpoint; each
// incoming segment is tested exactly against the active ones whose x-range
// still overlaps.
void sweep_crossings(const std::vector<SweepSegment>& segs,
                     std::vector<std::vector<FoundCrossing>>& per_curve) {
    std::vector<int> order(segs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (segs[static_cast<std::size_t>(x)].a != segs[static_cast<std::size_t>(y)].a)
            return segs[static_cast<std::size_t>(x)].a < segs[static_cast<std::size_t>(y)].a;
        return segs[static_cast<std::size_t>(x)].b < segs[static_cast<std::size_t>(y)].b;
    });
    std::vector<int> active;
    for (int oi : order) {
        const SweepSegment& s = segs[static_cast<std::size_t>(oi)];
        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](int ai) {
                                        return segs[static_cast<std::size_t>(ai)].b.x <
                                               s.a.x;
                                    }),
                     active.end());
        for (int ai : active) {
            const SweepSegment& t = segs[static_cast<std::size_t>(ai)];
            if (t.curve == s.curve) continue;
            auto r = segment_intersection(s.a, s.b, t.a, t.b);
            if (r.kind == SegRelation::None) continue;
            if (r.kind != SegRelation::ProperCrossing) {
                throw InternalError("degeneracy surfaced mid-build; validation missed it");
            }
            const Point& p = *r.point;
            auto param_at = [&](const SweepSegment& seg) -> Rational {
                Vec d = seg.b - seg.a;
                Rational t01 = d.dx != 0 ? Rational((p.x - seg.a.x) / d.dx)
                                         : Rational((p.y - seg.a.y) / d.dy);
                return seg.pa + t01 * (seg.pb - seg.pa);
            };
            per_curve[static_cast<std::size_t>(s.curve)].push_back(
                FoundCrossing{p, param_at(s)});
            per_curve[static_cast<std::size_t>(t.curve)].push_back(
                FoundCrossing{p, param_at(t)});
        }
        active.push_back(oi);
    }
}

struct EdgeSpec {
    int curve;  // -1 frame
    std::vector<Point> geom;  // lo-param -> hi-param direction (or along side)
    Rational param_lo, param_hi;
};

// Point-in-walk parity with an exact on-boundary answer.
// Returns -1 on boundary, 0 outside, 1 inside.
int walk_contains(const Arrangement& arr, const Arrangement::Walk& w, const Point& q) {
    long crossings = 0;
    for (int h : w.halves) {
        const auto& geom = arr.halves[static_cast<std::size_t>(h)].geom;
        for (std::size_t i = 0; i + 1 < geom.size(); ++i) {
            const Point& a = geom[i];
            const Point& b = geom[i + 1];
            if (on_segment(a, b, q)) return -1;
            bool above_a = a.y > q.y;
            bool above_b = b.y > q.y;
            if (above_a == above_b) continue;
            Rational xat = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xat > q.x) ++crossings;
        }
    }
    return crossings % 2 == 1 ? 1 : 0;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Arrangement build_arrangement(const CurveSet& cs,
                              const std::vector<Point>& extra_frame_points) {
    Arrangement arr;
    arr.cs = cs;
    int n = static_cast<int>(cs.curves.size());

    // Frame: bounding box of all finite vertices, all crossings involving ray
    // pieces (those can land outside the vertex hull), and any extra points.
    bool have = false;
    Point lo, hi;
    auto grow = [&](const Point& p) {
        if (!have) {
            lo = hi = p;
            have = true;
            return;
        }
        if (p.x < lo.x) lo.x = p.x;
        if (p.y < lo.y) lo.y = p.y;
        if (p.x > hi.x) hi.x = p.x;
        if (p.y > hi.y) hi.y = p.y;
    };
    for (const Curve& c : cs.curves) {
        for (const Point& p : c.vertices) grow(p);
    }
    for (const Point& p : extra_frame_points) grow(p);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Curve& a = cs.curves[static_cast<std::size_t>(i)];
            const Curve& b = cs.curves[static_cast<std::size_t>(j)];
            if (!a.start_ray && !a.end_ray && !b.start_ray && !b.end_ray) continue;
            for (const CurveCrossing& c : crossing_points(a, b)) grow(c.p);
        }
    }
    if (!have) grow(Point{rat(0), rat(0)});
    lo.x -= 1;
    lo.y -= 1;
    hi.x += 1;
    hi.y += 1;
    arr.frame_lo = lo;
    arr.frame_hi = hi;

    // Clip and sweep.
    std::vector<ClipInfo> clipped;
    std::vector<SweepSegment> segs;
    for (int i = 0; i < n; ++i) {
        ClipInfo ci = clip_curve(cs.curves[static_cast<std::size_t>(i)], lo, hi);
        for (std::size_t k = 0; k + 1 < ci.pts.size(); ++k) {
            SweepSegment s;
            s.curve = i;
            s.a = ci.pts[k];
            s.b = ci.pts[k + 1];
            s.pa = ci.params[k];
            s.pb = ci.params[k + 1];
            if (s.b < s.a) {
                std::swap(s.a, s.b);
                std::swap(s.pa, s.pb);
            }
            segs.push_back(std::move(s));
        }
        clipped.push_back(std::move(ci));
    }
    std::vector<std::vector<FoundCrossing>> per_curve(static_cast<std::size_t>(n));
    sweep_crossings(segs, per_curve);

    // Split params per curve: clip/finite endpoints plus crossings.
    std::vector<EdgeSpec> edges;
    std::vector<std::pair<Point, bool>> vertex_pool;  // point, artificial
    for (int i = 0; i < n; ++i) {
        const Curve& c = cs.curves[static_cast<std::size_t>(i)];
        const ClipInfo& ci = clipped[static_cast<std::size_t>(i)];
        std::vector<Rational> params;
        params.push_back(ci.params.front());
        params.push_back(ci.params.back());
        for (const FoundCrossing& f : per_curve[static_cast<std::size_t>(i)]) {
            params.push_back(f.param);
        }
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());
        for (std::size_t k = 0; k + 1 < params.size(); ++k) {
            EdgeSpec e;
            e.curve = i;
            e.param_lo = params[k];
            e.param_hi = params[k + 1];
            e.geom = sub_polyline(c, params[k], params[k + 1]);
            edges.push_back(std::move(e));
        }
        // endpoint vertices: clip points are artificial, finite ends real
        vertex_pool.push_back({point_at_param(c, ci.params.front()),
                               c.start_ray.has_value()});
        vertex_pool.push_back({point_at_param(c, ci.params.back()),
                               c.end_ray.has_value()});
        for (const FoundCrossing& f : per_curve[static_cast<std::size_t>(i)]) {
            vertex_pool.push_back({f.p, false});
        }
    }

    // Frame edges: four sides split at corners and clip points.
    Point c00 = lo, c10 = Point{hi.x, lo.y}, c11 = hi, c01 = Point{lo.x, hi.y};
    for (const Point& c : {c00, c10, c11, c01}) vertex_pool.push_back({c, true});
    struct Side {
        Point a, b;
        bool horizontal;
    };
    std::vector<Side> sides = {{c00, c10, true}, {c10, c11, false},
                               {c11, c01, true}, {c01, c00, false}};
    for (const Side& side : sides) {
        std::vector<Point> pts = {side.a, side.b};
        for (const ClipInfo& ci : clipped) {
            for (const Point& p : {ci.pts.front(), ci.pts.back()}) {
                if (on_segment(side.a, side.b, p)) pts.push_back(p);
            }
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            EdgeSpec e;
            e.curve = -1;
            e.geom = {pts[k], pts[k + 1]};
            edges.push_back(std::move(e));
        }
    }
    // Interior curve endpoints of bounded ends (already covered above for all
    // curves; crossings added too). Deduplicate the vertex pool.
    std::sort(vertex_pool.begin(), vertex_pool.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::map<Point, int> vid;
    for (const auto& [p, artificial] : vertex_pool) {
        auto it = vid.find(p);
        if (it == vid.end()) {
            vid[p] = static_cast<int>(arr.vertices.size());
            Arrangement::Vertex v;
            v.p = p;
            v.artificial = artificial;
            arr.vertices.push_back(std::move(v));
        } else {
            // a point that is both a clip point and a crossing cannot happen;
            // frame corners and clip points stay artificial
            if (!artificial) {
                arr.vertices[static_cast<std::size_t>(it->second)].artificial = false;
            }
        }
    }

    // Deterministic edge order, then half-edges.
    std::sort(edges.begin(), edges.end(), [](const EdgeSpec& x, const EdgeSpec& y) {
        if (x.curve != y.curve) return x.curve < y.curve;
        if (x.curve >= 0 && x.param_lo != y.param_lo) return x.param_lo < y.param_lo;
        if (x.geom.front() != y.geom.front()) return x.geom.front() < y.geom.front();
        return x.geom.back() < y.geom.back();
    });
    for (const EdgeSpec& e : edges) {
        int h0 = static_cast<int>(arr.halves.size());
        Arrangement::HalfEdge f, b;
        f.origin = vid.at(e.geom.front());
        b.origin = vid.at(e.geom.back());
        f.twin = h0 + 1;
        b.twin = h0;
        f.curve = b.curve = e.curve;
        f.artificial = b.artificial = e.curve < 0;
        f.geom = e.geom;
        b.geom = std::vector<Point>(e.geom.rbegin(), e.geom.rend());
        if (e.curve >= 0) {
            f.forward = true;
            f.param_from = e.param_lo;
            f.param_to = e.param_hi;
            b.forward = false;
            b.param_from = e.param_hi;
            b.param_to = e.param_lo;
        }
        arr.halves.push_back(std::move(f));
        arr.halves.push_back(std::move(b));
    }

    // Counterclockwise rotation order at each vertex; next = clockwise
    // neighbor of the twin at the target vertex.
    for (int h = 0; h < static_cast<int>(arr.halves.size()); ++h) {
        arr.vertices[static_cast<std::size_t>(arr.halves[static_cast<std::size_t>(h)].origin)]
            .out.push_back(h);
    }
    for (auto& v : arr.vertices) {
        std::sort(v.out.begin(), v.out.end(), [&](int x, int y) {
            const auto& gx = arr.halves[static_cast<std::size_t>(x)].geom;
            const auto& gy = arr.halves[static_cast<std::size_t>(y)].geom;
            Vec dx = gx[1] - gx[0];
            Vec dy = gy[1] - gy[0];
            if (angle_less(dx, dy)) return true;
            if (angle_less(dy, dx)) return false;
            return x < y;  // parallel outgoing halves cannot happen post-validation
        });
    }
    for (int h = 0; h < static_cast<int>(arr.halves.size()); ++h) {
        int tw = arr.halves[static_cast<std::size_t>(h)].twin;
        int v = arr.halves[static_cast<std::size_t>(tw)].origin;
        const auto& out = arr.vertices[static_cast<std::size_t>(v)].out;
        auto it = std::find(out.begin(), out.end(), tw);
        if (it == out.end()) throw InternalError("twin missing from rotation order");
        std::size_t idx = static_cast<std::size_t>(it - out.begin());
        int nxt = out[(idx + out.size() - 1) % out.size()];
        arr.halves[static_cast<std::size_t>(h)].next = nxt;
        arr.halves[static_cast<std::size_t>(nxt)].prev = h;
    }

    // Orbits.
    std::vector<int> walk_of(arr.halves.size(), -1);
    for (int h = 0; h < static_cast<int>(arr.halves.size()); ++h) {
        if (walk_of[static_cast<std::size_t>(h)] >= 0) continue;
        Arrangement::Walk w;
        int cur = h;
        do {
            walk_of[static_cast<std::size_t>(cur)] = static_cast<int>(arr.walks.size());
            w.halves.push_back(cur);
            const auto& geom = arr.halves[static_cast<std::size_t>(cur)].geom;
            for (std::size_t i = 0; i + 1 < geom.size(); ++i) {
                w.area2 += geom[i].x * geom[i + 1].y - geom[i + 1].x * geom[i].y;
            }
            if (!arr.halves[static_cast<std::size_t>(cur)].artificial) w.has_real = true;
            cur = arr.halves[static_cast<std::size_t>(cur)].next;
        } while (cur != h);
        arr.walks.push_back(std::move(w));
    }

    // Faces: positive walks are outer boundaries; the rest are holes assigned
    // to the smallest positive walk strictly containing their lowest vertex.
    std::vector<int> face_of_walk(arr.walks.size(), -1);
    std::vector<int> positive;
    for (int w = 0; w < static_cast<int>(arr.walks.size()); ++w) {
        if (arr.walks[static_cast<std::size_t>(w)].area2 > 0) positive.push_back(w);
    }
    std::vector<Arrangement::Face> faces;
    std::vector<int> face_id_of_positive(arr.walks.size(), -1);
    for (int w : positive) {
        face_id_of_positive[static_cast<std::size_t>(w)] =
            static_cast<int>(faces.size());
        Arrangement::Face f;
        f.walks.push_back(w);
        faces.push_back(std::move(f));
    }
    Arrangement::Face outer;
    outer.artificial_outer = true;
    int outer_id = static_cast<int>(faces.size());
    faces.push_back(std::move(outer));

    for (int w = 0; w < static_cast<int>(arr.walks.size()); ++w) {
        if (arr.walks[static_cast<std::size_t>(w)].area2 > 0) continue;
        // representative: smallest origin among the walk's halves
        Point rep;
        bool first = true;
        for (int h : arr.walks[static_cast<std::size_t>(w)].halves) {
            const Point& p =
                arr.vertices[static_cast<std::size_t>(
                                 arr.halves[static_cast<std::size_t>(h)].origin)]
                    .p;
            if (first || p < rep) {
                rep = p;
                first = false;
            }
        }
        int best = -1;
        for (int pw : positive) {
            if (walk_contains(arr, arr.walks[static_cast<std::size_t>(pw)], rep) != 1)
                continue;
            if (best < 0 || arr.walks[static_cast<std::size_t>(pw)].area2 <
                               arr.walks[static_cast<std::size_t>(best)].area2) {
                best = pw;
            }
        }
        int fid = best < 0 ? outer_id : face_id_of_positive[static_cast<std::size_t>(best)];
        faces[static_cast<std::size_t>(fid)].walks.push_back(w);
        face_of_walk[static_cast<std::size_t>(w)] = fid;
    }
    for (int w : positive) face_of_walk[static_cast<std::size_t>(w)] =
        face_id_of_positive[static_cast<std::size_t>(w)];

    // Deterministic face order: by smallest incident vertex, outer region last.
    std::vector<int> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    auto face_key = [&](int f) {
        Point best;
        bool first = true;
        for (int w : faces[static_cast<std::size_t>(f)].walks) {
            for (int h : arr.walks[static_cast<std::size_t>(w)].halves) {
                const Point& p =
                    arr.vertices[static_cast<std::size_t>(
                                     arr.halves[static_cast<std::size_t>(h)].origin)]
                        .p;
                if (first || p < best) {
                    best = p;
                    first = false;
                }
            }
        }
        return best;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        bool ao = faces[static_cast<std::size_t>(a)].artificial_outer;
        bool bo = faces[static_cast<std::size_t>(b)].artificial_outer;
        if (ao != bo) return bo;  // outer last
        Point ka = face_key(a), kb = face_key(b);
        if (ka != kb) return ka < kb;
        return a < b;
    });
    std::vector<int> new_id(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_id[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    std::vector<Arrangement::Face> sorted_faces(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        sorted_faces[static_cast<std::size_t>(new_id[i])] = std::move(faces[i]);
    }
    arr.faces = std::move(sorted_faces);
    for (std::size_t w = 0; w < arr.walks.size(); ++w) {
        arr.walks[w].face = new_id[static_cast<std::size_t>(face_of_walk[w])];
    }
    for (auto& f : arr.faces) {
        for (int w : f.walks) {
            for (int h : arr.walks[static_cast<std::size_t>(w)].halves) {
                arr.halves[static_cast<std::size_t>(h)].face =
                    arr.walks[static_cast<std::size_t>(w)].face;
            }
        }
    }

    // Unbounded flag: the face touches artificial features.
    for (auto& f : arr.faces) {
        if (f.artificial_outer) continue;
        for (int w : f.walks) {
            for (int h : arr.walks[static_cast<std::size_t>(w)].halves) {
                const auto& he = arr.halves[static_cast<std::size_t>(h)];
                if (he.artificial ||
                    arr.vertices[static_cast<std::size_t>(he.origin)].artificial) {
                    f.unbounded = true;
                    break;
                }
            }
            if (f.unbounded) break;
        }
    }

    // Real counts and structural checks.
    for (const auto& v : arr.vertices) {
        if (!v.artificial) ++arr.real_vertices;
    }
    for (std::size_t h = 0; h < arr.halves.size(); h += 2) {
        if (!arr.halves[h].artificial) ++arr.real_edges;
    }
    for (const auto& f : arr.faces) {
        if (!f.artificial_outer) ++arr.real_faces;
    }
    DisjointSet dsu(static_cast<int>(arr.vertices.size()));
    for (std::size_t h = 0; h < arr.halves.size(); h += 2) {
        dsu.unite(arr.halves[h].origin, arr.halves[h + 1].origin);
    }
    std::vector<int> roots;
    for (int v = 0; v < static_cast<int>(arr.vertices.size()); ++v) {
        roots.push_back(dsu.find(v));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    arr.components = static_cast<int>(roots.size());
    long v_all = static_cast<long>(arr.vertices.size());
    long e_all = static_cast<long>(arr.halves.size() / 2);
    long f_all = static_cast<long>(arr.faces.size());
    if (v_all - e_all + f_all != 1 + arr.components) {
        throw InternalError("Euler check failed: V-E+F != 1+C");
    }
    return arr;
}

int locate(const Arrangement& arr, const Point& p) {
    if (!(p.x > arr.frame_lo.x && p.x < arr.frame_hi.x && p.y > arr.frame_lo.y &&
          p.y < arr.frame_hi.y)) {
        throw InputError("point lies outside the construction frame; rebuild with it "
                         "as an extra frame point");
    }
    for (std::size_t h = 0; h < arr.halves.size(); h += 2) {
        if (arr.halves[h].artificial) continue;
        const auto& geom = arr.halves[h].geom;
        for (std::size_t i = 0; i + 1 < geom.size(); ++i) {
            if (on_segment(geom[i], geom[i + 1], p)) {
                throw InputError("point lies on curve '" +
                                 arr.cs.curves[static_cast<std::size_t>(
                                                   arr.halves[h].curve)]
                                     .id +
                                 "'");
            }
        }
    }
    for (int f = 0; f < static_cast<int>(arr.faces.size()); ++f) {
        const auto& face = arr.faces[static_cast<std::size_t>(f)];
        if (face.artificial_outer) continue;
        bool inside_outer =
            walk_contains(arr, arr.walks[static_cast<std::size_t>(face.walks[0])], p) == 1;
        if (!inside_outer) continue;
        bool in_hole = false;
        for (std::size_t k = 1; k < face.walks.size(); ++k) {
            if (walk_contains(arr, arr.walks[static_cast<std::size_t>(face.walks[k])],
                              p) != 0) {
                in_hole = true;
                break;
            }
        }
        if (!in_hole) return f;
    }
    throw InternalError("point not located in any face");
}

std::vector<BoundaryRun> face_components(const Arrangement& arr, int face) {
    std::vector<BoundaryRun> runs;
    for (int w : arr.faces[static_cast<std::size_t>(face)].walks) {
        const auto& walk = arr.walks[static_cast<std::size_t>(w)];
        if (!walk.has_real) continue;
        bool all_real = true;
        for (int h : walk.halves) {
            if (arr.halves[static_cast<std::size_t>(h)].artificial) {
                all_real = false;
                break;
            }
        }
        if (all_real) {
            BoundaryRun run;
            run.circular = true;
            run.halves = walk.halves;
            runs.push_back(std::move(run));
            continue;
        }
        // maximal real runs of the cyclic walk
        int m = static_cast<int>(walk.halves.size());
        int start = -1;
        for (int i = 0; i < m; ++i) {
            if (arr.halves[static_cast<std::size_t>(walk.halves[static_cast<std::size_t>(i)])]
                    .artificial) {
                start = i;
                break;
            }
        }
        BoundaryRun cur;
        for (int k = 1; k <= m; ++k) {
            int idx = (start + k) % m;
            int h = walk.halves[static_cast<std::size_t>(idx)];
            if (arr.halves[static_cast<std::size_t>(h)].artificial) {
                if (!cur.halves.empty()) {
                    runs.push_back(std::move(cur));
                    cur = BoundaryRun{};
                }
            } else {
                cur.halves.push_back(h);
            }
        }
        if (!cur.halves.empty()) runs.push_back(std::move(cur));
    }
    // Deterministic order: by smallest origin point.
    std::stable_sort(runs.begin(), runs.end(), [&](const BoundaryRun& a,
                                                   const BoundaryRun& b) {
        auto key = [&](const BoundaryRun& r) {
            Point best;
            bool first = true;
            for (int h : r.halves) {
                const Point& p =
                    arr.vertices[static_cast<std::size_t>(
                                     arr.halves[static_cast<std::size_t>(h)].origin)]
                        .p;
                if (first || p < best) {
                    best = p;
                    first = false;
                }
            }
            return best;
        };
        return key(a) < key(b);
    });
    return runs;
}

FaceComplexity face_complexity(const Arrangement& arr, int face) {
    FaceComplexity out;
    for (const BoundaryRun& run : face_components(arr, face)) {
        long edges = static_cast<long>(run.halves.size());
        long verts;
        if (run.circular) {
            verts = edges;  // every step visits one vertex
        } else {
            verts = edges - 1;  // interior vertices only; run ends are artificial
        }
        // Interior vertices of a linear run are real crossings/endpoints by
        // construction; count them all.
        out.per_component.push_back(edges + verts);
        out.total += edges + verts;
    }
    return out;
}

std::vector<int> curves_on_face(const Arrangement& arr, int face) {
    std::vector<int> out;
    for (int w : arr.faces[static_cast<std::size_t>(face)].walks) {
        for (int h : arr.walks[static_cast<std::size_t>(w)].halves) {
            int c = arr.halves[static_cast<std::size_t>(h)].curve;
            if (c >= 0) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Json arrangement_to_json(const Arrangement& arr) {
    Json j;
    j["frame"] = Json::array({point_to_json(arr.frame_lo), point_to_json(arr.frame_hi)});
    Json vs = Json::array();
    for (const auto& v : arr.vertices) {
        Json vj;
        vj["p"] = point_to_json(v.p);
        vj["artificial"] = v.artificial;
        vs.push_back(vj);
    }
    j["vertices"] = vs;
    Json hs = Json::array();
    for (const auto& h : arr.halves) {
        Json hj;
        hj["origin"] = h.origin;
        hj["twin"] = h.twin;
        hj["next"] = h.next;
        hj["curve"] = h.curve < 0
                          ? Json(nullptr)
                          : Json(arr.cs.curves[static_cast<std::size_t>(h.curve)].id);
        hj["artificial"] = h.artificial;
        hj["face"] = h.face;
        hs.push_back(hj);
    }
    j["half_edges"] = hs;
    Json fs = Json::array();
    for (std::size_t f = 0; f < arr.faces.size(); ++f) {
        Json fj;
        fj["id"] = f;
        fj["unbounded"] = arr.faces[f].unbounded;
        fj["artificial_outer"] = arr.faces[f].artificial_outer;
        Json ws = Json::array();
        for (int w : arr.faces[f].walks) {
            ws.push_back(arr.walks[static_cast<std::size_t>(w)].halves);
        }
        fj["walks"] = ws;
        fs.push_back(fj);
    }
    j["faces"] = fs;
    j["counts"] = Json{{"vertices", arr.real_vertices},
                       {"edges", arr.real_edges},
                       {"faces", arr.real_faces}};
    return j;
}

}  // namespace dsarr
