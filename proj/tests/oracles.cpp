#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "dsarr/errors.hpp"

namespace dsarr::test {

int dp_pair_alternation(const std::vector<ds::Symbol>& items, ds::Symbol a,
                        ds::Symbol b) {
    // best_a = longest alternation ending with a, similarly best_b.
    int best_a = 0, best_b = 0;
    for (ds::Symbol s : items) {
        if (s == a) {
            best_a = std::max(best_a, best_b + 1);
        } else if (s == b) {
            best_b = std::max(best_b, best_a + 1);
        }
    }
    return std::max(best_a, best_b);
}

int dp_max_alternation(const std::vector<ds::Symbol>& items) {
    auto alpha = ds::SymbolSet::of(items);
    if (items.empty()) return 0;
    if (alpha.size() == 1) return static_cast<int>(items.size());
    int best = 0;
    for (std::size_t i = 0; i < alpha.ids.size(); ++i) {
        for (std::size_t j = i + 1; j < alpha.ids.size(); ++j) {
            best = std::max(best, dp_pair_alternation(items, alpha.ids[i], alpha.ids[j]));
        }
    }
    return best;
}

namespace {

struct Dart {  // directed split-segment
    int from, to;     // node ids
    int curve;
    bool along;       // runs with the curve's own direction
    int twin;
    int next = -1;
};

struct OracleGraph {
    std::vector<Point> nodes;
    std::vector<Dart> darts;
    std::vector<std::vector<int>> orbits;
    std::vector<Rational> orbit_area2;
};

int angle_quadrant(const Vec& v) {
    if (v.dx > 0 && v.dy >= 0) return 0;
    if (v.dx <= 0 && v.dy > 0) return 1;
    if (v.dx < 0 && v.dy <= 0) return 2;
    return 3;
}

bool dir_less(const Vec& a, const Vec& b) {
    int qa = angle_quadrant(a), qb = angle_quadrant(b);
    if (qa != qb) return qa < qb;
    return cross(a, b) > 0;
}

OracleGraph build_oracle_graph(const CurveSet& cs) {
    OracleGraph g;
    std::map<Point, int> node_of;
    auto node = [&](const Point& p) {
        auto it = node_of.find(p);
        if (it != node_of.end()) return it->second;
        int id = static_cast<int>(g.nodes.size());
        node_of[p] = id;
        g.nodes.push_back(p);
        return id;
    };
    // split every segment of every curve at every crossing with other curves
    for (std::size_t i = 0; i < cs.curves.size(); ++i) {
        const Curve& c = cs.curves[i];
        for (std::size_t si = 0; si + 1 < c.vertices.size(); ++si) {
            const Point& a = c.vertices[si];
            const Point& b = c.vertices[si + 1];
            std::vector<Point> cuts = {a, b};
            for (std::size_t j = 0; j < cs.curves.size(); ++j) {
                if (j == i) continue;
                const Curve& d = cs.curves[j];
                for (std::size_t sj = 0; sj + 1 < d.vertices.size(); ++sj) {
                    auto r = segment_intersection(a, b, d.vertices[sj],
                                                  d.vertices[sj + 1]);
                    if (r.kind == SegRelation::ProperCrossing) cuts.push_back(*r.point);
                }
            }
            Vec dir = b - a;
            std::sort(cuts.begin(), cuts.end(), [&](const Point& x, const Point& y) {
                return dot(x - a, dir) < dot(y - a, dir);
            });
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
                int u = node(cuts[k]);
                int v = node(cuts[k + 1]);
                int d0 = static_cast<int>(g.darts.size());
                g.darts.push_back(Dart{u, v, static_cast<int>(i), true, d0 + 1});
                g.darts.push_back(Dart{v, u, static_cast<int>(i), false, d0});
            }
        }
    }
    // rotation system and next pointers (face on the left)
    std::vector<std::vector<int>> out(g.nodes.size());
    for (int d = 0; d < static_cast<int>(g.darts.size()); ++d) {
        out[static_cast<std::size_t>(g.darts[static_cast<std::size_t>(d)].from)]
            .push_back(d);
    }
    for (auto& lst : out) {
        std::sort(lst.begin(), lst.end(), [&](int x, int y) {
            const Dart& dx = g.darts[static_cast<std::size_t>(x)];
            const Dart& dy = g.darts[static_cast<std::size_t>(y)];
            Vec vx = g.nodes[static_cast<std::size_t>(dx.to)] -
                     g.nodes[static_cast<std::size_t>(dx.from)];
            Vec vy = g.nodes[static_cast<std::size_t>(dy.to)] -
                     g.nodes[static_cast<std::size_t>(dy.from)];
            return dir_less(vx, vy);
        });
    }
    for (int d = 0; d < static_cast<int>(g.darts.size()); ++d) {
        int tw = g.darts[static_cast<std::size_t>(d)].twin;
        const auto& lst =
            out[static_cast<std::size_t>(g.darts[static_cast<std::size_t>(tw)].from)];
        auto it = std::find(lst.begin(), lst.end(), tw);
        std::size_t idx = static_cast<std::size_t>(it - lst.begin());
        g.darts[static_cast<std::size_t>(d)].next =
            lst[(idx + lst.size() - 1) % lst.size()];
    }
    std::vector<int> seen(g.darts.size(), 0);
    for (int d = 0; d < static_cast<int>(g.darts.size()); ++d) {
        if (seen[static_cast<std::size_t>(d)]) continue;
        std::vector<int> orbit;
        Rational area2(0);
        int cur = d;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            orbit.push_back(cur);
            const Dart& dd = g.darts[static_cast<std::size_t>(cur)];
            const Point& pa = g.nodes[static_cast<std::size_t>(dd.from)];
            const Point& pb = g.nodes[static_cast<std::size_t>(dd.to)];
            area2 += pa.x * pb.y - pb.x * pa.y;
            cur = dd.next;
        } while (cur != d);
        g.orbits.push_back(std::move(orbit));
        g.orbit_area2.push_back(area2);
    }
    return g;
}

// Canonical string of one boundary cycle: smallest rotation of step tokens.
std::string canonical_cycle(const std::vector<std::string>& steps) {
    if (steps.empty()) return "";
    std::string best;
    for (std::size_t r = 0; r < steps.size(); ++r) {
        std::string s;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            s += steps[(r + k) % steps.size()];
        }
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

SubdivisionSummary oracle_subdivision(const CurveSet& cs) {
    if (cs.cls != CurveClass::G2) {
        throw InternalError("oracle_subdivision expects bounded curves");
    }
    for (const Curve& c : cs.curves) {
        if (c.vertices.size() != 2) {
            throw InternalError("oracle_subdivision expects plain segments");
        }
    }
    OracleGraph g = build_oracle_graph(cs);
    SubdivisionSummary sum;
    sum.v = static_cast<long>(g.nodes.size());
    sum.e = static_cast<long>(g.darts.size() / 2);
    // components by union-find over nodes
    std::vector<int> parent(g.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (std::size_t d = 0; d < g.darts.size(); d += 2) {
        parent[static_cast<std::size_t>(find(g.darts[d].from))] = find(g.darts[d].to);
    }
    std::vector<int> roots;
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) roots.push_back(find(v));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    long comps = static_cast<long>(roots.size());
    sum.f = 1 + comps - sum.v + sum.e;  // Euler accounting, unbounded included

    // group orbits into faces: positive orbit = outer boundary of a face;
    // others attach to the smallest positive orbit strictly containing them
    auto orbit_contains = [&](int orbit, const Point& q) -> int {
        long crossings = 0;
        for (int d : g.orbits[static_cast<std::size_t>(orbit)]) {
            const Dart& dd = g.darts[static_cast<std::size_t>(d)];
            const Point& a = g.nodes[static_cast<std::size_t>(dd.from)];
            const Point& b = g.nodes[static_cast<std::size_t>(dd.to)];
            if (on_segment(a, b, q)) return -1;
            if ((a.y > q.y) == (b.y > q.y)) continue;
            Rational xat = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xat > q.x) ++crossings;
        }
        return crossings % 2 == 1 ? 1 : 0;
    };
    int n_orbits = static_cast<int>(g.orbits.size());
    std::vector<int> face_of(n_orbits, -1);
    std::vector<int> positive;
    int next_face = 0;
    for (int o = 0; o < n_orbits; ++o) {
        if (g.orbit_area2[static_cast<std::size_t>(o)] > 0) {
            positive.push_back(o);
            face_of[static_cast<std::size_t>(o)] = next_face++;
        }
    }
    int unbounded_face = next_face++;
    for (int o = 0; o < n_orbits; ++o) {
        if (g.orbit_area2[static_cast<std::size_t>(o)] > 0) continue;
        Point rep;
        bool first = true;
        for (int d : g.orbits[static_cast<std::size_t>(o)]) {
            const Point& p = g.nodes[static_cast<std::size_t>(
                g.darts[static_cast<std::size_t>(d)].from)];
            if (first || p < rep) {
                rep = p;
                first = false;
            }
        }
        int best = -1;
        for (int po : positive) {
            if (orbit_contains(po, rep) != 1) continue;
            if (best < 0 || g.orbit_area2[static_cast<std::size_t>(po)] <
                               g.orbit_area2[static_cast<std::size_t>(best)]) {
                best = po;
            }
        }
        face_of[static_cast<std::size_t>(o)] =
            best < 0 ? unbounded_face : face_of[static_cast<std::size_t>(best)];
    }
    if (next_face != sum.f) {
        throw InternalError("oracle face count disagrees with Euler accounting");
    }

    std::vector<long> complexity(static_cast<std::size_t>(next_face), 0);
    std::vector<std::vector<std::string>> cycles(static_cast<std::size_t>(next_face));
    for (int o = 0; o < n_orbits; ++o) {
        const auto& orbit = g.orbits[static_cast<std::size_t>(o)];
        complexity[static_cast<std::size_t>(face_of[static_cast<std::size_t>(o)])] +=
            2 * static_cast<long>(orbit.size());
        std::vector<std::string> steps;
        for (int d : orbit) {
            const Dart& dd = g.darts[static_cast<std::size_t>(d)];
            const Point& p = g.nodes[static_cast<std::size_t>(dd.from)];
            steps.push_back(cs.curves[static_cast<std::size_t>(dd.curve)].id +
                            (dd.along ? "+" : "-") + "@" + rat_str(p.x) + "," +
                            rat_str(p.y) + ";");
        }
        cycles[static_cast<std::size_t>(face_of[static_cast<std::size_t>(o)])].push_back(
            canonical_cycle(steps));
    }
    for (int f = 0; f < next_face; ++f) {
        sum.face_complexities.push_back(complexity[static_cast<std::size_t>(f)]);
        auto& cyc = cycles[static_cast<std::size_t>(f)];
        std::sort(cyc.begin(), cyc.end());
        std::string sig;
        for (auto& s : cyc) sig += s + "|";
        sum.face_signatures.push_back(sig);
    }
    std::sort(sum.face_complexities.begin(), sum.face_complexities.end());
    std::sort(sum.face_signatures.begin(), sum.face_signatures.end());
    return sum;
}

SubdivisionSummary arrangement_summary(const Arrangement& arr) {
    SubdivisionSummary sum;
    sum.v = arr.real_vertices;
    sum.e = arr.real_edges;
    sum.f = arr.real_faces;
    for (int f = 0; f < static_cast<int>(arr.faces.size()); ++f) {
        if (arr.faces[static_cast<std::size_t>(f)].artificial_outer) continue;
        sum.face_complexities.push_back(face_complexity(arr, f).total);
        std::vector<std::string> cyc;
        for (const BoundaryRun& run : face_components(arr, f)) {
            std::vector<std::string> steps;
            for (int h : run.halves) {
                const auto& he = arr.halves[static_cast<std::size_t>(h)];
                // a run half corresponds to one split sub-segment chain
                const Point& p =
                    arr.vertices[static_cast<std::size_t>(he.origin)].p;
                steps.push_back(arr.cs.curves[static_cast<std::size_t>(he.curve)].id +
                                (he.forward ? "+" : "-") + "@" + rat_str(p.x) + "," +
                                rat_str(p.y) + ";");
            }
            cyc.push_back(canonical_cycle(steps));
        }
        std::sort(cyc.begin(), cyc.end());
        std::string sig;
        for (auto& s : cyc) sig += s + "|";
        sum.face_signatures.push_back(sig);
    }
    std::sort(sum.face_complexities.begin(), sum.face_complexities.end());
    std::sort(sum.face_signatures.begin(), sum.face_signatures.end());
    return sum;
}

}  // namespace dsarr::test
