#include "dsarr/curve.hpp"

#include <algorithm>
#include <map>

#include "dsarr/errors.hpp"

namespace dsarr {

std::string curve_class_name(CurveClass c) {
    switch (c) {
        case CurveClass::G0: return "G0";
        case CurveClass::G1: return "G1";
        case CurveClass::G2: return "G2";
    }
    throw InternalError("bad curve class");
}

CurveClass curve_class_from_name(const std::string& name) {
    if (name == "G0") return CurveClass::G0;
    if (name == "G1") return CurveClass::G1;
    if (name == "G2") return CurveClass::G2;
    throw InputError("unknown curve class: '" + name + "'");
}

CurveClass Curve::cls() const {
    int rays = (start_ray ? 1 : 0) + (end_ray ? 1 : 0);
    if (rays == 0) return CurveClass::G2;
    if (rays == 1) return CurveClass::G1;
    return CurveClass::G0;
}

std::vector<Piece> curve_pieces(const Curve& c) {
    std::vector<Piece> out;
    int m = c.segment_count();
    if (c.start_ray) {
        out.push_back(Piece{c.vertices.front(), *c.start_ray, true, Rational(0), -1, -1});
    }
    for (int i = 0; i < m; ++i) {
        out.push_back(Piece{c.vertices[static_cast<std::size_t>(i)],
                            c.vertices[static_cast<std::size_t>(i + 1)] -
                                c.vertices[static_cast<std::size_t>(i)],
                            false, Rational(i), 1, i});
    }
    if (c.end_ray) {
        out.push_back(Piece{c.vertices.back(), *c.end_ray, true, Rational(m), 1, m});
    }
    return out;
}

bool param_is_vertex(const Curve& c, const Rational& t) {
    if (t.get_den() != 1) return false;
    return t >= 0 && t <= c.segment_count();
}

bool param_is_finite_endpoint(const Curve& c, const Rational& t) {
    if (!c.start_ray && t == 0) return true;
    if (!c.end_ray && t == c.segment_count()) return true;
    return false;
}

Point point_at_param(const Curve& c, const Rational& t) {
    int m = c.segment_count();
    if (t < 0) {
        if (!c.start_ray) throw InputError("param before start of a bounded curve");
        return c.vertices.front() + (-t) * (*c.start_ray);
    }
    if (t > m) {
        if (!c.end_ray) throw InputError("param beyond end of a bounded curve");
        return c.vertices.back() + (t - m) * (*c.end_ray);
    }
    if (m == 0) return c.vertices.front();
    mpz_class fl = t.get_num() / t.get_den();  // t >= 0, truncation == floor
    long i = fl.get_si();
    if (i == m) i = m - 1;
    if (i < 0) i = 0;
    Rational frac = t - Rational(i);
    return c.vertices[static_cast<std::size_t>(i)] +
           frac * (c.vertices[static_cast<std::size_t>(i + 1)] -
                   c.vertices[static_cast<std::size_t>(i)]);
}

std::vector<Point> sub_polyline(const Curve& c, Rational t0, Rational t1) {
    if (t0 > t1) std::swap(t0, t1);
    std::vector<Point> out;
    out.push_back(point_at_param(c, t0));
    int m = c.segment_count();
    // interior vertices with params strictly between t0 and t1
    for (int i = 0; i <= m; ++i) {
        Rational p(i);
        if (p > t0 && p < t1) out.push_back(c.vertices[static_cast<std::size_t>(i)]);
    }
    Point last = point_at_param(c, t1);
    if (out.back() != last) out.push_back(last);
    if (out.size() == 1) out.push_back(last);
    return out;
}

namespace {

void normalize_curve(Curve& c) {
    if (c.vertices.empty()) {
        throw InputError("curve '" + c.id + "' has no vertices");
    }
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        if (c.vertices[i] == c.vertices[i + 1]) {
            throw InputError("curve '" + c.id + "' repeats vertex " +
                             rat_str(c.vertices[i].x) + "," + rat_str(c.vertices[i].y));
        }
    }
    if (c.start_ray && c.start_ray->is_zero()) {
        throw InputError("curve '" + c.id + "' has a zero start ray direction");
    }
    if (c.end_ray && c.end_ray->is_zero()) {
        throw InputError("curve '" + c.id + "' has a zero end ray direction");
    }
    if (c.cls() == CurveClass::G2 && c.vertices.size() < 2) {
        throw InputError("bounded curve '" + c.id + "' needs at least two vertices");
    }
    // Finite endpoint first for semi-infinite curves.
    if (c.start_ray && !c.end_ray) {
        std::reverse(c.vertices.begin(), c.vertices.end());
        c.end_ray = c.start_ray;
        c.start_ray.reset();
    }

    // Merge interior vertices where consecutive segments continue straight;
    // reject fold-backs (self-overlap).
    std::vector<Point> cleaned;
    for (const Point& p : c.vertices) {
        while (cleaned.size() >= 2) {
            Vec u = cleaned.back() - cleaned[cleaned.size() - 2];
            Vec v = p - cleaned.back();
            if (cross(u, v) != 0) break;
            if (dot(u, v) < 0) {
                throw InputError("curve '" + c.id + "' folds back on itself");
            }
            cleaned.pop_back();
        }
        cleaned.push_back(p);
    }
    c.vertices = std::move(cleaned);
    // Ray collinear with the adjacent segment: drop the redundant vertex if
    // the ray continues the segment line, reject if it overlaps it.
    auto tidy_start = [&c]() {
        while (c.start_ray && c.vertices.size() >= 2) {
            Vec seg = c.vertices[1] - c.vertices[0];
            if (cross(*c.start_ray, seg) != 0) break;
            if (dot(*c.start_ray, seg) > 0) {
                throw InputError("curve '" + c.id + "' start ray overlaps its polyline");
            }
            c.vertices.erase(c.vertices.begin());
        }
    };
    auto tidy_end = [&c]() {
        while (c.end_ray && c.vertices.size() >= 2) {
            Vec seg = c.vertices[c.vertices.size() - 2] - c.vertices.back();
            if (cross(*c.end_ray, seg) != 0) break;
            if (dot(*c.end_ray, seg) > 0) {
                throw InputError("curve '" + c.id + "' end ray overlaps its polyline");
            }
            c.vertices.pop_back();
        }
    };
    tidy_start();
    tidy_end();
    if (c.vertices.size() == 1 && c.start_ray && c.end_ray) {
        if (cross(*c.start_ray, *c.end_ray) == 0 && dot(*c.start_ray, *c.end_ray) > 0) {
            throw InputError("curve '" + c.id + "' rays overlap each other");
        }
    }
}

}  // namespace

CurveSet CurveSet::make(CurveClass cls, int s, std::vector<Curve> curves) {
    if (s < 1) throw InputError("crossing budget s must be positive");
    std::map<std::string, int> seen;
    for (auto& c : curves) {
        normalize_curve(c);
        if (c.cls() != cls) {
            throw InputError("curve '" + c.id + "' is " + curve_class_name(c.cls()) +
                             " but the set is declared " + curve_class_name(cls));
        }
        if (c.id.empty()) throw InputError("curve with empty id");
        if (++seen[c.id] > 1) throw InputError("duplicate curve id '" + c.id + "'");
    }
    return CurveSet{cls, s, std::move(curves)};
}

int CurveSet::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].id == id) return static_cast<int>(i);
    }
    return -1;
}

Json CurveSet::to_json() const {
    Json j;
    j["class"] = curve_class_name(cls);
    j["s"] = s;
    Json arr = Json::array();
    for (const Curve& c : curves) {
        Json cj;
        cj["id"] = c.id;
        Json verts = Json::array();
        for (const Point& p : c.vertices) verts.push_back(point_to_json(p));
        cj["vertices"] = verts;
        cj["start"] = c.start_ray ? Json::array({rat_to_json(c.start_ray->dx),
                                                 rat_to_json(c.start_ray->dy)})
                                  : Json("finite");
        cj["end"] = c.end_ray ? Json::array({rat_to_json(c.end_ray->dx),
                                             rat_to_json(c.end_ray->dy)})
                              : Json("finite");
        arr.push_back(cj);
    }
    j["curves"] = arr;
    return j;
}

CurveSet CurveSet::from_json(const Json& j) {
    if (!j.is_object()) throw InputError("curve set must be a JSON object");
    if (!j.contains("class") || !j.contains("s") || !j.contains("curves")) {
        throw InputError("curve set needs 'class', 's' and 'curves'");
    }
    CurveClass cls = curve_class_from_name(j.at("class").get<std::string>());
    int s = j.at("s").get<int>();
    std::vector<Curve> curves;
    for (const Json& cj : j.at("curves")) {
        Curve c;
        c.id = cj.at("id").get<std::string>();
        for (const Json& vj : cj.at("vertices")) c.vertices.push_back(point_from_json(vj));
        auto parse_ray = [](const Json& rj) -> std::optional<Vec> {
            if (rj.is_string()) {
                if (rj.get<std::string>() != "finite") {
                    throw InputError("ray must be 'finite' or [dx,dy]");
                }
                return std::nullopt;
            }
            if (!rj.is_array() || rj.size() != 2) {
                throw InputError("ray must be 'finite' or [dx,dy]");
            }
            return Vec{rat_from_json(rj[0]), rat_from_json(rj[1])};
        };
        c.start_ray = parse_ray(cj.at("start"));
        c.end_ray = parse_ray(cj.at("end"));
        curves.push_back(std::move(c));
    }
    return CurveSet::make(cls, s, std::move(curves));
}

}  // namespace dsarr
