#include "dsarr/validate.hpp"

#include <algorithm>

#include "dsarr/errors.hpp"

namespace dsarr {

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::SelfIntersection: return "self-intersection";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::EndpointContact: return "endpoint-contact";
        case ViolationKind::JointContact: return "joint-contact";
        case ViolationKind::TriplePoint: return "triple-point";
        case ViolationKind::CrossingBudget: return "crossing-budget";
    }
    throw InternalError("bad violation kind");
}

Json ValidationReport::to_json() const {
    Json j;
    j["ok"] = ok();
    Json arr = Json::array();
    for (const Violation& v : violations) {
        Json vj;
        vj["kind"] = violation_kind_name(v.kind);
        vj["curve_a"] = v.curve_a;
        vj["curve_b"] = v.curve_b;
        vj["at"] = point_to_json(v.at);
        if (!v.detail.empty()) vj["detail"] = v.detail;
        arr.push_back(vj);
    }
    j["violations"] = arr;
    return j;
}

namespace {

struct PairResult {
    std::vector<Violation> violations;
    std::vector<CurveCrossing> crossings;
};

PairResult scan_pair(const CurveSet& cs, int i, int j) {
    PairResult res;
    const Curve& a = cs.curves[static_cast<std::size_t>(i)];
    if (i == j) {
        for (const PairContact& c : self_contacts(a)) {
            res.violations.push_back(Violation{ViolationKind::SelfIntersection, a.id, "",
                                               c.at, ""});
        }
        return res;
    }
    const Curve& b = cs.curves[static_cast<std::size_t>(j)];
    for (const PairContact& c : pair_contacts(a, b)) {
        switch (c.kind) {
            case PairContact::Transversal:
                res.crossings.push_back(CurveCrossing{c.at, c.param_a, c.param_b});
                break;
            case PairContact::Overlap:
                res.violations.push_back(
                    Violation{ViolationKind::Overlap, a.id, b.id, c.at, ""});
                break;
            case PairContact::EndpointContact:
                res.violations.push_back(
                    Violation{ViolationKind::EndpointContact, a.id, b.id, c.at, ""});
                break;
            case PairContact::JointContact:
                res.violations.push_back(
                    Violation{ViolationKind::JointContact, a.id, b.id, c.at, ""});
                break;
        }
    }
    if (static_cast<int>(res.crossings.size()) > cs.s) {
        res.violations.push_back(Violation{
            ViolationKind::CrossingBudget, a.id, b.id,
            res.crossings.empty() ? Point{} : res.crossings.front().p,
            std::to_string(res.crossings.size()) + " crossings, budget " +
                std::to_string(cs.s)});
    }
    return res;
}

}  // namespace

ValidationReport validate_general_position(const CurveSet& cs, bool parallel) {
    int n = static_cast<int>(cs.curves.size());
    std::vector<std::pair<int, int>> tasks;
    for (int i = 0; i < n; ++i) tasks.emplace_back(i, i);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) tasks.emplace_back(i, j);
    }

    std::vector<PairResult> results(tasks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long t = 0; t < static_cast<long long>(tasks.size()); ++t) {
        auto [i, j] = tasks[static_cast<std::size_t>(t)];
        results[static_cast<std::size_t>(t)] = scan_pair(cs, i, j);
    }

    ValidationReport report;
    // Triple points: any point carried by two different crossing pairs.
    std::map<Point, std::vector<std::pair<int, int>>> by_point;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        auto [i, j] = tasks[t];
        for (const Violation& v : results[t].violations) report.violations.push_back(v);
        if (i != j && !results[t].crossings.empty()) {
            report.crossings[{i, j}] = results[t].crossings;
            for (const CurveCrossing& c : results[t].crossings) {
                by_point[c.p].push_back({i, j});
            }
        }
    }
    for (const auto& [p, pairs] : by_point) {
        if (pairs.size() > 1) {
            const Curve& a = cs.curves[static_cast<std::size_t>(pairs[0].first)];
            const Curve& b = cs.curves[static_cast<std::size_t>(pairs[0].second)];
            report.violations.push_back(Violation{ViolationKind::TriplePoint, a.id, b.id,
                                                  p,
                                                  std::to_string(pairs.size()) +
                                                      " crossing pairs through one point"});
        }
    }
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const Violation& x, const Violation& y) {
                         if (x.kind != y.kind) return x.kind < y.kind;
                         if (x.curve_a != y.curve_a) return x.curve_a < y.curve_a;
                         if (x.curve_b != y.curve_b) return x.curve_b < y.curve_b;
                         return x.at < y.at;
                     });
    return report;
}

void require_valid(const CurveSet& cs) {
    ValidationReport rep = validate_general_position(cs);
    if (!rep.ok()) {
        const Violation& v = rep.violations.front();
        throw InputError("curve set is not in general position: " +
                         violation_kind_name(v.kind) + " involving '" + v.curve_a +
                         (v.curve_b.empty() ? std::string("'")
                                            : "' and '" + v.curve_b + "'") +
                         " at (" + rat_str(v.at.x) + ", " + rat_str(v.at.y) + ")" +
                         (rep.violations.size() > 1
                              ? " (+" + std::to_string(rep.violations.size() - 1) +
                                    " more)"
                              : ""));
    }
}

}  // namespace dsarr
