#pragma once

#include <map>
#include <string>
#include <vector>

#include "dsarr/intersect.hpp"

namespace dsarr {

enum class ViolationKind {
    SelfIntersection,
    Overlap,
    EndpointContact,   // includes coincident endpoints
    JointContact,      // a polyline bend lying on another curve
    TriplePoint,       // one point shared by more than one crossing pair
    CrossingBudget,    // a pair crosses more than s times
};

std::string violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string curve_a;
    std::string curve_b;  // empty for self-intersection
    Point at;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    // Transversal crossings per curve-index pair (i < j), ordered along i.
    std::map<std::pair<int, int>, std::vector<CurveCrossing>> crossings;

    bool ok() const { return violations.empty(); }
    Json to_json() const;
};

// Enumerates every violation of general position: overlaps and tangential
// contacts, endpoint/joint incidences, triple points, and pairwise crossing
// counts beyond s. Violations are data, not errors. The pair scan runs under
// OpenMP unless parallel is false; output order is deterministic either way.
ValidationReport validate_general_position(const CurveSet& cs, bool parallel = true);

void require_valid(const CurveSet& cs);  // throws InputError on any violation

}  // namespace dsarr
