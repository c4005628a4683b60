#pragma once

// Independent certification that a halfspace system realizes a declared set
// family: every candidate region is decided by exact LP and compared against
// membership.  Exhaustive scan for small universes, region-graph BFS for
// larger constructions (complete on realizable systems, whose region graphs
// are connected).

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "orthantgeo/realization.hpp"

namespace og {

struct Mismatch {
    SignVector sign;
    bool expected = false;
    bool found = false;
};

struct VerificationReport {
    bool verdict = false;
    std::size_t expected_regions = 0;
    std::size_t found_regions = 0;
    std::vector<Mismatch> mismatches;                     // sorted by sign vector
    std::vector<std::pair<SignVector, RatVec>> witnesses;  // sorted by sign vector
};

// Reusable feasibility certificates, keyed by the region's set.  Feasible
// entries are candidate witnesses and are always re-substituted before use;
// infeasible entries are trusted, which is sound exactly when rows have only
// been added since they were recorded (region emptiness is inherited).
struct WitnessCache {
    std::map<Mask, RatVec> feasible;
    std::set<Mask> infeasible;
};

// The strict system carving out the region of X: the member side of each
// arrangement hyperplane for elements of X, the other side for the rest, and
// every cone row.
StrictSystem region_system(const HalfspaceSystem& sys, Mask x);

// Decides one region, routing to the cheapest sound solver (sign certificate
// for coordinate cone systems, interval/clipping in dimensions 1 and 2,
// homogeneous rescaling for cones, slack maximization otherwise).
std::optional<RatVec> region_feasible(const HalfspaceSystem& sys, Mask x);

// Scans all 2^n candidate regions (n <= 22; beyond that, use verify_bfs).
// Region checks run concurrently; the report is reduced in mask order, so
// parallel and serial runs produce identical reports.
VerificationReport verify_exhaustive(const HalfspaceSystem& sys, const SetFamily& family,
                                     WitnessCache* cache = nullptr);

// Reference implementation of the same scan, kept deliberately simple and
// single-threaded; test suites compare the two reports for equality.
VerificationReport verify_exhaustive_serial(const HalfspaceSystem& sys, const SetFamily& family,
                                            WitnessCache* cache = nullptr);

// Flood fill over the region adjacency graph from a feasible seed region
// (throws if the seed is infeasible).
VerificationReport verify_bfs(const HalfspaceSystem& sys, const SetFamily& family,
                              SignVector seed);

// Exhaustive verification specialized to systems from realize_lowdim.
VerificationReport verify_lowdim(const HalfspaceSystem& sys, const SetFamily& family);

}  // namespace og
