#pragma once

// Brute-force oracles and instance generators behind the property tests:
// exhaustive enumeration of convex geometries at small n, order-generated
// random geometries, ideal enumeration/sampling, and definition-level
// recomputations of circuits, criticals, positive circuits and convex
// dimension that share no logic with the production paths.

#include <cstdint>
#include <vector>

#include "orthantgeo/ideals.hpp"

namespace og {

// Every family over {1..n} satisfying the geometry axioms, by filtered scan
// of all 2^(2^n) candidates.  n <= 4 (n = 5 is 2^32 candidates, use
// random_geometry instead).  Candidates are scanned in parallel chunks.
std::vector<ConvexGeometry> enumerate_convex_geometries(int n);

// Reference scan, single-threaded, iterating candidates in descending order;
// kept for self-consistency tests against the parallel ascending scan.
std::vector<ConvexGeometry> enumerate_convex_geometries_serial(int n);

// Geometry generated by k uniformly random total orders; deterministic per
// seed.  n <= 20.
ConvexGeometry random_geometry(int n, int k_orders, std::uint64_t seed);

// All downward-closed subfamilies containing the empty set, via DFS along a
// linear extension of the member poset.  Throws when the family is too large
// to enumerate (use sample_ideals).
std::vector<IdealOfGeometry> enumerate_ideals(const ConvexGeometry& g);

// Random downward-closed subfamilies (deterministic per seed); may repeat.
std::vector<IdealOfGeometry> sample_ideals(const ConvexGeometry& g, int count,
                                           std::uint64_t seed);

// Definition-level recomputations.  Each one re-evaluates its definition
// verbatim against the raw member list.
std::vector<RootedCircuit> oracle_rooted_circuits(const SetFamily& f);
std::vector<RootedCircuit> oracle_critical_circuits(const SetFamily& f);
std::vector<Mask> oracle_positive_circuits(const Universe& u, const SetFamily& ideal_family);
int oracle_cdim(const SetFamily& f);  // exhaustive antichain search, <= 24 copoints

}  // namespace og
