#pragma once

// Constructive realizations: cone systems from circuits over the coordinate
// arrangement, the convex-dimension construction over positively-sloped
// hyperplanes, the planar tree construction, witness points, and the dual
// point/shelling export.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthantgeo/convex_geometry.hpp"
#include "orthantgeo/exact_lp.hpp"

namespace og {

enum class SystemKind { CircuitCone, LowDim, Tree, Manual };

// Oriented arrangement hyperplane a.x = rhs; the positive side a.x > rhs is
// the side of regions whose set contains the element.
struct ArrangementRow {
    std::string label;
    RatVec coeffs;
    Rational rhs;
};

struct ConeSource {
    std::string kind;  // circuit | critical_circuit | positive_circuit | positivity | tangent | bound
    std::vector<std::string> stem;
    std::string root;
    std::vector<std::string> members;
    std::string note;
};

struct ConeRow {
    StrictRow row;
    ConeSource source;
};

struct HalfspaceSystem {
    int dimension = 0;
    Universe universe;  // one arrangement hyperplane per element, same order
    std::vector<ArrangementRow> arrangement;
    std::vector<ConeRow> cone;
    SystemKind kind = SystemKind::Manual;
    std::vector<TotalOrder> orders;  // construction metadata for LowDim systems
    std::optional<Box2> clip_box;    // bounded planar systems: region bounds

    bool homogeneous() const;
};

enum class CircuitChoice { All, Critical };

// Coordinate-arrangement cone system: one row per chosen circuit
// (coefficient * x_root > sum of the other stem coordinates) and one row per
// positive circuit (sum over the set < 0).  The coefficient defaults to n.
HalfspaceSystem realize_cone(const ConvexGeometry& g, CircuitChoice choice,
                             std::span<const Mask> positive = {}, long coefficient_override = 0);

// Constructive witness inside the X-orthant and the cone: ones on X, then a
// greedy single-element extension order on the rest with each coordinate set
// below every bound that closes at that step.  Integral coordinates.
RatVec witness_point(const ConvexGeometry& g, const HalfspaceSystem& sys, Mask x);

// Realization in exactly convex_dimension(g) dimensions.
HalfspaceSystem realize_lowdim(const ConvexGeometry& g);

// The explicit region point for a member (constant vector one past the last
// threshold for the empty set; 1 + predecessor threshold per axis otherwise).
RatVec witness_lowdim(const ConvexGeometry& g, const HalfspaceSystem& sys, Mask c);

struct TreeRealization {
    HalfspaceSystem system;               // d = 2
    std::vector<std::string> vertices;    // BFS order from the root
    std::vector<SignVector> signs;        // per vertex, aligned with `vertices`
    SetFamily family;                     // the path sets, one per vertex
    std::vector<RatVec> region_witnesses; // per vertex, aligned with `vertices`
};

// Planar realization of a tree: one chord of the parabola per non-root
// vertex over nested windows, the cone cut out by tangents, a ceiling and the
// window strip.  All coordinates rational.  Throws when the graph is not a
// tree or the root is unknown.
TreeRealization realize_tree(const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::string& root);

struct PointRepresentation {
    int dimension = 0;
    std::vector<std::pair<std::string, RatVec>> p;  // labeled ground points
    std::vector<RatVec> q;                          // one point per cone facet
};

// Dual export of a circuit-cone realization without positive rows: the
// coordinate normals and the cone-row normals scaled onto the hyperplane
// sum(x) = 1 (every normal has positive dot with the all-ones direction).
PointRepresentation export_point_representation(const ConvexGeometry& g,
                                                const HalfspaceSystem& sys);

// Brute force over all subsets of P: membership iff no point of P\X lies in
// conv(X ∪ Q), decided by exact hull membership.
bool verify_shelling(const PointRepresentation& rep, const ConvexGeometry& g);

}  // namespace og
