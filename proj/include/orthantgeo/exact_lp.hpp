#pragma once

// Exact rational strict-inequality feasibility.  Every verdict in the library
// that says "this region is empty / nonempty" comes through here; there is no
// floating point on any certificate path.
//
// The general route turns a strict system into slack maximization (append a
// slack t to every row, bound t <= 1, maximize t by two-phase simplex with
// Bland's rule; strictly feasible iff the optimum is positive).  Homogeneous
// systems take the scale-invariant route: replace a.x > 0 by a.x >= 1 and run
// a pure feasibility phase.  Low dimensions (1 and 2) additionally have a
// clipping fast path used by the region-enumeration hot loops.

#include <optional>
#include <vector>

#include "orthantgeo/rational.hpp"

namespace og {

enum class Rel { Less, Greater };

struct StrictRow {
    RatVec coeffs;
    Rational rhs;
    Rel rel = Rel::Greater;
};

struct StrictSystem {
    int dimension = 0;
    std::vector<StrictRow> rows;
};

// Witness satisfying every row strictly, or nullopt when the system is
// infeasible (a definitive answer either way).
std::optional<RatVec> strictly_feasible(const StrictSystem& s);

// Same contract, restricted to systems with every rhs zero (throws
// std::invalid_argument otherwise).
std::optional<RatVec> homogeneous_strictly_feasible(const StrictSystem& s);

// Exact convex-combination membership.  Throws on dimension mismatch.
bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points);

bool satisfies_strictly(const StrictSystem& s, const RatVec& x);

// One-dimensional systems resolve by interval intersection; handles
// unbounded feasible sets exactly.
std::optional<RatVec> strictly_feasible_1d(const StrictSystem& s);

struct Box2 {
    Rational xmin, xmax, ymin, ymax;
};

// Two-dimensional fast path by exact polygon clipping.  Complete only when
// the feasible region is contained in `box` (the caller guarantees this);
// any returned witness is substitution-checked against the full system.
std::optional<RatVec> strictly_feasible_2d_boxed(const StrictSystem& s, const Box2& box);

}  // namespace og
