#pragma once

// Convex-geometry axiomatics and the circuit machinery: hulls, extreme
// points, rooted and critical rooted circuits, copoints, convex dimension,
// generation by total orders.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orthantgeo/core_sets.hpp"

namespace og {

// Rooted set (C, r) with r in C.  Canonical order: stem mask, then root.
struct RootedCircuit {
    Mask stem = 0;
    int root = 0;

    bool operator==(const RootedCircuit& o) const { return stem == o.stem && root == o.root; }
    bool operator<(const RootedCircuit& o) const {
        return stem != o.stem ? stem < o.stem : root < o.root;
    }
};

struct AxiomReport {
    bool c1 = false, c2 = false, c3 = false;
    // witnesses for failures: the missing set for c1, the offending pair for
    // c2, the non-extendable member for c3
    std::optional<Mask> c1_missing;
    std::optional<std::pair<Mask, Mask>> c2_pair;
    std::optional<Mask> c3_stuck;

    bool ok() const { return c1 && c2 && c3; }
};

class ConvexGeometry {
   public:
    static AxiomReport check_axioms(const SetFamily& f);
    // Throws std::invalid_argument when an axiom fails.
    static ConvexGeometry from_family(SetFamily f);

    const SetFamily& family() const { return family_; }
    const Universe& universe() const { return family_.universe; }
    int n() const { return family_.n(); }

    bool operator==(const ConvexGeometry& o) const { return family_ == o.family_; }

   private:
    explicit ConvexGeometry(SetFamily f) : family_(std::move(f)) {}
    SetFamily family_;
};

// Permutation of element indices, smallest first.  Ending intervals are the
// suffixes order[p..n-1].
struct TotalOrder {
    std::vector<int> order;

    bool operator==(const TotalOrder& o) const { return order == o.order; }
};

// Smallest member of an intersection-closed family (containing U) that
// contains a.  Preconditions unchecked; geometry wrapper below validates.
Mask family_closure(const SetFamily& f, Mask a);

Mask closure(const ConvexGeometry& g, Mask a);

// {x in X : X \ {x} convex}.  Throws when X is not a member.
Mask extreme_points(const ConvexGeometry& g, Mask x);

// Hull-of-extreme-points axiom and the anti-exchange axiom, both evaluated by
// definition.  Require (C1) and (C2); throw otherwise.
bool check_c4(const SetFamily& f);
bool check_anti_exchange(const SetFamily& f);

// All (C, r) whose trace is 2^C minus C\{r} exactly; canonical order.
// Parallelizable over candidate stems.
std::vector<RootedCircuit> rooted_circuits(const ConvexGeometry& g);

std::vector<RootedCircuit> critical_rooted_circuits(const ConvexGeometry& g);

// Family of all X meeting no rooted set in exactly stem-minus-root.  Applies
// the formula verbatim to arbitrary rooted sets; callers wanting circuit
// semantics validate with check_dietrich first.
SetFamily reconstruct_from_rooted_sets(const Universe& u, std::span<const RootedCircuit> rooted);

// The two rooted-circuit axioms of a convex geometry.
bool check_dietrich(std::span<const RootedCircuit> rooted);

// Rooted circuits recovered as maximal cubes of the complement family: the
// circuits whose cube is inclusion-maximal.
std::vector<RootedCircuit> circuits_via_cubes(const ConvexGeometry& g);

// Meet-irreducible members with their attaching point, i.e. members with
// exactly one upper cover in the lattice (C, subset).
std::vector<std::pair<Mask, int>> copoints(const ConvexGeometry& g);

// Width of the copoint poset, via minimum chain cover (bipartite matching).
int convex_dimension(const ConvexGeometry& g);

// cdim-many total orders whose ending-interval intersections generate the
// family exactly; verified internally by a generate_from_orders round trip.
std::vector<TotalOrder> generating_orders(const ConvexGeometry& g);

// The empty set plus all intersections of one ending interval per order.
// Always a convex geometry.  Throws when orders is empty.
SetFamily generate_from_orders(const Universe& u, std::span<const TotalOrder> orders);

// Union-closedness of the family.
bool is_downset_alignment(const ConvexGeometry& g);

}  // namespace og
