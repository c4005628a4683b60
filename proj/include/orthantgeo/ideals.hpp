#pragma once

// Ideals of convex geometries, positive circuits, bouquet and median axioms,
// and the merge construction embedding a bouquet of downset alignments into a
// downset alignment.

#include <vector>

#include "orthantgeo/convex_geometry.hpp"

namespace og {

// An ideal keeps its host: positive circuits are meaningless without it.
struct IdealOfGeometry {
    ConvexGeometry host;
    Mask sub_universe = 0;  // union of members unless declared otherwise
    SetFamily family;
};

// sub is downward-closed within the host family (and contained in it).
bool check_ideal(const ConvexGeometry& host, const SetFamily& sub);

struct BouquetReport {
    bool c1p = false;  // empty set present
    bool c2 = false;   // intersection-closed
    bool c3p = false;  // locally extendable
    bool ok() const { return c1p && c2 && c3p; }
};

BouquetReport check_bouquet_axioms(const SetFamily& f);
bool check_bouquet(const SetFamily& f);

// Validated bouquet of convex geometries.
class Bouquet {
   public:
    // Throws std::invalid_argument when (C1'), (C2) or (C3') fails.
    static Bouquet from_family(SetFamily f);
    const SetFamily& family() const { return family_; }

   private:
    explicit Bouquet(SetFamily f) : family_(std::move(f)) {}
    SetFamily family_;
};

// All P with trace of the ideal family on P equal to 2^P minus P itself.
// Elements outside the sub-universe appear as singleton positive circuits.
// Universe cap n <= 20 (full subset scan).
std::vector<Mask> positive_circuits(const Universe& u, const SetFamily& ideal_family);
std::vector<Mask> positive_circuits(const IdealOfGeometry& ideal);

// Members of the host containing none of the given sets.
SetFamily ideal_from_positive_circuits(const ConvexGeometry& host, std::span<const Mask> ps);

// Median-system separation axiom: every pair of elements is split by a member.
bool check_c6(const SetFamily& f);
// Pairwise-bounded triples have their union in the family.
bool check_c7(const SetFamily& f);
// Locally union-closed: bounded pairs have their union in the family.
bool check_locally_union_closed(const SetFamily& f);
inline bool check_c8(const SetFamily& f) { return check_locally_union_closed(f); }

// (C6) and (C7) together; a median set system additionally satisfies the
// bouquet basics (C1'), (C2).
bool check_median(const SetFamily& f);

struct MergeStep {
    Mask meet = 0;                    // the intersection the merge pivots on
    std::vector<Mask> merged_maxima;  // maximal members containing it
    std::size_t added = 0;            // new union sets introduced
};

struct EmbedResult {
    ConvexGeometry alignment;      // downset alignment on the spanned sub-universe
    SetFamily embedded;            // the input family re-indexed to that universe
    std::vector<MergeStep> steps;  // merge trace
};

// Embeds a bouquet of downset alignments as an ideal of a downset alignment.
// Requires (C1'), (C2), (C3') and (C8); throws otherwise.  The result lives
// on the sub-universe spanned by the family's union.
EmbedResult embed_bouquet(const SetFamily& bouquet);
EmbedResult embed_bouquet(const Bouquet& bouquet);

}  // namespace og
