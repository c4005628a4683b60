#pragma once

// Bitset-backed set-family substrate: universes of up to 64 labeled elements,
// subsets as one machine word, families as sorted mask vectors.  Everything
// here is immutable after construction and pure, so concurrent reads need no
// synchronization.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace og {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Packs the bits of m that lie inside sel into the low |sel| positions,
// preserving bit order.  The inverse of spread_mask.
Mask compress_mask(Mask m, Mask sel);
// Spreads the low |sel| bits of m onto the positions of sel.
Mask spread_mask(Mask m, Mask sel);

// Ordered list of distinct element names; index <-> label bijection is stable
// for the lifetime of the instance.  Size capped at 64 so any subset fits a
// single word.
class Universe {
   public:
    Universe() = default;
    explicit Universe(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;
    Mask full_mask() const {
        return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
    }

    std::vector<std::string> mask_labels(Mask m) const;
    // Throws std::invalid_argument on unknown labels.
    Mask mask_of(const std::vector<std::string>& labels) const;

    bool operator==(const Universe& o) const { return labels_ == o.labels_; }
    bool operator!=(const Universe& o) const { return !(*this == o); }

   private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

// Canonical family of subsets: members sorted ascending by mask value, no
// duplicates.  Family equality is structural equality.
struct SetFamily {
    Universe universe;
    std::vector<Mask> members;

    static SetFamily make(Universe u, std::vector<Mask> members);

    bool contains(Mask m) const;
    std::size_t size() const { return members.size(); }
    int n() const { return universe.size(); }

    bool operator==(const SetFamily& o) const {
        return universe == o.universe && members == o.members;
    }
    bool operator!=(const SetFamily& o) const { return !(*this == o); }
};

// Total map U -> {-1, 0, +1} stored as two disjoint masks.
struct SignVector {
    Mask plus = 0;
    Mask minus = 0;

    int at(int i) const { return has_bit(plus, i) ? +1 : has_bit(minus, i) ? -1 : 0; }
    Mask zero_set(Mask full) const { return full & ~(plus | minus); }

    bool operator==(const SignVector& o) const { return plus == o.plus && minus == o.minus; }
    bool operator<(const SignVector& o) const {
        return plus != o.plus ? plus < o.plus : minus < o.minus;
    }
};

// "+,-,0,+" rendering in universe index order.
std::string sign_vector_str(const SignVector& sv, int n);
SignVector parse_sign_vector(const std::string& s, int n);

// 2^U \ F.  Practical cap n <= 22: the complement materializes all 2^n masks.
SetFamily complement_family(const SetFamily& f);

// { X ∩ Y : X ∈ F }, re-indexed over the sub-universe picked out by y.
SetFamily trace(const SetFamily& f, Mask y);

Universe sub_universe(const Universe& u, Mask y);

bool is_shattered(const SetFamily& f, Mask x);
bool is_strongly_shattered(const SetFamily& f, Mask x);

// All shattered sets, exploiting that they form a simplicial complex (every
// subset of a shattered set is shattered), so candidates grow level by level.
std::vector<Mask> shattered_sets(const SetFamily& f);

int vc_dimension(const SetFamily& f);  // throws on empty family

bool is_ample(const SetFamily& f);

// Inclusion-maximal cubes of the 1-inclusion graph, as sign vectors with 0 on
// free coordinates, +1 on the support, -1 elsewhere.  Sorted by (zero set,
// support).  Desk-scale operation (cube lattice explored breadth-first with
// memoized sub-cube checks).
std::vector<SignVector> maximal_cubes(const SetFamily& f);

}  // namespace og
