#include "orthantgeo/oracle_enum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orthantgeo/parallel.hpp"
#include "orthantgeo/rng.hpp"

namespace og {

namespace {

Universe numbered_universe(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Universe(std::move(labels));
}

// Candidate family encoded as a bitmask over the 2^n subset slots.
bool family_bits_valid(std::uint32_t b, int n) {
    const int slots = 1 << n;
    if (!(b & 1u)) return false;                                // empty set
    if (!((b >> (slots - 1)) & 1u)) return false;               // full set
    for (int i = 0; i < slots; ++i) {
        if (!((b >> i) & 1u)) continue;
        for (int j = i + 1; j < slots; ++j) {
            if (!((b >> j) & 1u)) continue;
            if (!((b >> (i & j)) & 1u)) return false;           // intersection-closed
        }
    }
    for (int i = 0; i < slots - 1; ++i) {
        if (!((b >> i) & 1u)) continue;
        bool ext = false;
        for (int e = 0; e < n && !ext; ++e)
            if (!((i >> e) & 1) && ((b >> (i | (1 << e))) & 1u)) ext = true;
        if (!ext) return false;                                 // one-element extension
    }
    return true;
}

ConvexGeometry geometry_from_bits(std::uint32_t b, int n, const Universe& u) {
    std::vector<Mask> members;
    const int slots = 1 << n;
    for (int i = 0; i < slots; ++i)
        if ((b >> i) & 1u) members.push_back(static_cast<Mask>(i));
    return ConvexGeometry::from_family(SetFamily::make(u, std::move(members)));
}

}  // namespace

std::vector<ConvexGeometry> enumerate_convex_geometries(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("enumerate_convex_geometries: n must be 1..4 (use random_geometry)");
    const Universe u = numbered_universe(n);
    const std::uint64_t total = std::uint64_t{1} << (1 << n);

    std::vector<std::vector<std::uint32_t>> hits(worker_count());
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long long b = 0; b < static_cast<long long>(total); ++b) {
        if (family_bits_valid(static_cast<std::uint32_t>(b), n)) {
            int tid = 0;
#ifdef _OPENMP
            tid = omp_get_thread_num();
#endif
            hits.at(tid).push_back(static_cast<std::uint32_t>(b));
        }
    }
    std::vector<std::uint32_t> all;
    for (auto& v : hits) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());

    std::vector<ConvexGeometry> out;
    out.reserve(all.size());
    for (std::uint32_t b : all) out.push_back(geometry_from_bits(b, n, u));
    return out;
}

std::vector<ConvexGeometry> enumerate_convex_geometries_serial(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("enumerate_convex_geometries: n must be 1..4 (use random_geometry)");
    const Universe u = numbered_universe(n);
    const std::uint64_t total = std::uint64_t{1} << (1 << n);
    std::vector<ConvexGeometry> out;
    for (std::uint64_t b = total; b-- > 0;)
        if (family_bits_valid(static_cast<std::uint32_t>(b), n))
            out.push_back(geometry_from_bits(static_cast<std::uint32_t>(b), n, u));
    std::reverse(out.begin(), out.end());
    return out;
}

ConvexGeometry random_geometry(int n, int k_orders, std::uint64_t seed) {
    if (n < 1 || n > 20) throw std::invalid_argument("random_geometry: n must be 1..20");
    if (k_orders < 1) throw std::invalid_argument("random_geometry: need at least one order");
    Rng rng(seed);
    const Universe u = numbered_universe(n);
    std::vector<TotalOrder> orders(k_orders);
    for (auto& o : orders) {
        o.order.resize(n);
        for (int i = 0; i < n; ++i) o.order[i] = i;
        rng.shuffle(o.order);
    }
    return ConvexGeometry::from_family(generate_from_orders(u, orders));
}

std::vector<IdealOfGeometry> enumerate_ideals(const ConvexGeometry& g) {
    const auto& members = g.family().members;
    const std::size_t k = members.size();
    if (k > 30) throw std::invalid_argument("enumerate_ideals: family too large, use sample_ideals");

    // ascending mask order is a linear extension of the containment order
    std::vector<std::vector<int>> strict_subs(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (subset_of(members[j], members[i])) strict_subs[i].push_back(static_cast<int>(j));

    std::vector<IdealOfGeometry> out;
    std::vector<bool> chosen(k, false);
    constexpr std::size_t kMaxIdeals = 1u << 20;

    auto emit = [&] {
        std::vector<Mask> fam;
        Mask span = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (chosen[i]) {
                fam.push_back(members[i]);
                span |= members[i];
            }
        out.push_back({g, span, SetFamily::make(g.universe(), std::move(fam))});
    };

    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (out.size() > kMaxIdeals) throw std::invalid_argument("enumerate_ideals: too many ideals");
        if (i == k) {
            emit();
            return;
        }
        self(self, i + 1);  // exclude members[i]
        bool allowed = true;
        for (int j : strict_subs[i])
            if (!chosen[j]) {
                allowed = false;
                break;
            }
        if (allowed) {
            chosen[i] = true;
            self(self, i + 1);
            chosen[i] = false;
        }
    };
    chosen[0] = true;  // the empty set is member 0 and belongs to every ideal
    dfs(dfs, 1);
    return out;
}

std::vector<IdealOfGeometry> sample_ideals(const ConvexGeometry& g, int count,
                                           std::uint64_t seed) {
    Rng rng(seed);
    const auto& members = g.family().members;
    std::vector<IdealOfGeometry> out;
    for (int s = 0; s < count; ++s) {
        const int picks = 1 + static_cast<int>(rng.below(3));
        std::vector<Mask> tops;
        for (int t = 0; t < picks; ++t) tops.push_back(members[rng.below(members.size())]);
        std::vector<Mask> fam;
        Mask span = 0;
        for (Mask m : members) {
            bool below = m == 0;
            for (Mask top : tops)
                if (subset_of(m, top)) below = true;
            if (below) {
                fam.push_back(m);
                span |= m;
            }
        }
        out.push_back({g, span, SetFamily::make(g.universe(), std::move(fam))});
    }
    return out;
}

std::vector<RootedCircuit> oracle_rooted_circuits(const SetFamily& f) {
    const int n = f.n();
    if (n > 16) throw std::invalid_argument("oracle_rooted_circuits: out of brute-force reach");
    std::vector<RootedCircuit> out;
    const Mask full = f.universe.full_mask();
    for (Mask c = 1; c <= full && c != 0; ++c) {
        std::set<Mask> traced;
        for (Mask m : f.members) traced.insert(m & c);
        for (Mask rest = c; rest; rest &= rest - 1) {
            const int r = lowest_bit(rest);
            std::set<Mask> expected;
            for (Mask s = c;; s = (s - 1) & c) {
                if (s != (c & ~bit(r))) expected.insert(s);
                if (s == 0) break;
            }
            if (traced == expected) out.push_back({c, r});
        }
        if (c == full) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootedCircuit> oracle_critical_circuits(const SetFamily& f) {
    std::vector<RootedCircuit> out;
    const Mask full = f.universe.full_mask();
    for (const RootedCircuit& rc : oracle_rooted_circuits(f)) {
        Mask hull = full;
        for (Mask m : f.members)
            if (subset_of(rc.stem, m)) hull &= m;
        const Mask peeled = hull & ~bit(rc.root);
        if (f.contains(peeled)) continue;
        bool critical = true;
        for (Mask rest = rc.stem & ~bit(rc.root); rest && critical; rest &= rest - 1)
            if (!f.contains(peeled & ~(rest & -rest))) critical = false;
        if (critical) out.push_back(rc);
    }
    return out;
}

std::vector<Mask> oracle_positive_circuits(const Universe& u, const SetFamily& ideal_family) {
    const int n = u.size();
    if (n > 16) throw std::invalid_argument("oracle_positive_circuits: out of brute-force reach");
    std::vector<Mask> out;
    const Mask full = u.full_mask();
    for (Mask p = 1; p <= full && p != 0; ++p) {
        std::set<Mask> traced;
        for (Mask m : ideal_family.members) traced.insert(m & p);
        std::set<Mask> expected;
        for (Mask s = p;; s = (s - 1) & p) {
            if (s != p) expected.insert(s);
            if (s == 0) break;
        }
        if (traced == expected) out.push_back(p);
        if (p == full) break;
    }
    return out;
}

int oracle_cdim(const SetFamily& f) {
    const Mask full = f.universe.full_mask();
    // meet-irreducible: differs from the intersection of its proper supersets
    std::vector<Mask> irr;
    for (Mask m : f.members) {
        if (m == full) continue;
        Mask inter = full;
        for (Mask y : f.members)
            if (y != m && subset_of(m, y)) inter &= y;
        if (inter != m) irr.push_back(m);
    }
    if (irr.size() > 24) throw std::invalid_argument("oracle_cdim: too many copoints");

    // exhaustive maximum antichain
    int best = 0;
    std::vector<Mask> stack;
    auto dfs = [&](auto&& self, std::size_t idx) -> void {
        best = std::max(best, static_cast<int>(stack.size()));
        if (idx == irr.size()) return;
        if (static_cast<int>(stack.size() + (irr.size() - idx)) <= best) return;
        // take irr[idx] if it stays an antichain
        bool ok = true;
        for (Mask m : stack)
            if (subset_of(m, irr[idx]) || subset_of(irr[idx], m)) {
                ok = false;
                break;
            }
        if (ok) {
            stack.push_back(irr[idx]);
            self(self, idx + 1);
            stack.pop_back();
        }
        self(self, idx + 1);
    };
    dfs(dfs, 0);
    return best;
}

}  // namespace og
