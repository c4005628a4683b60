#include "orthantgeo/convex_geometry.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orthantgeo/parallel.hpp"

namespace og {

namespace {
constexpr int kEnumCap = 22;
}

AxiomReport ConvexGeometry::check_axioms(const SetFamily& f) {
    AxiomReport rep;
    const Mask full = f.universe.full_mask();

    rep.c1 = f.contains(0) && f.contains(full);
    if (!rep.c1) rep.c1_missing = f.contains(0) ? full : Mask{0};

    rep.c2 = true;
    for (std::size_t i = 0; i < f.members.size() && rep.c2; ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j) {
            if (!f.contains(f.members[i] & f.members[j])) {
                rep.c2 = false;
                rep.c2_pair = {f.members[i], f.members[j]};
                break;
            }
        }

    rep.c3 = true;
    for (Mask x : f.members) {
        if (x == full) continue;
        bool extendable = false;
        for (int e = 0; e < f.n() && !extendable; ++e)
            if (!has_bit(x, e) && f.contains(x | bit(e))) extendable = true;
        if (!extendable) {
            rep.c3 = false;
            rep.c3_stuck = x;
            break;
        }
    }
    return rep;
}

ConvexGeometry ConvexGeometry::from_family(SetFamily f) {
    const AxiomReport rep = check_axioms(f);
    if (!rep.ok()) {
        std::string what = "not a convex geometry:";
        if (!rep.c1) what += " (C1)";
        if (!rep.c2) what += " (C2)";
        if (!rep.c3) what += " (C3)";
        throw std::invalid_argument(what);
    }
    return ConvexGeometry(std::move(f));
}

Mask family_closure(const SetFamily& f, Mask a) {
    Mask out = f.universe.full_mask();
    for (Mask m : f.members)
        if (subset_of(a, m)) out &= m;
    return out;
}

Mask closure(const ConvexGeometry& g, Mask a) { return family_closure(g.family(), a); }

Mask extreme_points(const ConvexGeometry& g, Mask x) {
    if (!g.family().contains(x)) throw std::invalid_argument("extreme_points: set not convex");
    Mask out = 0;
    for (Mask rest = x; rest; rest &= rest - 1) {
        const Mask b = rest & -rest;
        if (g.family().contains(x & ~b)) out |= b;
    }
    return out;
}

namespace {

void require_c1_c2(const SetFamily& f, const char* who) {
    const Mask full = f.universe.full_mask();
    if (!f.contains(0) || !f.contains(full))
        throw std::invalid_argument(std::string(who) + ": (C1) violated");
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (!f.contains(f.members[i] & f.members[j]))
                throw std::invalid_argument(std::string(who) + ": (C2) violated");
}

}  // namespace

bool check_c4(const SetFamily& f) {
    require_c1_c2(f, "check_c4");
    for (Mask x : f.members) {
        Mask ext = 0;
        for (Mask rest = x; rest; rest &= rest - 1) {
            const Mask b = rest & -rest;
            if (f.contains(x & ~b)) ext |= b;
        }
        if (family_closure(f, ext) != x) return false;
    }
    return true;
}

bool check_anti_exchange(const SetFamily& f) {
    require_c1_c2(f, "check_anti_exchange");
    const int n = f.n();
    for (Mask x : f.members) {
        for (int p = 0; p < n; ++p) {
            if (has_bit(x, p)) continue;
            const Mask clp = family_closure(f, x | bit(p));
            for (int q = 0; q < n; ++q) {
                if (q == p || has_bit(x, q)) continue;
                if (!has_bit(clp, q)) continue;
                if (has_bit(family_closure(f, x | bit(q)), p)) return false;
            }
        }
    }
    return true;
}

std::vector<RootedCircuit> rooted_circuits(const ConvexGeometry& g) {
    const SetFamily& f = g.family();
    const int n = g.n();
    if (n > kEnumCap) throw std::invalid_argument("rooted_circuits: universe too large");
    const long long total = 1LL << n;

    std::vector<std::vector<RootedCircuit>> per_thread(worker_count());
    std::atomic<bool> failed{false};

#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count())
    for (long long stem = 1; stem < total; ++stem) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            const Mask c = static_cast<Mask>(stem);
            const int k = popcount(c);
            const std::size_t need = std::size_t{1} << k;
            if (f.size() + 1 < need) continue;  // trace cannot reach 2^k - 1 sets

            std::vector<Mask> vals;
            vals.reserve(f.size());
            for (Mask m : f.members) vals.push_back(compress_mask(m & c, c));
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            if (vals.size() != need - 1) continue;

            // locate the single missing subset of the trace
            Mask missing = need - 1;
            for (std::size_t i = 0; i < vals.size(); ++i)
                if (vals[i] != i) {
                    missing = static_cast<Mask>(i);
                    break;
                }
            if (popcount(missing) != k - 1) continue;  // must be stem minus one element

            const Mask root_bit = c & ~spread_mask(missing, c);
            int tid = 0;
#ifdef _OPENMP
            tid = omp_get_thread_num();
#endif
            per_thread.at(tid).push_back({c, lowest_bit(root_bit)});
        } catch (...) {
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (failed.load()) throw std::runtime_error("rooted_circuits: internal failure");

    std::vector<RootedCircuit> out;
    for (auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootedCircuit> critical_rooted_circuits(const ConvexGeometry& g) {
    std::vector<RootedCircuit> out;
    for (const RootedCircuit& rc : rooted_circuits(g)) {
        const Mask hull = closure(g, rc.stem);
        if (g.family().contains(hull & ~bit(rc.root))) continue;
        bool ok = true;
        for (Mask rest = rc.stem & ~bit(rc.root); rest && ok; rest &= rest - 1) {
            const Mask b = rest & -rest;
            if (!g.family().contains(hull & ~bit(rc.root) & ~b)) ok = false;
        }
        if (ok) out.push_back(rc);
    }
    return out;
}

SetFamily reconstruct_from_rooted_sets(const Universe& u, std::span<const RootedCircuit> rooted) {
    const int n = u.size();
    if (n > kEnumCap)
        throw std::invalid_argument("reconstruct_from_rooted_sets: universe too large");
    std::vector<Mask> members;
    const Mask full = u.full_mask();
    for (Mask x = 0;; ++x) {
        bool ok = true;
        for (const auto& rs : rooted) {
            if ((x & rs.stem) == (rs.stem & ~bit(rs.root))) {
                ok = false;
                break;
            }
        }
        if (ok) members.push_back(x);
        if (x == full) break;
    }
    return SetFamily::make(u, std::move(members));
}

bool check_dietrich(std::span<const RootedCircuit> rooted) {
    for (std::size_t i = 0; i < rooted.size(); ++i) {
        for (std::size_t j = 0; j < rooted.size(); ++j) {
            if (i == j) continue;
            const auto& [c1, r1] = rooted[i];
            const auto& [c2, r2] = rooted[j];
            if (subset_of(c1, c2) && !(c1 == c2 && r1 == r2)) return false;
            if (has_bit(c2, r1) && r1 != r2) {
                const Mask allowed = (c1 | c2) & ~bit(r1);
                bool found = false;
                for (const auto& rs : rooted) {
                    if (rs.root == r2 && subset_of(rs.stem, allowed)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

std::vector<RootedCircuit> circuits_via_cubes(const ConvexGeometry& g) {
    const SetFamily comp = complement_family(g.family());
    std::vector<RootedCircuit> out;
    for (const SignVector& q : maximal_cubes(comp)) {
        if (popcount(q.minus) != 1)
            throw std::logic_error("circuits_via_cubes: maximal cube has several negative entries");
        out.push_back({q.plus | q.minus, lowest_bit(q.minus)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Mask, int>> copoints(const ConvexGeometry& g) {
    const SetFamily& f = g.family();
    const Mask full = f.universe.full_mask();
    std::vector<std::pair<Mask, int>> out;
    for (Mask x : f.members) {
        if (x == full) continue;
        // upper covers = minimal proper supersets within the family
        std::vector<Mask> supers;
        for (Mask y : f.members)
            if (y != x && subset_of(x, y)) supers.push_back(y);
        std::vector<Mask> covers;
        for (Mask y : supers) {
            bool minimal = true;
            for (Mask z : supers)
                if (z != y && subset_of(z, y)) {
                    minimal = false;
                    break;
                }
            if (minimal) covers.push_back(y);
        }
        if (covers.size() != 1) continue;
        const Mask added = covers[0] & ~x;
        if (popcount(added) != 1)
            throw std::logic_error("copoints: cover step adds more than one element");
        out.push_back({x, lowest_bit(added)});
    }
    return out;
}

namespace {

// Kuhn augmenting-path matching on the strict-containment relation of the
// copoint poset; min chain cover = |nodes| - matching.
struct Matching {
    const std::vector<Mask>& nodes;
    std::vector<int> match_l, match_r;

    explicit Matching(const std::vector<Mask>& nodes_)
        : nodes(nodes_), match_l(nodes_.size(), -1), match_r(nodes_.size(), -1) {}

    bool augment(int i, std::vector<bool>& used) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (used[j]) continue;
            if (nodes[i] == nodes[j] || !subset_of(nodes[i], nodes[j])) continue;
            used[j] = true;
            if (match_r[j] < 0 || augment(match_r[j], used)) {
                match_l[i] = static_cast<int>(j);
                match_r[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    }

    int run() {
        int size = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            std::vector<bool> used(nodes.size(), false);
            if (augment(static_cast<int>(i), used)) ++size;
        }
        return size;
    }
};

}  // namespace

int convex_dimension(const ConvexGeometry& g) {
    std::vector<Mask> nodes;
    for (const auto& [m, p] : copoints(g)) nodes.push_back(m);
    if (nodes.empty()) return 0;
    Matching matching(nodes);
    return static_cast<int>(nodes.size()) - matching.run();
}

std::vector<TotalOrder> generating_orders(const ConvexGeometry& g) {
    const SetFamily& f = g.family();
    const int n = g.n();
    std::vector<Mask> nodes;
    for (const auto& [m, p] : copoints(g)) nodes.push_back(m);
    if (nodes.empty()) return {};

    Matching matching(nodes);
    matching.run();

    // Dilworth chain partition: heads are nodes never matched on the right;
    // follow match_l links upward.
    std::vector<std::vector<Mask>> chains;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (matching.match_r[i] >= 0) continue;
        std::vector<Mask> chain;
        int cur = static_cast<int>(i);
        while (cur >= 0) {
            chain.push_back(nodes[cur]);
            cur = matching.match_l[cur];
        }
        chains.push_back(std::move(chain));
    }

    const Mask full = f.universe.full_mask();
    std::vector<TotalOrder> orders;
    for (const auto& chain : chains) {
        // extend to a maximal chain of the lattice, one element per step,
        // lowest admissible index first
        std::vector<int> added;
        Mask cur = 0;
        auto grow_toward = [&](Mask target) {
            while (cur != target) {
                int pick = -1;
                for (int e = 0; e < n; ++e) {
                    if (!has_bit(target, e) || has_bit(cur, e)) continue;
                    if (f.contains(cur | bit(e))) {
                        pick = e;
                        break;
                    }
                }
                if (pick < 0) throw std::logic_error("generating_orders: chain extension stuck");
                cur |= bit(pick);
                added.push_back(pick);
            }
        };
        for (Mask target : chain) grow_toward(target);
        grow_toward(full);

        // element added at step k sits at position n+1-k, so the ending
        // intervals of the order are exactly the chain's sets
        TotalOrder order;
        order.order.assign(added.rbegin(), added.rend());
        orders.push_back(std::move(order));
    }

    if (generate_from_orders(f.universe, orders) != f)
        throw std::logic_error("generating_orders: round trip failed");
    return orders;
}

SetFamily generate_from_orders(const Universe& u, std::span<const TotalOrder> orders) {
    if (orders.empty()) throw std::invalid_argument("generate_from_orders: no orders");
    const int n = u.size();
    for (const auto& o : orders) {
        if (static_cast<int>(o.order.size()) != n)
            throw std::invalid_argument("generate_from_orders: order size mismatch");
        Mask seen = 0;
        for (int e : o.order) {
            if (e < 0 || e >= n || has_bit(seen, e))
                throw std::invalid_argument("generate_from_orders: not a permutation");
            seen |= bit(e);
        }
    }
    if (n == 0) return SetFamily::make(u, {0});

    std::vector<std::vector<Mask>> suffix(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        suffix[i].assign(n, 0);
        Mask acc = 0;
        for (int p = n - 1; p >= 0; --p) {
            acc |= bit(orders[i].order[p]);
            suffix[i][p] = acc;
        }
    }

    // odometer over one ending interval per order
    std::vector<Mask> members{0};
    const std::size_t d = orders.size();
    std::vector<int> pos(d, 0);
    while (true) {
        Mask inter = u.full_mask();
        for (std::size_t i = 0; i < d; ++i) inter &= suffix[i][pos[i]];
        members.push_back(inter);
        std::size_t i = 0;
        while (i < d && ++pos[i] == n) {
            pos[i] = 0;
            ++i;
        }
        if (i == d) break;
    }
    return SetFamily::make(u, std::move(members));
}

bool is_downset_alignment(const ConvexGeometry& g) {
    const SetFamily& f = g.family();
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (!f.contains(f.members[i] | f.members[j])) return false;
    return true;
}

}  // namespace og
