#include "orthantgeo/realization.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace og {

bool HalfspaceSystem::homogeneous() const {
    for (const auto& r : arrangement)
        if (!r.rhs.is_zero()) return false;
    for (const auto& r : cone)
        if (!r.row.rhs.is_zero()) return false;
    return true;
}

HalfspaceSystem realize_cone(const ConvexGeometry& g, CircuitChoice choice,
                             std::span<const Mask> positive, long coefficient_override) {
    const int n = g.n();
    const Universe& u = g.universe();
    const Rational coef(coefficient_override > 0 ? coefficient_override : static_cast<long>(n));

    HalfspaceSystem sys;
    sys.dimension = n;
    sys.universe = u;
    sys.kind = SystemKind::CircuitCone;
    for (int e = 0; e < n; ++e) {
        RatVec a(n, Rational(0));
        a[e] = Rational(1);
        sys.arrangement.push_back({u.label(e), std::move(a), Rational(0)});
    }

    const auto circuits =
        choice == CircuitChoice::All ? rooted_circuits(g) : critical_rooted_circuits(g);
    for (const RootedCircuit& rc : circuits) {
        RatVec a(n, Rational(0));
        a[rc.root] = coef;
        for (Mask rest = rc.stem & ~bit(rc.root); rest; rest &= rest - 1)
            a[lowest_bit(rest)] = Rational(-1);
        ConeSource src;
        src.kind = choice == CircuitChoice::All ? "circuit" : "critical_circuit";
        src.stem = u.mask_labels(rc.stem);
        src.root = u.label(rc.root);
        sys.cone.push_back({{std::move(a), Rational(0), Rel::Greater}, std::move(src)});
    }
    for (Mask p : positive) {
        RatVec a(n, Rational(0));
        for (Mask rest = p; rest; rest &= rest - 1) a[lowest_bit(rest)] = Rational(1);
        ConeSource src;
        src.kind = "positive_circuit";
        src.members = u.mask_labels(p);
        sys.cone.push_back({{std::move(a), Rational(0), Rel::Less}, std::move(src)});
    }
    return sys;
}

RatVec witness_point(const ConvexGeometry& g, const HalfspaceSystem& sys, Mask x) {
    if (sys.kind != SystemKind::CircuitCone)
        throw std::invalid_argument("witness_point: needs a circuit-cone system");
    const int n = g.n();
    if (!g.family().contains(x)) throw std::invalid_argument("witness_point: set not convex");
    for (const auto& cr : sys.cone) {
        if (cr.source.kind != "positive_circuit") continue;
        if (subset_of(sys.universe.mask_of(cr.source.members), x))
            throw std::invalid_argument("witness_point: set contains a positive circuit");
    }

    // support masks of cone rows, normalized to the a.x > 0 orientation
    struct Row {
        RatVec a;
        Mask support = 0;
    };
    std::vector<Row> rows;
    for (const auto& cr : sys.cone) {
        Row r;
        r.a.reserve(n);
        for (const auto& c : cr.row.coeffs) r.a.push_back(cr.row.rel == Rel::Greater ? c : -c);
        for (int e = 0; e < n; ++e)
            if (!r.a[e].is_zero()) r.support |= bit(e);
        rows.push_back(std::move(r));
    }

    RatVec val(n, Rational(0));
    for (Mask rest = x; rest; rest &= rest - 1) val[lowest_bit(rest)] = Rational(1);

    Mask cur = x;
    const Mask full = g.universe().full_mask();
    while (cur != full) {
        int e = -1;
        for (int cand = 0; cand < n; ++cand) {
            if (has_bit(cur, cand)) continue;
            if (g.family().contains(cur | bit(cand))) {
                e = cand;
                break;
            }
        }
        if (e < 0) throw std::logic_error("witness_point: extension stuck");
        const Mask next = cur | bit(e);

        // every row whose support closes now gives an upper bound on x_e
        std::optional<Rational> ub;
        for (const Row& r : rows) {
            if (!has_bit(r.support, e) || !subset_of(r.support, next)) continue;
            if (r.a[e].sign() >= 0)
                throw std::logic_error("witness_point: closing coordinate is not bounded above");
            Rational rest_sum(0);
            for (int gidx = 0; gidx < n; ++gidx)
                if (gidx != e && !r.a[gidx].is_zero()) rest_sum += r.a[gidx] * val[gidx];
            const Rational bound = -rest_sum / r.a[e];  // x_e < bound
            if (!ub || bound < *ub) ub = bound;
        }
        Rational v(-1);
        if (ub && *ub - Rational(1) < v) v = *ub - Rational(1);
        val[e] = v;
        cur = next;
    }

    // certify by substitution: orthant signs and every cone row
    for (int e = 0; e < n; ++e) {
        const bool pos = has_bit(x, e);
        if ((pos && !(val[e] > Rational(0))) || (!pos && !(val[e] < Rational(0))))
            throw std::logic_error("witness_point: orthant sign violated");
    }
    for (const auto& cr : sys.cone) {
        const Rational v = dot(cr.row.coeffs, val);
        if (cr.row.rel == Rel::Greater ? !(v > cr.row.rhs) : !(v < cr.row.rhs))
            throw std::logic_error("witness_point: cone row violated");
    }
    return val;
}

namespace {

std::vector<Rational> threshold_sequence(int d, int n) {
    std::vector<Rational> a(n + 1, Rational(0));
    for (int j = 0; j < n; ++j)
        a[j + 1] = Rational(static_cast<long>(d)) * a[j] + Rational(static_cast<long>(d + 1));
    return a;
}

}  // namespace

HalfspaceSystem realize_lowdim(const ConvexGeometry& g) {
    const int n = g.n();
    const Universe& u = g.universe();
    const auto orders = generating_orders(g);
    const int d = static_cast<int>(orders.size());
    if (d != convex_dimension(g)) throw std::logic_error("realize_lowdim: order count != cdim");

    const auto a = threshold_sequence(d, n);

    // rank of e in order i, counted from 1
    std::vector<std::vector<int>> rank(d, std::vector<int>(n, 0));
    for (int i = 0; i < d; ++i)
        for (int p = 0; p < n; ++p) rank[i][orders[i].order[p]] = p + 1;

    HalfspaceSystem sys;
    sys.dimension = d;
    sys.universe = u;
    sys.kind = SystemKind::LowDim;
    sys.orders = orders;
    for (int e = 0; e < n; ++e) {
        // member side is sum_i x_i / b_i(e) < 1; oriented so the positive
        // side is the member side
        RatVec coeffs(d);
        for (int i = 0; i < d; ++i) coeffs[i] = Rational(-1) / a[rank[i][e]];
        sys.arrangement.push_back({u.label(e), std::move(coeffs), Rational(-1)});
    }
    for (int i = 0; i < d; ++i) {
        RatVec coeffs(d, Rational(0));
        coeffs[i] = Rational(1);
        ConeSource src;
        src.kind = "positivity";
        src.note = "x" + std::to_string(i + 1);
        sys.cone.push_back({{std::move(coeffs), Rational(0), Rel::Greater}, std::move(src)});
    }
    return sys;
}

RatVec witness_lowdim(const ConvexGeometry& g, const HalfspaceSystem& sys, Mask c) {
    if (sys.kind != SystemKind::LowDim)
        throw std::invalid_argument("witness_lowdim: needs a low-dimension system");
    if (!g.family().contains(c)) throw std::invalid_argument("witness_lowdim: set not convex");
    const int n = g.n();
    const int d = sys.dimension;
    const auto a = threshold_sequence(d, n);

    RatVec y(d);
    if (c == 0) {
        for (int i = 0; i < d; ++i) y[i] = a[n] + Rational(1);
    } else {
        for (int i = 0; i < d; ++i) {
            // predecessor threshold of the order-minimum of c
            Rational below(0);
            for (int p = 0; p < n; ++p) {
                const int e = sys.orders[i].order[p];
                if (has_bit(c, e)) break;
                below = a[p + 1];
            }
            y[i] = Rational(1) + below;
        }
    }

    // certify against every hyperplane and the positivity rows
    for (int e = 0; e < n; ++e) {
        const Rational v = dot(sys.arrangement[e].coeffs, y);
        const bool member = has_bit(c, e);
        if (member ? !(v > sys.arrangement[e].rhs) : !(v < sys.arrangement[e].rhs))
            throw std::logic_error("witness_lowdim: hyperplane side violated");
    }
    for (int i = 0; i < d; ++i)
        if (!(y[i] > Rational(0))) throw std::logic_error("witness_lowdim: positivity violated");
    return y;
}

// ---------------------------------------------------------------------------
// Tree realization: chords and tangents of the parabola y = x^2.
//
// Every non-root vertex v owns a window [s,t] strictly inside its parent's
// window; its line is the chord through (s,s^2), (t,t^2), oriented with the
// positive side below the chord.  Inside the cone (above all tangents at
// window endpoints, inside the strip, below the ceiling) a point lies below a
// chord only inside that chord's window, so the sign patterns are exactly the
// root paths of the tree.
// ---------------------------------------------------------------------------

TreeRealization realize_tree(const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::string& root) {
    std::map<std::string, std::vector<std::string>> adj;
    std::set<std::string> vertex_set{root};
    for (const auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("realize_tree: self loop");
        adj[a].push_back(b);
        adj[b].push_back(a);
        vertex_set.insert(a);
        vertex_set.insert(b);
    }
    if (!edges.empty() && !adj.count(root))
        throw std::invalid_argument("realize_tree: unknown root");
    if (vertex_set.size() != edges.size() + 1)
        throw std::invalid_argument("realize_tree: not a tree (cycle)");

    // BFS from the root; children sorted by name for determinism
    std::vector<std::string> order{root};
    std::map<std::string, std::string> parent;
    std::map<std::string, std::vector<std::string>> children;
    std::set<std::string> seen{root};
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::string v = order[head];
        auto nbrs = adj[v];
        std::sort(nbrs.begin(), nbrs.end());
        for (const auto& w : nbrs) {
            if (seen.count(w)) continue;
            seen.insert(w);
            parent[w] = v;
            children[v].push_back(w);
            order.push_back(w);
        }
    }
    if (seen.size() != vertex_set.size())
        throw std::invalid_argument("realize_tree: not a tree (disconnected)");

    // windows
    struct Window {
        Rational s, t;
    };
    std::map<std::string, Window> window;
    window[root] = {Rational(0), Rational(1)};
    for (const auto& v : order) {
        const auto& kids = children[v];
        if (kids.empty()) continue;
        const auto& w = window[v];
        const Rational h = (w.t - w.s) / Rational(static_cast<long>(2 * kids.size() + 1));
        for (std::size_t j = 0; j < kids.size(); ++j) {
            const Rational s = w.s + Rational(static_cast<long>(2 * j + 1)) * h;
            window[kids[j]] = {s, s + h};
        }
    }

    std::vector<std::string> labels(order.begin() + 1, order.end());
    const Universe u(labels);

    HalfspaceSystem sys;
    sys.dimension = 2;
    sys.universe = u;
    sys.kind = SystemKind::Tree;
    for (const auto& name : labels) {
        const auto& w = window.at(name);
        // below-chord side is positive: (s+t) x - y > s t
        sys.arrangement.push_back({name, {w.s + w.t, Rational(-1)}, w.s * w.t});
    }

    auto cone_row = [&sys](RatVec a, Rational rhs, Rel rel, const std::string& kind,
                           const std::string& note) {
        ConeSource src;
        src.kind = kind;
        src.note = note;
        sys.cone.push_back({{std::move(a), std::move(rhs), rel}, std::move(src)});
    };
    cone_row({Rational(1), Rational(0)}, Rational(0), Rel::Greater, "bound", "x > 0");
    cone_row({Rational(1), Rational(0)}, Rational(1), Rel::Less, "bound", "x < 1");
    cone_row({Rational(0), Rational(1)}, Rational(10), Rel::Less, "bound", "ceiling");
    std::set<Rational> tangent_points;
    for (const auto& name : labels) {
        tangent_points.insert(window.at(name).s);
        tangent_points.insert(window.at(name).t);
    }
    for (const Rational& p : tangent_points)
        cone_row({Rational(-2) * p, Rational(1)}, -(p * p), Rel::Greater, "tangent",
                 "touch at " + p.str());
    sys.clip_box = Box2{Rational(-1), Rational(2), Rational(-2), Rational(11)};

    // path sets, sign vectors, and an interior witness per region
    TreeRealization out;
    out.system = std::move(sys);
    out.vertices = order;
    const Mask full = u.full_mask();
    std::map<std::string, Mask> path;
    path[root] = 0;
    std::vector<Mask> members;
    for (const auto& v : order) {
        if (v != root) path[v] = path[parent[v]] | bit(*u.index_of(v));
        members.push_back(path[v]);
        out.signs.push_back({path[v], full & ~path[v]});

        Rational gx;
        const auto& kids = children[v];
        const auto& w = window.at(v);
        if (kids.empty()) {
            gx = (w.s + w.t) / Rational(2);
        } else {
            // midpoint of the first gap left of the first child window
            gx = (w.s + window.at(kids.front()).s) / Rational(2);
        }
        Rational gy;
        if (v == root) {
            gy = gx * gx + Rational(1);
        } else {
            const Rational chord = (w.s + w.t) * gx - w.s * w.t;
            gy = (gx * gx + chord) / Rational(2);
        }
        out.region_witnesses.push_back({gx, gy});
    }
    out.family = SetFamily::make(u, std::move(members));
    return out;
}

PointRepresentation export_point_representation(const ConvexGeometry& g,
                                                const HalfspaceSystem& sys) {
    if (sys.kind != SystemKind::CircuitCone)
        throw std::invalid_argument("export_point_representation: needs a circuit-cone system");
    for (const auto& cr : sys.cone)
        if (cr.source.kind == "positive_circuit")
            throw std::invalid_argument("export_point_representation: positive circuits present");
    const int n = g.n();

    PointRepresentation rep;
    rep.dimension = n;
    for (int e = 0; e < n; ++e) {
        RatVec pt(n, Rational(0));
        pt[e] = Rational(1);
        rep.p.push_back({g.universe().label(e), std::move(pt)});
    }
    for (const auto& cr : sys.cone) {
        RatVec a;
        a.reserve(n);
        for (const auto& c : cr.row.coeffs) a.push_back(cr.row.rel == Rel::Greater ? c : -c);
        Rational s(0);
        for (const auto& c : a) s += c;
        if (!(s > Rational(0)))
            throw std::invalid_argument(
                "export_point_representation: cone normal not positive against all-ones");
        RatVec q(n);
        for (int e = 0; e < n; ++e) q[e] = a[e] / s;
        rep.q.push_back(std::move(q));
    }
    return rep;
}

bool verify_shelling(const PointRepresentation& rep, const ConvexGeometry& g) {
    const int n = g.n();
    if (static_cast<int>(rep.p.size()) != n)
        throw std::invalid_argument("verify_shelling: ground size mismatch");
    const Mask full = g.universe().full_mask();
    for (Mask x = 0;; ++x) {
        std::vector<RatVec> hull_pts = rep.q;
        for (int e = 0; e < n; ++e)
            if (has_bit(x, e)) hull_pts.push_back(rep.p[e].second);
        bool clean = true;
        for (int e = 0; e < n && clean; ++e)
            if (!has_bit(x, e) && in_convex_hull(rep.p[e].second, hull_pts)) clean = false;
        if (clean != g.family().contains(x)) return false;
        if (x == full) break;
    }
    return true;
}

}  // namespace og
