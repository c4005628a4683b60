#include "orthantgeo/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace og {

bool check_ideal(const ConvexGeometry& host, const SetFamily& sub) {
    if (host.universe() != sub.universe) return false;
    for (Mask m : sub.members)
        if (!host.family().contains(m)) return false;
    for (Mask x : host.family().members)
        for (Mask y : sub.members)
            if (subset_of(x, y) && !sub.contains(x)) return false;
    return true;
}

BouquetReport check_bouquet_axioms(const SetFamily& f) {
    BouquetReport rep;
    rep.c1p = f.contains(0);

    rep.c2 = true;
    for (std::size_t i = 0; i < f.members.size() && rep.c2; ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (!f.contains(f.members[i] & f.members[j])) {
                rep.c2 = false;
                break;
            }

    rep.c3p = true;
    for (Mask x : f.members) {
        for (Mask y : f.members) {
            if (y == x || !subset_of(y, x)) continue;
            bool extendable = false;
            for (Mask rest = x & ~y; rest && !extendable; rest &= rest - 1)
                if (f.contains(y | (rest & -rest))) extendable = true;
            if (!extendable) {
                rep.c3p = false;
                return rep;
            }
        }
    }
    return rep;
}

bool check_bouquet(const SetFamily& f) { return check_bouquet_axioms(f).ok(); }

Bouquet Bouquet::from_family(SetFamily f) {
    const BouquetReport rep = check_bouquet_axioms(f);
    if (!rep.ok()) {
        std::string what = "not a bouquet of convex geometries:";
        if (!rep.c1p) what += " (C1')";
        if (!rep.c2) what += " (C2)";
        if (!rep.c3p) what += " (C3')";
        throw std::invalid_argument(what);
    }
    return Bouquet(std::move(f));
}

std::vector<Mask> positive_circuits(const Universe& u, const SetFamily& ideal_family) {
    const int n = u.size();
    if (n > 20) throw std::invalid_argument("positive_circuits: universe too large");
    std::vector<Mask> out;
    const Mask full = u.full_mask();
    for (Mask p = 1; p != 0 && p <= full; ++p) {
        const int k = popcount(p);
        const std::size_t need = std::size_t{1} << k;
        if (ideal_family.size() + 1 < need) continue;
        std::vector<Mask> vals;
        vals.reserve(ideal_family.size());
        for (Mask m : ideal_family.members) vals.push_back(compress_mask(m & p, p));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        // trace must be every subset of p except p itself
        if (vals.size() == need - 1 && vals.back() != need - 1) out.push_back(p);
        if (p == full) break;
    }
    return out;
}

std::vector<Mask> positive_circuits(const IdealOfGeometry& ideal) {
    return positive_circuits(ideal.host.universe(), ideal.family);
}

SetFamily ideal_from_positive_circuits(const ConvexGeometry& host, std::span<const Mask> ps) {
    std::vector<Mask> members;
    for (Mask x : host.family().members) {
        bool clean = true;
        for (Mask p : ps)
            if (subset_of(p, x)) {
                clean = false;
                break;
            }
        if (clean) members.push_back(x);
    }
    return SetFamily::make(host.universe(), std::move(members));
}

bool check_c6(const SetFamily& f) {
    const int n = f.n();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool split = false;
            for (Mask m : f.members)
                if (has_bit(m, x) != has_bit(m, y)) {
                    split = true;
                    break;
                }
            if (!split) return false;
        }
    return true;
}

namespace {

// bounded[i][j]: some member contains members[i] | members[j]
std::vector<std::vector<bool>> pairwise_bounded(const SetFamily& f) {
    const std::size_t k = f.members.size();
    std::vector<std::vector<bool>> bounded(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const Mask uni = f.members[i] | f.members[j];
            for (Mask m : f.members)
                if (subset_of(uni, m)) {
                    bounded[i][j] = bounded[j][i] = true;
                    break;
                }
        }
    return bounded;
}

}  // namespace

bool check_c7(const SetFamily& f) {
    const auto bounded = pairwise_bounded(f);
    const std::size_t k = f.members.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            if (!bounded[i][j]) continue;
            for (std::size_t l = j; l < k; ++l) {
                if (!bounded[i][l] || !bounded[j][l]) continue;
                if (!f.contains(f.members[i] | f.members[j] | f.members[l])) return false;
            }
        }
    return true;
}

bool check_locally_union_closed(const SetFamily& f) {
    const std::size_t k = f.members.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const Mask uni = f.members[i] | f.members[j];
            bool bounded = false;
            for (Mask m : f.members)
                if (subset_of(uni, m)) {
                    bounded = true;
                    break;
                }
            if (bounded && !f.contains(uni)) return false;
        }
    return true;
}

bool check_median(const SetFamily& f) { return check_c6(f) && check_c7(f); }

namespace {

std::vector<Mask> maximal_members(const std::vector<Mask>& members) {
    std::vector<Mask> out;
    for (Mask x : members) {
        bool maximal = true;
        for (Mask y : members)
            if (y != x && subset_of(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    return out;
}

}  // namespace

EmbedResult embed_bouquet(const SetFamily& bouquet) {
    const BouquetReport rep = check_bouquet_axioms(bouquet);
    if (!rep.ok()) throw std::invalid_argument("embed_bouquet: bouquet axioms violated");
    if (!check_locally_union_closed(bouquet))
        throw std::invalid_argument("embed_bouquet: (C8) violated");

    std::set<Mask> fam(bouquet.members.begin(), bouquet.members.end());
    std::vector<MergeStep> steps;

    while (true) {
        std::vector<Mask> current(fam.begin(), fam.end());
        const std::vector<Mask> maxima = maximal_members(current);
        if (maxima.size() <= 1) break;

        // candidate meets: intersections of at least two maximal members,
        // inclusion-maximal among those; ties by popcount then value
        std::set<Mask> meets;
        for (std::size_t i = 0; i < maxima.size(); ++i)
            for (std::size_t j = i + 1; j < maxima.size(); ++j)
                meets.insert(maxima[i] & maxima[j]);
        Mask chosen = 0;
        bool have = false;
        for (Mask m : meets) {
            bool dominated = false;
            for (Mask other : meets)
                if (other != m && subset_of(m, other)) {
                    dominated = true;
                    break;
                }
            if (dominated) continue;
            if (!have || popcount(m) > popcount(chosen) ||
                (popcount(m) == popcount(chosen) && m < chosen)) {
                chosen = m;
                have = true;
            }
        }
        if (!have) throw std::logic_error("embed_bouquet: no meet candidate");

        MergeStep step;
        step.meet = chosen;
        Mask merged_top = 0;
        for (Mask x : maxima)
            if (subset_of(chosen, x)) {
                step.merged_maxima.push_back(x);
                merged_top |= x;
            }
        if (step.merged_maxima.size() < 2)
            throw std::logic_error("embed_bouquet: chosen meet below a single maximal set");

        // close the members below the merged top under unions; any such union
        // lying below an old member is already a member by (C8)
        std::set<Mask> closure;
        std::vector<Mask> queue;
        for (Mask y : current)
            if (subset_of(y, merged_top)) {
                closure.insert(y);
                queue.push_back(y);
            }
        while (!queue.empty()) {
            const Mask a = queue.back();
            queue.pop_back();
            std::vector<Mask> fresh;
            for (Mask b : closure) {
                const Mask u = a | b;
                if (!closure.count(u)) fresh.push_back(u);
            }
            for (Mask u : fresh)
                if (closure.insert(u).second) queue.push_back(u);
        }
        for (Mask m : closure)
            if (fam.insert(m).second) ++step.added;
        steps.push_back(std::move(step));
    }

    // the final family is a geometry on the sub-universe it spans
    Mask span = 0;
    for (Mask m : fam) span |= m;
    const Universe sub = sub_universe(bouquet.universe, span);
    std::vector<Mask> members;
    members.reserve(fam.size());
    for (Mask m : fam) members.push_back(compress_mask(m, span));
    SetFamily alignment_family = SetFamily::make(sub, std::move(members));
    for (auto& step : steps) {
        step.meet = compress_mask(step.meet, span);
        for (Mask& m : step.merged_maxima) m = compress_mask(m, span);
    }

    std::vector<Mask> embedded;
    for (Mask m : bouquet.members) embedded.push_back(compress_mask(m, span));

    EmbedResult out{ConvexGeometry::from_family(std::move(alignment_family)),
                    SetFamily::make(sub, std::move(embedded)), std::move(steps)};
    if (!is_downset_alignment(out.alignment))
        throw std::logic_error("embed_bouquet: result is not union-closed");
    if (!check_ideal(out.alignment, out.embedded))
        throw std::logic_error("embed_bouquet: input is not an ideal of the result");
    return out;
}

EmbedResult embed_bouquet(const Bouquet& bouquet) { return embed_bouquet(bouquet.family()); }

}  // namespace og
