#include "orthantgeo/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>

#include "orthantgeo/parallel.hpp"

namespace og {

namespace {

constexpr int kExhaustiveCap = 22;

struct NormalizedRow {
    RatVec a;
    Rational b;
    Mask support = 0;
};

struct Prepared {
    const HalfspaceSystem* sys = nullptr;
    std::vector<NormalizedRow> cone;  // a.x > b orientation
    bool coordinate_orthants = false; // arrangement is exactly the coordinate hyperplanes
    bool homogeneous = false;
};

Prepared prepare(const HalfspaceSystem& sys) {
    Prepared p;
    p.sys = &sys;
    for (const auto& cr : sys.cone) {
        NormalizedRow r;
        r.a.reserve(sys.dimension);
        for (const auto& c : cr.row.coeffs) r.a.push_back(cr.row.rel == Rel::Greater ? c : -c);
        r.b = cr.row.rel == Rel::Greater ? cr.row.rhs : -cr.row.rhs;
        for (int i = 0; i < sys.dimension; ++i)
            if (!r.a[i].is_zero()) r.support |= bit(i);
        p.cone.push_back(std::move(r));
    }
    p.homogeneous = sys.homogeneous();
    if (sys.dimension == sys.universe.size()) {
        p.coordinate_orthants = true;
        for (int e = 0; e < sys.universe.size(); ++e) {
            const auto& row = sys.arrangement[e];
            bool unit = row.rhs.is_zero();
            for (int i = 0; unit && i < sys.dimension; ++i) {
                if (i == e ? row.coeffs[i] != Rational(1) : !row.coeffs[i].is_zero()) unit = false;
            }
            if (!unit) {
                p.coordinate_orthants = false;
                break;
            }
        }
    }
    return p;
}

// For coordinate cone systems a row with no positive term over the orthant
// cannot exceed a nonnegative threshold; this is the cheap emptiness
// certificate used before any LP runs.
bool certified_empty(const Prepared& p, Mask x) {
    if (!p.coordinate_orthants) return false;
    for (const auto& r : p.cone) {
        if (r.b.sign() < 0) continue;
        bool no_positive_term = true;
        for (int i = 0; i < p.sys->dimension && no_positive_term; ++i) {
            if (r.a[i].is_zero()) continue;
            const int sigma = has_bit(x, i) ? +1 : -1;
            if (r.a[i].sign() * sigma > 0) no_positive_term = false;
        }
        if (no_positive_term) return true;
    }
    return false;
}

std::optional<RatVec> decide_region(const Prepared& p, Mask x) {
    if (certified_empty(p, x)) return std::nullopt;
    const StrictSystem s = region_system(*p.sys, x);
    if (p.sys->dimension == 1) return strictly_feasible_1d(s);
    if (p.sys->dimension == 2 && p.sys->clip_box) return strictly_feasible_2d_boxed(s, *p.sys->clip_box);
    if (p.homogeneous) return homogeneous_strictly_feasible(s);
    return strictly_feasible(s);
}

std::optional<RatVec> decide_with_cache(const Prepared& p, Mask x, const WitnessCache* cache) {
    if (cache) {
        if (cache->infeasible.count(x)) return std::nullopt;
        auto it = cache->feasible.find(x);
        if (it != cache->feasible.end() &&
            satisfies_strictly(region_system(*p.sys, x), it->second))
            return it->second;
    }
    return decide_region(p, x);
}

VerificationReport build_report(const HalfspaceSystem& sys, const SetFamily& family,
                                const std::vector<std::optional<RatVec>>& results,
                                WitnessCache* cache) {
    const Mask full = sys.universe.full_mask();
    VerificationReport rep;
    rep.expected_regions = family.size();
    for (Mask x = 0; x < results.size(); ++x) {
        const bool found = results[x].has_value();
        const bool expected = family.contains(x);
        if (found) {
            ++rep.found_regions;
            rep.witnesses.push_back({SignVector{x, full & ~x}, *results[x]});
        }
        if (found != expected)
            rep.mismatches.push_back({SignVector{x, full & ~x}, expected, found});
        if (cache) {
            if (found)
                cache->feasible[x] = *results[x];
            else
                cache->infeasible.insert(x);
        }
    }
    rep.verdict = rep.mismatches.empty() && rep.found_regions == rep.expected_regions;
    return rep;
}

void check_compatible(const HalfspaceSystem& sys, const SetFamily& family) {
    if (sys.universe != family.universe)
        throw std::invalid_argument("verify: system and family universes differ");
    if (static_cast<int>(sys.arrangement.size()) != sys.universe.size())
        throw std::invalid_argument("verify: arrangement/universe size mismatch");
}

}  // namespace

StrictSystem region_system(const HalfspaceSystem& sys, Mask x) {
    StrictSystem s;
    s.dimension = sys.dimension;
    for (int e = 0; e < static_cast<int>(sys.arrangement.size()); ++e) {
        const auto& row = sys.arrangement[e];
        s.rows.push_back({row.coeffs, row.rhs, has_bit(x, e) ? Rel::Greater : Rel::Less});
    }
    for (const auto& cr : sys.cone) s.rows.push_back(cr.row);
    return s;
}

std::optional<RatVec> region_feasible(const HalfspaceSystem& sys, Mask x) {
    return decide_region(prepare(sys), x);
}

VerificationReport verify_exhaustive(const HalfspaceSystem& sys, const SetFamily& family,
                                     WitnessCache* cache) {
    check_compatible(sys, family);
    const int n = sys.universe.size();
    if (n > kExhaustiveCap)
        throw std::invalid_argument("verify_exhaustive: universe too large, use verify_bfs");
    const Prepared p = prepare(sys);
    const long long total = 1LL << n;

    std::vector<std::optional<RatVec>> results(total);
    std::atomic<bool> failed{false};

#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (long long x = 0; x < total; ++x) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            results[x] = decide_with_cache(p, static_cast<Mask>(x), cache);
        } catch (...) {
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (failed.load()) throw std::runtime_error("verify_exhaustive: region decision failed");

    return build_report(sys, family, results, cache);
}

VerificationReport verify_exhaustive_serial(const HalfspaceSystem& sys, const SetFamily& family,
                                            WitnessCache* cache) {
    check_compatible(sys, family);
    const int n = sys.universe.size();
    if (n > kExhaustiveCap)
        throw std::invalid_argument("verify_exhaustive: universe too large, use verify_bfs");
    const Prepared p = prepare(sys);
    const long long total = 1LL << n;
    std::vector<std::optional<RatVec>> results(total);
    for (long long x = 0; x < total; ++x)
        results[x] = decide_with_cache(p, static_cast<Mask>(x), cache);
    return build_report(sys, family, results, cache);
}

VerificationReport verify_bfs(const HalfspaceSystem& sys, const SetFamily& family,
                              SignVector seed) {
    check_compatible(sys, family);
    const int n = sys.universe.size();
    const Mask full = sys.universe.full_mask();
    if ((seed.plus | seed.minus) != full || (seed.plus & seed.minus) != 0)
        throw std::invalid_argument("verify_bfs: seed must have full support");
    const Prepared p = prepare(sys);

    const Mask seed_mask = seed.plus;
    auto seed_witness = decide_region(p, seed_mask);
    if (!seed_witness) throw std::invalid_argument("verify_bfs: seed region infeasible");

    std::map<Mask, RatVec> found{{seed_mask, *seed_witness}};
    std::set<Mask> probed{seed_mask};
    std::deque<Mask> queue{seed_mask};
    while (!queue.empty()) {
        const Mask cur = queue.front();
        queue.pop_front();
        for (int e = 0; e < n; ++e) {
            const Mask nb = cur ^ bit(e);
            if (!probed.insert(nb).second) continue;
            if (auto w = decide_region(p, nb)) {
                found.emplace(nb, std::move(*w));
                queue.push_back(nb);
            }
        }
    }

    VerificationReport rep;
    rep.expected_regions = family.size();
    rep.found_regions = found.size();
    std::set<Mask> signs;
    for (const auto& [m, w] : found) signs.insert(m);
    for (Mask m : family.members) signs.insert(m);
    for (Mask m : signs) {
        const bool was_found = found.count(m) > 0;
        const bool expected = family.contains(m);
        if (was_found) rep.witnesses.push_back({SignVector{m, full & ~m}, found.at(m)});
        if (was_found != expected)
            rep.mismatches.push_back({SignVector{m, full & ~m}, expected, was_found});
    }
    rep.verdict = rep.mismatches.empty() && rep.found_regions == rep.expected_regions;
    return rep;
}

VerificationReport verify_lowdim(const HalfspaceSystem& sys, const SetFamily& family) {
    if (sys.kind != SystemKind::LowDim)
        throw std::invalid_argument("verify_lowdim: system was not built by realize_lowdim");
    return verify_exhaustive(sys, family);
}

}  // namespace og
