#include <set>

#include "doctest.h"
#include "orthantgeo/core_sets.hpp"
#include "orthantgeo/rng.hpp"
#include "support/fixtures.hpp"

using namespace og;
using namespace og::testing;

namespace {

SetFamily random_family(int n, int count, Rng& rng) {
    const Universe u = universe_n(n);
    std::vector<Mask> members;
    for (int i = 0; i < count; ++i) members.push_back(rng.below(Mask{1} << n));
    return SetFamily::make(u, std::move(members));
}

// literal cube check: every support-union-subset combination is a member
bool brute_is_cube(const SetFamily& f, Mask free, Mask support) {
    for (Mask s = free;; s = (s - 1) & free) {
        if (!f.contains(support | s)) return false;
        if (s == 0) break;
    }
    return true;
}

std::set<std::pair<Mask, Mask>> brute_maximal_cubes(const SetFamily& f) {
    const Mask full = f.universe.full_mask();
    std::set<std::pair<Mask, Mask>> cubes;
    for (Mask free = 0;; ++free) {
        for (Mask sup = 0;; ++sup) {
            if ((sup & free) == 0 && brute_is_cube(f, free, sup)) cubes.insert({free, sup});
            if (sup == full) break;
        }
        if (free == full) break;
    }
    std::set<std::pair<Mask, Mask>> maximal;
    for (const auto& [free, sup] : cubes) {
        bool dominated = false;
        for (const auto& [f2, s2] : cubes) {
            if (f2 == free && s2 == sup) continue;
            // cube (free,sup) inside cube (f2,s2)
            if (subset_of(free, f2) && subset_of(s2, sup) && subset_of(sup & ~s2, f2)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.insert({free, sup});
    }
    return maximal;
}

}  // namespace

TEST_SUITE("core_sets") {

TEST_CASE("universe validation") {
    CHECK_THROWS(Universe({"a", "a"}));
    CHECK_THROWS(Universe(std::vector<std::string>(65, "x")));
    const Universe u({"x", "y"});
    CHECK(u.index_of("y") == 1);
    CHECK(!u.index_of("z"));
    CHECK_THROWS(u.mask_of({"z"}));
}

TEST_CASE("family canonical form") {
    const Universe u = universe_n(3);
    const SetFamily f = SetFamily::make(u, {5, 1, 5, 0});
    CHECK(f.members == std::vector<Mask>{0, 1, 5});
    CHECK_THROWS(SetFamily::make(universe_n(2), {4}));
}

TEST_CASE("complement of full and singleton families") {
    const auto full2 = free_geometry(2).family();
    CHECK(complement_family(full2).members.empty());
    const SetFamily empty_only = SetFamily::make(universe_n(1), {0});
    CHECK(complement_family(empty_only).members == std::vector<Mask>{1});
}

TEST_CASE("complement of the 4-element geometry is the five non-convex sets") {
    const SetFamily f = geometry4_family();
    const SetFamily comp = complement_family(f);
    const SetFamily expected = make_family(
        f.universe, {{"1", "3"}, {"1", "4"}, {"2", "4"}, {"1", "2", "4"}, {"1", "3", "4"}});
    CHECK(comp == expected);
}

TEST_CASE("complement is an involution") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const SetFamily f = random_family(4, 1 + static_cast<int>(rng.below(12)), rng);
        CHECK(complement_family(complement_family(f)) == f);
    }
}

TEST_CASE("trace basics") {
    const SetFamily f = geometry4_family();
    const SetFamily t0 = trace(f, 0);
    CHECK(t0.members == std::vector<Mask>{0});
    CHECK(t0.n() == 0);

    const auto full3 = free_geometry(3).family();
    const SetFamily ty = trace(full3, 0b101);
    CHECK(ty.size() == 4);  // the full square on the sub-universe
    CHECK(ty.n() == 2);
}

TEST_CASE("trace of the 4-element geometry misses exactly one triple subset") {
    const SetFamily f = geometry4_family();
    const Mask y = f.universe.mask_of({"1", "2", "3"});
    const SetFamily t = trace(f, y);
    CHECK(t.size() == 7);
    const Universe& su = t.universe;
    CHECK(!t.contains(su.mask_of({"1", "3"})));
    CHECK(t.contains(su.mask_of({"1", "2"})));
}

TEST_CASE("trace respects restriction chains") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const SetFamily f = random_family(5, 1 + static_cast<int>(rng.below(16)), rng);
        CHECK(trace(f, f.universe.full_mask()) == f);
        const Mask yp = rng.below(32);
        const Mask y = rng.below(32) & yp;
        // trace to y equals trace of the yp-trace, re-indexed
        const SetFamily direct = trace(f, y);
        const SetFamily nested = trace(trace(f, yp), compress_mask(y, yp));
        CHECK(direct == nested);
    }
}

TEST_CASE("shattering on the 4-element geometry") {
    const SetFamily f = geometry4_family();
    CHECK(is_shattered(f, f.universe.mask_of({"2", "3"})));
    CHECK(is_strongly_shattered(f, f.universe.mask_of({"2", "3"})));
    // pairs are all shattered (the full set tops every trace); triples are not:
    // no member meets {1,2,3} in exactly {1,3}
    CHECK(is_shattered(f, f.universe.mask_of({"1", "3"})));
    CHECK(!is_shattered(f, f.universe.mask_of({"1", "2", "3"})));
    const auto full = free_geometry(3).family();
    CHECK(is_shattered(full, 0b111));
    CHECK(is_strongly_shattered(full, 0b111));
}

TEST_CASE("strongly shattered implies shattered") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const SetFamily f = random_family(5, 1 + static_cast<int>(rng.below(20)), rng);
        const Mask x = rng.below(32);
        if (is_strongly_shattered(f, x)) CHECK(is_shattered(f, x));
    }
}

TEST_CASE("vc dimension") {
    for (int d = 1; d <= 4; ++d) CHECK(vc_dimension(free_geometry(d).family()) == d);
    CHECK(vc_dimension(SetFamily::make(universe_n(2), {0})) == 0);
    CHECK_THROWS(vc_dimension(SetFamily::make(universe_n(2), {})));

    // brute-force recomputation on the 4-element geometry
    const SetFamily f = geometry4_family();
    int brute = 0;
    for (Mask x = 0; x <= 15; ++x)
        if (is_shattered(f, x)) brute = std::max(brute, popcount(x));
    CHECK(brute == 2);
    CHECK(vc_dimension(f) == 2);
}

TEST_CASE("ampleness") {
    CHECK(is_ample(free_geometry(3).family()));
    CHECK(is_ample(geometry4_family()));
    CHECK(!is_ample(SetFamily::make(universe_n(2), {0, 0b11})));
}

TEST_CASE("ample families: complement ample, vc equals largest cube") {
    const SetFamily f = geometry4_family();
    CHECK(is_ample(complement_family(f)));
    int cube_dim = 0;
    for (const SignVector& sv : maximal_cubes(f))
        cube_dim = std::max(cube_dim, popcount(sv.zero_set(f.universe.full_mask())));
    CHECK(cube_dim == vc_dimension(f));
}

TEST_CASE("maximal cubes of degenerate families") {
    const auto full = free_geometry(2).family();
    const auto cubes = maximal_cubes(full);
    REQUIRE(cubes.size() == 1);
    CHECK(cubes[0].plus == 0);
    CHECK(cubes[0].minus == 0);

    const SetFamily empty_only = SetFamily::make(universe_n(3), {0});
    const auto c2 = maximal_cubes(empty_only);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].plus == 0);
    CHECK(c2[0].minus == 0b111);
}

TEST_CASE("maximal cubes match the brute-force search") {
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        const SetFamily f = random_family(4, 1 + static_cast<int>(rng.below(12)), rng);
        const auto expected = brute_maximal_cubes(f);
        const auto got = maximal_cubes(f);
        CHECK(got.size() == expected.size());
        for (const SignVector& sv : got) {
            const Mask free = f.universe.full_mask() & ~(sv.plus | sv.minus);
            CHECK(expected.count({free, sv.plus}) == 1);
        }
    }
    // the complement of the 4-element geometry specifically
    const SetFamily comp = complement_family(geometry4_family());
    const auto expected = brute_maximal_cubes(comp);
    const auto got = maximal_cubes(comp);
    CHECK(got.size() == expected.size());
}

TEST_CASE("sign vector strings") {
    SignVector sv;
    sv.plus = 0b1001;
    sv.minus = 0b0110;
    CHECK(sign_vector_str(sv, 4) == "+,-,-,+");
    const SignVector parsed = parse_sign_vector("+,-,-,+", 4);
    CHECK(parsed == sv);
    CHECK_THROWS(parse_sign_vector("+,-", 4));
    CHECK_THROWS(parse_sign_vector("+,?,-,+", 4));
}

}  // TEST_SUITE
