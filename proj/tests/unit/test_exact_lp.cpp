#include "doctest.h"
#include "orthantgeo/exact_lp.hpp"
#include "orthantgeo/rng.hpp"
#include "support/fourier_motzkin.hpp"
#include "support/random_systems.hpp"

using namespace og;
using namespace og::testing;

namespace {

StrictRow row(std::vector<long> coeffs, long rhs, Rel rel) {
    StrictRow r;
    for (long c : coeffs) r.coeffs.push_back(Rational(c));
    r.rhs = Rational(rhs);
    r.rel = rel;
    return r;
}

}  // namespace

TEST_SUITE("exact_lp") {

TEST_CASE("opposite strict bounds are infeasible") {
    StrictSystem s{1, {row({1}, 0, Rel::Greater), row({-1}, 0, Rel::Greater)}};
    CHECK(!strictly_feasible(s));
    CHECK(!homogeneous_strictly_feasible(s));
}

TEST_CASE("simple feasible cone") {
    StrictSystem s{3, {row({1, 0, 0}, 0, Rel::Greater), row({0, 1, 0}, 0, Rel::Greater),
                       row({-1, 4, -1}, 0, Rel::Greater), row({0, 0, 1}, 0, Rel::Less)}};
    const auto w = strictly_feasible(s);
    REQUIRE(w);
    CHECK(satisfies_strictly(s, *w));
    const auto wh = homogeneous_strictly_feasible(s);
    REQUIRE(wh);
    CHECK(satisfies_strictly(s, *wh));
}

TEST_CASE("homogeneous solver rejects affine rows") {
    StrictSystem s{1, {row({1}, 1, Rel::Greater)}};
    CHECK_THROWS(homogeneous_strictly_feasible(s));
}

TEST_CASE("critical cone of the 4-element geometry meets the {1,2,3} orthant") {
    // orthant signs for {1,2,3} plus the two critical rows
    StrictSystem critical{4, {row({1, 0, 0, 0}, 0, Rel::Greater), row({0, 1, 0, 0}, 0, Rel::Greater),
                              row({0, 0, 1, 0}, 0, Rel::Greater), row({0, 0, 0, 1}, 0, Rel::Less),
                              row({-1, 4, -1, 0}, 0, Rel::Greater),
                              row({0, -1, 4, -1}, 0, Rel::Greater)}};
    const auto w = homogeneous_strictly_feasible(critical);
    REQUIRE(w);
    CHECK(satisfies_strictly(critical, *w));

    // the full-circuit system through the same orthant
    StrictSystem all = critical;
    all.rows.push_back(row({-1, 4, 0, -1}, 0, Rel::Greater));
    all.rows.push_back(row({-1, 0, 4, -1}, 0, Rel::Greater));
    const auto w2 = homogeneous_strictly_feasible(all);
    REQUIRE(w2);
    CHECK(satisfies_strictly(all, *w2));
}

TEST_CASE("the {1,4} orthant misses the critical cone") {
    StrictSystem s{4, {row({1, 0, 0, 0}, 0, Rel::Greater), row({0, 1, 0, 0}, 0, Rel::Less),
                       row({0, 0, 1, 0}, 0, Rel::Less), row({0, 0, 0, 1}, 0, Rel::Greater),
                       row({-1, 4, -1, 0}, 0, Rel::Greater), row({0, -1, 4, -1}, 0, Rel::Greater)}};
    CHECK(!homogeneous_strictly_feasible(s));
    CHECK(!strictly_feasible(s));
    CHECK(!fm_strictly_feasible(s));
}

TEST_CASE("slack and homogeneous routes agree on random homogeneous systems") {
    Rng rng(101);
    for (int trial = 0; trial < 250; ++trial) {
        const int d = 1 + static_cast<int>(rng.below(8));
        const int rows = 1 + static_cast<int>(rng.below(2 * d + 2));
        const StrictSystem s = random_homogeneous_system(d, rows, rng);
        const auto a = strictly_feasible(s);
        const auto b = homogeneous_strictly_feasible(s);
        CHECK(a.has_value() == b.has_value());
        if (a) CHECK(satisfies_strictly(s, *a));
        if (b) CHECK(satisfies_strictly(s, *b));
    }
}

TEST_CASE("solver verdicts agree with elimination in low dimension") {
    Rng rng(103);
    for (int trial = 0; trial < 250; ++trial) {
        const int d = 1 + static_cast<int>(rng.below(4));
        const int rows = 1 + static_cast<int>(rng.below(9));
        const StrictSystem s = random_affine_system(d, rows, rng);
        CHECK(strictly_feasible(s).has_value() == fm_strictly_feasible(s));
    }
}

TEST_CASE("interval route matches the general solver in dimension 1") {
    Rng rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        const StrictSystem s = random_affine_system(1, 1 + static_cast<int>(rng.below(6)), rng);
        const auto a = strictly_feasible(s);
        const auto b = strictly_feasible_1d(s);
        CHECK(a.has_value() == b.has_value());
    }
}

TEST_CASE("clipping route matches the general solver in dimension 2") {
    Rng rng(109);
    const Box2 box{Rational(-11), Rational(11), Rational(-11), Rational(11)};
    for (int trial = 0; trial < 100; ++trial) {
        StrictSystem s = random_affine_system(2, 1 + static_cast<int>(rng.below(7)), rng);
        // bound the region so clipping is complete
        s.rows.push_back(row({1, 0}, -10, Rel::Greater));
        s.rows.push_back(row({1, 0}, 10, Rel::Less));
        s.rows.push_back(row({0, 1}, -10, Rel::Greater));
        s.rows.push_back(row({0, 1}, 10, Rel::Less));
        const auto a = strictly_feasible(s);
        const auto b = strictly_feasible_2d_boxed(s, box);
        CHECK(a.has_value() == b.has_value());
    }
}

TEST_CASE("hull membership") {
    CHECK(in_convex_hull({Rational(0)}, {{Rational(-1)}, {Rational(1)}}));
    CHECK(in_convex_hull({Rational(1)}, {{Rational(-1)}, {Rational(1)}}));
    CHECK(!in_convex_hull({Rational(2)}, {{Rational(-1)}, {Rational(1)}}));
    CHECK(!in_convex_hull({Rational(0)}, {}));
    CHECK_THROWS(in_convex_hull({Rational(0)}, {{Rational(0), Rational(1)}}));
}

TEST_CASE("hull membership is equivalent to absence of a strict separator") {
    Rng rng(113);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const int k = 1 + static_cast<int>(rng.below(5));
        RatVec p;
        for (int i = 0; i < d; ++i) p.push_back(small_int(rng, 2));
        std::vector<RatVec> pts(k);
        for (auto& v : pts)
            for (int i = 0; i < d; ++i) v.push_back(small_int(rng, 2));

        // separator (a, b): a.p > b and a.v < b for all v — homogeneous in (a, b)
        StrictSystem sep;
        sep.dimension = d + 1;
        StrictRow top;
        top.coeffs = p;
        top.coeffs.push_back(Rational(-1));
        top.rhs = Rational(0);
        top.rel = Rel::Greater;
        sep.rows.push_back(top);
        for (const auto& v : pts) {
            StrictRow r;
            r.coeffs = v;
            r.coeffs.push_back(Rational(-1));
            r.rhs = Rational(0);
            r.rel = Rel::Less;
            sep.rows.push_back(r);
        }
        const bool separated = homogeneous_strictly_feasible(sep).has_value();
        CHECK(in_convex_hull(p, pts) == !separated);
    }
}

}  // TEST_SUITE
