#include <algorithm>
#include <set>

#include "doctest.h"
#include "orthantgeo/oracle_enum.hpp"
#include "orthantgeo/realization.hpp"
#include "orthantgeo/verifier.hpp"
#include "support/fixtures.hpp"

using namespace og;
using namespace og::testing;

namespace {

// cone row normalized to a.x > 0, as plain longs for comparison
std::vector<long> normalized_ints(const ConeRow& cr, int n) {
    std::vector<long> out(n);
    for (int i = 0; i < n; ++i) {
        const Rational c = cr.row.rel == Rel::Greater ? cr.row.coeffs[i] : -cr.row.coeffs[i];
        out[i] = std::stol(c.str().substr(0, c.str().find('/')));
    }
    return out;
}

}  // namespace

TEST_SUITE("realization") {

TEST_CASE("cone realization emits the four inequalities of the running example") {
    const ConvexGeometry g = geometry4();
    const HalfspaceSystem sys = realize_cone(g, CircuitChoice::All);
    CHECK(sys.dimension == 4);
    REQUIRE(sys.arrangement.size() == 4);
    for (int e = 0; e < 4; ++e) {
        CHECK(sys.arrangement[e].rhs == Rational(0));
        for (int i = 0; i < 4; ++i)
            CHECK(sys.arrangement[e].coeffs[i] == (i == e ? Rational(1) : Rational(0)));
    }

    // x1+x3 < 4x2 ; x2+x4 < 4x3 ; x1+x4 < 4x2 ; x1+x4 < 4x3, as a.x > 0 rows
    std::set<std::vector<long>> expected{{-1, 4, -1, 0}, {0, -1, 4, -1}, {-1, 4, 0, -1},
                                         {-1, 0, 4, -1}};
    REQUIRE(sys.cone.size() == 4);
    std::set<std::vector<long>> got;
    for (const auto& cr : sys.cone) {
        CHECK(cr.row.rhs == Rational(0));
        got.insert(normalized_ints(cr, 4));
    }
    CHECK(got == expected);
}

TEST_CASE("critical realization keeps only the two critical rows") {
    const HalfspaceSystem sys = realize_cone(geometry4(), CircuitChoice::Critical);
    REQUIRE(sys.cone.size() == 2);
    std::set<std::vector<long>> got;
    for (const auto& cr : sys.cone) {
        CHECK(cr.source.kind == "critical_circuit");
        got.insert(normalized_ints(cr, 4));
    }
    CHECK(got == std::set<std::vector<long>>{{-1, 4, -1, 0}, {0, -1, 4, -1}});
}

TEST_CASE("free geometries realize with an empty cone") {
    CHECK(realize_cone(free_geometry(3), CircuitChoice::All).cone.empty());
}

TEST_CASE("the circuit coefficient is configurable") {
    const HalfspaceSystem sys = realize_cone(geometry4(), CircuitChoice::Critical, {}, 7);
    for (const auto& cr : sys.cone) {
        const auto ints = normalized_ints(cr, 4);
        CHECK(*std::max_element(ints.begin(), ints.end()) == 7);
    }
}

TEST_CASE("positive circuit rows") {
    const ConvexGeometry g = geometry4();
    const Mask p14 = g.universe().mask_of({"1", "4"});
    const HalfspaceSystem sys =
        realize_cone(g, CircuitChoice::Critical, std::vector<Mask>{p14});
    REQUIRE(sys.cone.size() == 3);
    CHECK(sys.cone.back().source.kind == "positive_circuit");
    CHECK(normalized_ints(sys.cone.back(), 4) == std::vector<long>{-1, 0, 0, -1});
}

TEST_CASE("witness points certify every member region") {
    const ConvexGeometry g = geometry4();
    for (const CircuitChoice choice : {CircuitChoice::All, CircuitChoice::Critical}) {
        const HalfspaceSystem sys = realize_cone(g, choice);
        for (Mask m : g.family().members) {
            const RatVec w = witness_point(g, sys, m);
            CHECK(satisfies_strictly(region_system(sys, m), w));
        }
    }
}

TEST_CASE("the all-ones vector witnesses the full set") {
    const ConvexGeometry g = geometry4();
    const HalfspaceSystem sys = realize_cone(g, CircuitChoice::All);
    const RatVec w = witness_point(g, sys, g.universe().full_mask());
    for (const Rational& c : w) CHECK(c == Rational(1));
}

TEST_CASE("the empty set gets a strictly negative witness") {
    const ConvexGeometry g = geometry4();
    const HalfspaceSystem sys = realize_cone(g, CircuitChoice::All);
    for (const Rational& c : witness_point(g, sys, 0)) CHECK(c < Rational(0));
}

TEST_CASE("witness point rejects non-members") {
    const ConvexGeometry g = geometry4();
    const HalfspaceSystem sys = realize_cone(g, CircuitChoice::All);
    CHECK_THROWS(witness_point(g, sys, g.universe().mask_of({"1", "4"})));
}

TEST_CASE("threshold sequence follows the recurrence") {
    const HalfspaceSystem chain_sys = realize_lowdim(chain3());
    CHECK(chain_sys.dimension == 1);
    // d = 1: thresholds 0,2,4,6 -> hyperplane x = b with member side below
    const RatVec expected_b{Rational(2), Rational(4), Rational(6)};
    // arrangement row e: -x / b(e) > -1, i.e. coeff = -1/b(e)
    std::set<std::string> coeffs;
    for (const auto& row : chain_sys.arrangement) coeffs.insert(row.coeffs[0].str());
    CHECK(coeffs == std::set<std::string>{"-1/2", "-1/4", "-1/6"});

    const HalfspaceSystem sys4 = realize_lowdim(geometry4());
    CHECK(sys4.dimension == 2);
    CHECK(sys4.orders.size() == 2);
    // d = 2 sequence: 0, 3, 9, 21, 45
    std::set<std::string> denominators;
    for (const auto& row : sys4.arrangement)
        for (const auto& c : row.coeffs) denominators.insert(c.str());
    for (const char* v : {"-1/3", "-1/9", "-1/21", "-1/45"})
        CHECK(denominators.count(v) == 1);
}

TEST_CASE("low-dimension witnesses certify") {
    const ConvexGeometry g = geometry4();
    const HalfspaceSystem sys = realize_lowdim(g);
    for (Mask m : g.family().members) {
        const RatVec y = witness_lowdim(g, sys, m);
        CHECK(satisfies_strictly(region_system(sys, m), y));
    }
    CHECK_THROWS(witness_lowdim(g, sys, g.universe().mask_of({"1", "3"})));

    // empty set: the constant point one past the last threshold
    const ConvexGeometry c3 = chain3();
    const HalfspaceSystem csys = realize_lowdim(c3);
    const RatVec y0 = witness_lowdim(c3, csys, 0);
    REQUIRE(y0.size() == 1);
    CHECK(y0[0] == Rational(7));  // thresholds 0,2,4,6

    // full set: all-ones
    for (const Rational& c : witness_lowdim(c3, csys, c3.universe().full_mask()))
        CHECK(c == Rational(1));
}

TEST_CASE("single-edge tree") {
    const TreeRealization tr = realize_tree({{"r", "a"}}, "r");
    CHECK(tr.system.dimension == 2);
    CHECK(tr.system.arrangement.size() == 1);
    CHECK(tr.family.size() == 2);
    const VerificationReport rep = verify_bfs(tr.system, tr.family, tr.signs[0]);
    CHECK(rep.verdict);
    CHECK(rep.found_regions == 2);
}

TEST_CASE("star tree cuts one region per leaf") {
    const TreeRealization tr = realize_tree({{"r", "a"}, {"r", "b"}, {"r", "c"}}, "r");
    const VerificationReport rep = verify_bfs(tr.system, tr.family, tr.signs[0]);
    CHECK(rep.verdict);
    CHECK(rep.found_regions == 4);
}

TEST_CASE("tree region witnesses satisfy their regions") {
    const TreeRealization tr =
        realize_tree({{"r", "a"}, {"r", "b"}, {"a", "c"}, {"a", "d"}, {"d", "e"}}, "r");
    for (std::size_t i = 0; i < tr.vertices.size(); ++i) {
        const Mask m = tr.signs[i].plus;
        CHECK(satisfies_strictly(region_system(tr.system, m), tr.region_witnesses[i]));
    }
}

TEST_CASE("tree input validation") {
    CHECK_THROWS(realize_tree({{"a", "a"}}, "a"));
    CHECK_THROWS(realize_tree({{"a", "b"}, {"b", "c"}, {"c", "a"}}, "a"));
    CHECK_THROWS(realize_tree({{"a", "b"}}, "z"));
}

TEST_CASE("point representation of the free geometry") {
    const ConvexGeometry g = free_geometry(3);
    const HalfspaceSystem sys = realize_cone(g, CircuitChoice::Critical);
    const PointRepresentation rep = export_point_representation(g, sys);
    CHECK(rep.q.empty());
    CHECK(rep.p.size() == 3);
    CHECK(verify_shelling(rep, g));
}

TEST_CASE("point representation of the running example") {
    const ConvexGeometry g = geometry4();
    const HalfspaceSystem sys = realize_cone(g, CircuitChoice::Critical);
    const PointRepresentation rep = export_point_representation(g, sys);
    CHECK(rep.q.size() == 2);  // one point per critical circuit
    for (const auto& q : rep.q) {
        Rational sum(0);
        for (const auto& c : q) sum += c;
        CHECK(sum == Rational(1));
    }
    // the facet points stay off the ground hull
    for (const auto& [label, pt] : rep.p) CHECK(!in_convex_hull(pt, rep.q));
    CHECK(verify_shelling(rep, g));

    // negative control: drag one facet point into the ground simplex
    PointRepresentation bad = rep;
    RatVec center(4, Rational(1, 4));
    bad.q[0] = center;
    CHECK(!verify_shelling(bad, g));
}

TEST_CASE("export rejects systems with positive rows") {
    const ConvexGeometry g = geometry4();
    const Mask p14 = g.universe().mask_of({"1", "4"});
    const HalfspaceSystem sys = realize_cone(g, CircuitChoice::Critical, std::vector<Mask>{p14});
    CHECK_THROWS(export_point_representation(g, sys));
}

TEST_CASE("chain export has one facet point per critical circuit") {
    const ConvexGeometry g = chain3();
    const HalfspaceSystem sys = realize_cone(g, CircuitChoice::Critical);
    const PointRepresentation rep = export_point_representation(g, sys);
    CHECK(rep.q.size() == critical_rooted_circuits(g).size());
    CHECK(verify_shelling(rep, g));
}

}  // TEST_SUITE
