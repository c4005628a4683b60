#include "doctest.h"
#include "orthantgeo/json_io.hpp"
#include "orthantgeo/oracle_enum.hpp"
#include "support/fixtures.hpp"

using namespace og;
using namespace og::testing;

TEST_SUITE("json_io") {

TEST_CASE("family round trip") {
    const SetFamily f = geometry4_family();
    CHECK(family_from_json(family_to_json(f)) == f);
}

TEST_CASE("family parse rejections") {
    CHECK_THROWS(family_from_json(Json::parse(R"({"universe": ["1"], "sets": [["2"]]})")));
    CHECK_THROWS(family_from_json(Json::parse(R"({"universe": ["1"], "sets": [["1"], ["1"]]})")));
    CHECK_THROWS(family_from_json(Json::parse(R"({"universe": ["1", "1"], "sets": []})")));
    CHECK_THROWS(family_from_json(Json::parse(R"({"sets": []})")));
}

TEST_CASE("rational strings") {
    CHECK(Rational::from_string("3/6").str() == "1/2");
    CHECK(Rational::from_string("-4/2").str() == "-2/1");
    CHECK(Rational::from_string("5").str() == "5/1");
    CHECK(Rational(0).str() == "0/1");
    CHECK_THROWS(Rational::from_string("1/0"));
    CHECK_THROWS(Rational::from_string("x"));
}

TEST_CASE("circuit serialization") {
    const ConvexGeometry g = geometry4();
    const auto circuits = rooted_circuits(g);
    const Json j = circuits_to_json(g.universe(), circuits);
    CHECK(circuits_from_json(g.universe(), j) == circuits);
    CHECK_THROWS(circuits_from_json(
        g.universe(), Json::parse(R"([{"stem": ["1", "2"], "root": "3"}])")));
}

TEST_CASE("system round trip preserves rows and metadata") {
    const ConvexGeometry g = geometry4();
    for (const HalfspaceSystem& sys :
         {realize_cone(g, CircuitChoice::All), realize_lowdim(g)}) {
        const HalfspaceSystem back = system_from_json(system_to_json(sys));
        CHECK(back.dimension == sys.dimension);
        CHECK(back.kind == sys.kind);
        REQUIRE(back.arrangement.size() == sys.arrangement.size());
        for (std::size_t i = 0; i < sys.arrangement.size(); ++i) {
            CHECK(back.arrangement[i].label == sys.arrangement[i].label);
            CHECK(back.arrangement[i].coeffs == sys.arrangement[i].coeffs);
            CHECK(back.arrangement[i].rhs == sys.arrangement[i].rhs);
        }
        REQUIRE(back.cone.size() == sys.cone.size());
        for (std::size_t i = 0; i < sys.cone.size(); ++i) {
            CHECK(back.cone[i].row.coeffs == sys.cone[i].row.coeffs);
            CHECK(back.cone[i].row.rel == sys.cone[i].row.rel);
            CHECK(back.cone[i].source.kind == sys.cone[i].source.kind);
        }
        CHECK(back.orders.size() == sys.orders.size());
    }
}

TEST_CASE("tree systems keep their clip box") {
    const TreeRealization tr = realize_tree({{"r", "a"}, {"a", "b"}}, "r");
    const HalfspaceSystem back = system_from_json(system_to_json(tr.system));
    REQUIRE(back.clip_box);
    CHECK(back.clip_box->xmin == tr.system.clip_box->xmin);
    CHECK(back.kind == SystemKind::Tree);
}

TEST_CASE("point representation round trip") {
    const ConvexGeometry g = geometry4();
    const PointRepresentation rep =
        export_point_representation(g, realize_cone(g, CircuitChoice::Critical));
    const PointRepresentation back = point_representation_from_json(point_representation_to_json(rep));
    CHECK(back.dimension == rep.dimension);
    REQUIRE(back.p.size() == rep.p.size());
    for (std::size_t i = 0; i < rep.p.size(); ++i) {
        CHECK(back.p[i].first == rep.p[i].first);
        CHECK(back.p[i].second == rep.p[i].second);
    }
    CHECK(back.q == rep.q);
}

TEST_CASE("tree parsing") {
    std::vector<std::pair<std::string, std::string>> edges;
    std::string root;
    tree_from_json(Json::parse(R"({"edges": [["r","a"],["a","b"]], "root": "r"})"), edges, root);
    CHECK(edges.size() == 2);
    CHECK(root == "r");
    CHECK_THROWS(tree_from_json(Json::parse(R"({"edges": [["r"]], "root": "r"})"), edges, root));
}

}  // TEST_SUITE
