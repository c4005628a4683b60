// Command-line surface for batch use: axiom checks, circuit and order
// computation, realizations, verification, embeddings, corpus generation and
// SVG figures.  All payloads are JSON; "-" reads stdin.  Exit codes: 0 for
// success or a true verdict, 1 for a false verdict, 2 for input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orthantgeo/json_io.hpp"
#include "orthantgeo/oracle_enum.hpp"
#include "orthantgeo/svg_plot.hpp"

using namespace og;

namespace {

Json read_json(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return Json::parse(buf.str());
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

ConvexGeometry load_geometry(const std::string& path) {
    return ConvexGeometry::from_family(family_from_json(read_json(path)));
}

struct VerifyInputs {
    HalfspaceSystem system;
    SetFamily family;
};

// `verify` accepts either separate --system/--family payloads or a bundle
// object {"system": ..., "family": ...} (as produced by realize-tree).
VerifyInputs load_verify_inputs(const std::string& system_path, const std::string& family_path) {
    const Json js = read_json(system_path);
    VerifyInputs in{system_from_json(js.contains("system") ? js.at("system") : js),
                    SetFamily{}};
    if (!family_path.empty())
        in.family = family_from_json(read_json(family_path));
    else if (js.contains("family"))
        in.family = family_from_json(js.at("family"));
    else
        throw std::invalid_argument("verify: no family given and none embedded in the system");
    return in;
}

int run(int argc, char** argv) {
    CLI::App app{"exact realizations of convex geometries as orthant-cone intersection patterns"};
    app.require_subcommand(1);

    std::string family_path, host_path, system_path, tree_path, out_path, seed_str;
    std::string circuits_mode = "all", verify_mode = "exhaustive";
    bool critical = false, bouquet = false, median = false, verify_flag = false;
    int n = 4, k_orders = 3;
    std::uint64_t seed = 1;
    long coefficient = 0;

    auto* c_check = app.add_subcommand("check", "evaluate family axioms");
    c_check->add_option("--family", family_path)->required();
    c_check->add_flag("--bouquet", bouquet, "also check the bouquet axioms and use them as verdict");
    c_check->add_flag("--median", median, "also check the median axioms and use them as verdict");

    auto* c_circuits = app.add_subcommand("circuits", "rooted circuits of a geometry");
    c_circuits->add_option("--family", family_path)->required();
    c_circuits->add_flag("--critical", critical, "only the critical rooted circuits");

    auto* c_cdim = app.add_subcommand("cdim", "convex dimension");
    c_cdim->add_option("--family", family_path)->required();

    auto* c_orders = app.add_subcommand("orders", "a generating family of total orders");
    c_orders->add_option("--family", family_path)->required();

    auto* c_ideal = app.add_subcommand("ideal", "validate an ideal and emit its positive circuits");
    c_ideal->add_option("--host", host_path)->required();
    c_ideal->add_option("--family", family_path)->required();

    auto* c_realize = app.add_subcommand("realize", "cone realization over the coordinate arrangement");
    c_realize->add_option("--family", family_path)->required();
    c_realize->add_option("--host", host_path, "host geometry; --family is then an ideal of it");
    c_realize->add_option("--circuits", circuits_mode)->check(CLI::IsMember({"all", "critical"}));
    c_realize->add_flag("--critical", critical, "same as --circuits critical");
    c_realize->add_option("--coefficient", coefficient, "circuit row coefficient (default |U|)");

    auto* c_lowdim = app.add_subcommand("realize-lowdim", "realization in convex-dimension space");
    c_lowdim->add_option("--family", family_path)->required();

    auto* c_tree = app.add_subcommand("realize-tree", "planar realization of a tree");
    c_tree->add_option("--tree", tree_path)->required();

    auto* c_shelling = app.add_subcommand("shelling", "dual point representation");
    c_shelling->add_option("--family", family_path)->required();
    c_shelling->add_flag("--verify", verify_flag, "brute-force check the exported representation");

    auto* c_verify = app.add_subcommand("verify", "certify a system against a family");
    c_verify->add_option("--system", system_path)->required();
    c_verify->add_option("--family", family_path);
    c_verify->add_option("--mode", verify_mode)->check(CLI::IsMember({"exhaustive", "bfs"}));
    c_verify->add_option("--seed", seed_str, "seed sign vector for bfs, e.g. +,-,-,+");

    auto* c_embed = app.add_subcommand("embed", "embed a bouquet of downset alignments");
    c_embed->add_option("--family", family_path)->required();

    auto* c_enum = app.add_subcommand("enumerate", "all geometries on n elements");
    c_enum->add_option("--n", n)->required();
    c_enum->add_option("--out", out_path, "directory for one JSON family per geometry")->required();

    auto* c_random = app.add_subcommand("random", "order-generated random geometry");
    c_random->add_option("--n", n)->required();
    c_random->add_option("--orders", k_orders);
    c_random->add_option("--seed", seed);
    c_random->add_option("--out", out_path);

    auto* c_plot = app.add_subcommand("plot", "render a planar system to SVG");
    c_plot->add_option("--system", system_path)->required();
    c_plot->add_option("--family", family_path, "label regions using this family's verification");
    c_plot->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    if (c_check->parsed()) {
        const SetFamily f = family_from_json(read_json(family_path));
        const AxiomReport rep = ConvexGeometry::check_axioms(f);
        Json j = axiom_report_to_json(rep, f.universe);
        bool verdict = rep.ok();
        if (bouquet) {
            const BouquetReport br = check_bouquet_axioms(f);
            j["c1p"] = br.c1p;
            j["c3p"] = br.c3p;
            j["bouquet"] = br.ok();
            verdict = br.ok();
        }
        if (median) {
            j["c6"] = check_c6(f);
            j["c7"] = check_c7(f);
            j["c8"] = check_c8(f);
            j["median"] = check_median(f);
            verdict = check_median(f);
        }
        emit(j);
        return verdict ? 0 : 1;
    }
    if (c_circuits->parsed()) {
        const ConvexGeometry g = load_geometry(family_path);
        emit(circuits_to_json(g.universe(),
                              critical ? critical_rooted_circuits(g) : rooted_circuits(g)));
        return 0;
    }
    if (c_cdim->parsed()) {
        const ConvexGeometry g = load_geometry(family_path);
        emit(Json{{"cdim", convex_dimension(g)}});
        return 0;
    }
    if (c_orders->parsed()) {
        const ConvexGeometry g = load_geometry(family_path);
        emit(orders_to_json(g.universe(), generating_orders(g)));
        return 0;
    }
    if (c_ideal->parsed()) {
        const ConvexGeometry host = load_geometry(host_path);
        const SetFamily sub = family_from_json(read_json(family_path));
        const bool ok = check_ideal(host, sub);
        Json j{{"ideal", ok}};
        if (ok) {
            Json pcs = Json::array();
            for (Mask p : positive_circuits(host.universe(), sub))
                pcs.push_back(host.universe().mask_labels(p));
            j["positive_circuits"] = pcs;
        }
        emit(j);
        return ok ? 0 : 1;
    }
    if (c_realize->parsed()) {
        const CircuitChoice choice = (critical || circuits_mode == "critical")
                                         ? CircuitChoice::Critical
                                         : CircuitChoice::All;
        if (host_path.empty()) {
            const ConvexGeometry g = load_geometry(family_path);
            emit(system_to_json(realize_cone(g, choice, {}, coefficient)));
        } else {
            const ConvexGeometry host = load_geometry(host_path);
            const SetFamily sub = family_from_json(read_json(family_path));
            if (!check_ideal(host, sub))
                throw std::invalid_argument("realize: --family is not an ideal of --host");
            const auto pcs = positive_circuits(host.universe(), sub);
            emit(system_to_json(realize_cone(host, choice, pcs, coefficient)));
        }
        return 0;
    }
    if (c_lowdim->parsed()) {
        const ConvexGeometry g = load_geometry(family_path);
        emit(system_to_json(realize_lowdim(g)));
        return 0;
    }
    if (c_tree->parsed()) {
        std::vector<std::pair<std::string, std::string>> edges;
        std::string root;
        tree_from_json(read_json(tree_path), edges, root);
        const TreeRealization tr = realize_tree(edges, root);
        Json vertices = Json::array();
        for (std::size_t i = 0; i < tr.vertices.size(); ++i)
            vertices.push_back(Json{{"name", tr.vertices[i]},
                                    {"sign", sign_vector_str(tr.signs[i], tr.family.n())}});
        emit(Json{{"system", system_to_json(tr.system)},
                  {"family", family_to_json(tr.family)},
                  {"vertices", vertices}});
        return 0;
    }
    if (c_shelling->parsed()) {
        const ConvexGeometry g = load_geometry(family_path);
        const PointRepresentation rep =
            export_point_representation(g, realize_cone(g, CircuitChoice::Critical));
        Json j = point_representation_to_json(rep);
        bool ok = true;
        if (verify_flag) {
            ok = verify_shelling(rep, g);
            j["verified"] = ok;
        }
        emit(j);
        return ok ? 0 : 1;
    }
    if (c_verify->parsed()) {
        const VerifyInputs in = load_verify_inputs(system_path, family_path);
        VerificationReport rep;
        if (verify_mode == "bfs") {
            SignVector seed_sv{0, in.family.universe.full_mask()};
            if (!seed_str.empty())
                seed_sv = parse_sign_vector(seed_str, in.family.universe.size());
            rep = verify_bfs(in.system, in.family, seed_sv);
        } else {
            rep = verify_exhaustive(in.system, in.family);
        }
        emit(report_to_json(rep, in.family.universe.size()));
        return rep.verdict ? 0 : 1;
    }
    if (c_embed->parsed()) {
        const SetFamily f = family_from_json(read_json(family_path));
        emit(embed_result_to_json(embed_bouquet(f)));
        return 0;
    }
    if (c_enum->parsed()) {
        const auto corpus = enumerate_convex_geometries(n);
        int idx = 0;
        for (const auto& g : corpus) {
            char name[32];
            std::snprintf(name, sizeof(name), "geometry_%05d.json", idx++);
            std::ofstream out(out_path + "/" + name);
            if (!out) throw std::invalid_argument("enumerate: cannot write to '" + out_path + "'");
            out << family_to_json(g.family()).dump(2) << "\n";
        }
        emit(Json{{"count", corpus.size()}});
        return 0;
    }
    if (c_random->parsed()) {
        const ConvexGeometry g = random_geometry(n, k_orders, seed);
        const Json j = family_to_json(g.family());
        if (out_path.empty()) {
            emit(j);
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::invalid_argument("random: cannot write to '" + out_path + "'");
            out << j.dump(2) << "\n";
        }
        return 0;
    }
    if (c_plot->parsed()) {
        const Json js = read_json(system_path);
        const HalfspaceSystem sys =
            system_from_json(js.contains("system") ? js.at("system") : js);
        const VerificationReport* rep_ptr = nullptr;
        VerificationReport rep;
        if (!family_path.empty() || js.contains("family")) {
            const SetFamily fam = family_path.empty() ? family_from_json(js.at("family"))
                                                      : family_from_json(read_json(family_path));
            rep = sys.universe.size() <= 16
                      ? verify_exhaustive(sys, fam)
                      : verify_bfs(sys, fam, SignVector{0, fam.universe.full_mask()});
            rep_ptr = &rep;
        }
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("plot: cannot write to '" + out_path + "'");
        out << render_svg(sys, rep_ptr);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
