#include "orthantgeo/json_io.hpp"

#include <set>
#include <stdexcept>

namespace og {

namespace {

RatVec ratvec_from_json(const Json& j) {
    RatVec out;
    for (const auto& s : j) out.push_back(Rational::from_string(s.get<std::string>()));
    return out;
}

Json ratvec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

}  // namespace

SetFamily family_from_json(const Json& j) {
    if (!j.contains("universe") || !j.contains("sets"))
        throw std::invalid_argument("family: need 'universe' and 'sets'");
    Universe u(j.at("universe").get<std::vector<std::string>>());
    std::vector<Mask> members;
    std::set<Mask> seen;
    for (const auto& set : j.at("sets")) {
        const Mask m = u.mask_of(set.get<std::vector<std::string>>());
        if (!seen.insert(m).second) throw std::invalid_argument("family: duplicate set");
        members.push_back(m);
    }
    return SetFamily::make(std::move(u), std::move(members));
}

Json family_to_json(const SetFamily& f) {
    Json sets = Json::array();
    for (Mask m : f.members) sets.push_back(f.universe.mask_labels(m));
    return Json{{"universe", f.universe.labels()}, {"sets", sets}};
}

Json circuits_to_json(const Universe& u, std::span<const RootedCircuit> circuits) {
    Json out = Json::array();
    for (const auto& rc : circuits)
        out.push_back(Json{{"stem", u.mask_labels(rc.stem)}, {"root", u.label(rc.root)}});
    return out;
}

std::vector<RootedCircuit> circuits_from_json(const Universe& u, const Json& j) {
    std::vector<RootedCircuit> out;
    for (const auto& item : j) {
        const Mask stem = u.mask_of(item.at("stem").get<std::vector<std::string>>());
        const auto root = u.index_of(item.at("root").get<std::string>());
        if (!root || !has_bit(stem, *root))
            throw std::invalid_argument("circuit: root must lie in the stem");
        out.push_back({stem, *root});
    }
    return out;
}

Json orders_to_json(const Universe& u, std::span<const TotalOrder> orders) {
    Json out = Json::array();
    for (const auto& o : orders) {
        Json one = Json::array();
        for (int e : o.order) one.push_back(u.label(e));
        out.push_back(one);
    }
    return out;
}

namespace {

Json source_to_json(const ConeSource& src) {
    Json j{{"kind", src.kind}};
    if (!src.stem.empty()) j["stem"] = src.stem;
    if (!src.root.empty()) j["root"] = src.root;
    if (!src.members.empty()) j["members"] = src.members;
    if (!src.note.empty()) j["note"] = src.note;
    return j;
}

ConeSource source_from_json(const Json& j) {
    ConeSource src;
    src.kind = j.value("kind", std::string("manual"));
    if (j.contains("stem")) src.stem = j.at("stem").get<std::vector<std::string>>();
    if (j.contains("root")) src.root = j.at("root").get<std::string>();
    if (j.contains("members")) src.members = j.at("members").get<std::vector<std::string>>();
    if (j.contains("note")) src.note = j.at("note").get<std::string>();
    return src;
}

std::string kind_name(SystemKind k) {
    switch (k) {
        case SystemKind::CircuitCone: return "circuit_cone";
        case SystemKind::LowDim: return "lowdim";
        case SystemKind::Tree: return "tree";
        case SystemKind::Manual: return "manual";
    }
    return "manual";
}

SystemKind kind_from_name(const std::string& s) {
    if (s == "circuit_cone") return SystemKind::CircuitCone;
    if (s == "lowdim") return SystemKind::LowDim;
    if (s == "tree") return SystemKind::Tree;
    return SystemKind::Manual;
}

}  // namespace

Json system_to_json(const HalfspaceSystem& sys) {
    Json arrangement = Json::array();
    for (const auto& row : sys.arrangement)
        arrangement.push_back(Json{{"label", row.label},
                                   {"coeffs", ratvec_to_json(row.coeffs)},
                                   {"rhs", row.rhs.str()}});
    Json cone = Json::array();
    for (const auto& cr : sys.cone)
        cone.push_back(Json{{"coeffs", ratvec_to_json(cr.row.coeffs)},
                            {"rhs", cr.row.rhs.str()},
                            {"rel", cr.row.rel == Rel::Less ? "<" : ">"},
                            {"source", source_to_json(cr.source)}});
    Json j{{"dimension", sys.dimension},
           {"kind", kind_name(sys.kind)},
           {"arrangement", arrangement},
           {"cone", cone}};
    if (!sys.orders.empty()) j["orders"] = orders_to_json(sys.universe, sys.orders);
    if (sys.clip_box)
        j["clip_box"] = Json{{"xmin", sys.clip_box->xmin.str()},
                             {"xmax", sys.clip_box->xmax.str()},
                             {"ymin", sys.clip_box->ymin.str()},
                             {"ymax", sys.clip_box->ymax.str()}};
    return j;
}

HalfspaceSystem system_from_json(const Json& j) {
    HalfspaceSystem sys;
    sys.dimension = j.at("dimension").get<int>();
    sys.kind = kind_from_name(j.value("kind", std::string("manual")));
    std::vector<std::string> labels;
    for (const auto& row : j.at("arrangement")) {
        ArrangementRow ar;
        ar.label = row.at("label").get<std::string>();
        ar.coeffs = ratvec_from_json(row.at("coeffs"));
        ar.rhs = Rational::from_string(row.at("rhs").get<std::string>());
        if (static_cast<int>(ar.coeffs.size()) != sys.dimension)
            throw std::invalid_argument("system: arrangement row width mismatch");
        labels.push_back(ar.label);
        sys.arrangement.push_back(std::move(ar));
    }
    sys.universe = Universe(labels);
    for (const auto& row : j.value("cone", Json::array())) {
        ConeRow cr;
        cr.row.coeffs = ratvec_from_json(row.at("coeffs"));
        cr.row.rhs = Rational::from_string(row.at("rhs").get<std::string>());
        const std::string rel = row.value("rel", std::string(">"));
        if (rel != "<" && rel != ">") throw std::invalid_argument("system: rel must be '<' or '>'");
        cr.row.rel = rel == "<" ? Rel::Less : Rel::Greater;
        if (static_cast<int>(cr.row.coeffs.size()) != sys.dimension)
            throw std::invalid_argument("system: cone row width mismatch");
        if (row.contains("source")) cr.source = source_from_json(row.at("source"));
        sys.cone.push_back(std::move(cr));
    }
    if (j.contains("orders")) {
        for (const auto& arr : j.at("orders")) {
            TotalOrder o;
            for (const auto& label : arr) {
                const auto idx = sys.universe.index_of(label.get<std::string>());
                if (!idx) throw std::invalid_argument("system: order label unknown");
                o.order.push_back(*idx);
            }
            sys.orders.push_back(std::move(o));
        }
    }
    if (j.contains("clip_box")) {
        const auto& cb = j.at("clip_box");
        sys.clip_box = Box2{Rational::from_string(cb.at("xmin").get<std::string>()),
                            Rational::from_string(cb.at("xmax").get<std::string>()),
                            Rational::from_string(cb.at("ymin").get<std::string>()),
                            Rational::from_string(cb.at("ymax").get<std::string>())};
    }
    return sys;
}

Json point_representation_to_json(const PointRepresentation& rep) {
    Json p = Json::array();
    for (const auto& [label, coords] : rep.p)
        p.push_back(Json{{"label", label}, {"coords", ratvec_to_json(coords)}});
    Json q = Json::array();
    for (const auto& coords : rep.q) q.push_back(Json{{"coords", ratvec_to_json(coords)}});
    return Json{{"dimension", rep.dimension}, {"p", p}, {"q", q}};
}

PointRepresentation point_representation_from_json(const Json& j) {
    PointRepresentation rep;
    rep.dimension = j.at("dimension").get<int>();
    for (const auto& item : j.at("p"))
        rep.p.push_back({item.at("label").get<std::string>(), ratvec_from_json(item.at("coords"))});
    for (const auto& item : j.at("q")) rep.q.push_back(ratvec_from_json(item.at("coords")));
    return rep;
}

Json report_to_json(const VerificationReport& rep, int n) {
    Json mismatches = Json::array();
    for (const auto& mm : rep.mismatches)
        mismatches.push_back(Json{{"sign", sign_vector_str(mm.sign, n)},
                                  {"expected", mm.expected},
                                  {"found", mm.found}});
    Json witnesses = Json::object();
    for (const auto& [sv, w] : rep.witnesses) witnesses[sign_vector_str(sv, n)] = ratvec_to_json(w);
    return Json{{"verdict", rep.verdict},
                {"expected_regions", rep.expected_regions},
                {"found_regions", rep.found_regions},
                {"mismatches", mismatches},
                {"witnesses", witnesses}};
}

Json axiom_report_to_json(const AxiomReport& rep, const Universe& u) {
    Json j{{"c1", rep.c1}, {"c2", rep.c2}, {"c3", rep.c3}, {"geometry", rep.ok()}};
    if (rep.c1_missing) j["c1_missing"] = u.mask_labels(*rep.c1_missing);
    if (rep.c2_pair)
        j["c2_pair"] = Json::array(
            {u.mask_labels(rep.c2_pair->first), u.mask_labels(rep.c2_pair->second)});
    if (rep.c3_stuck) j["c3_stuck"] = u.mask_labels(*rep.c3_stuck);
    return j;
}

Json embed_result_to_json(const EmbedResult& res) {
    Json steps = Json::array();
    const Universe& u = res.alignment.universe();
    for (const auto& step : res.steps) {
        Json merged = Json::array();
        for (Mask m : step.merged_maxima) merged.push_back(u.mask_labels(m));
        steps.push_back(Json{{"meet", u.mask_labels(step.meet)},
                             {"merged_maxima", merged},
                             {"added", step.added}});
    }
    return Json{{"alignment", family_to_json(res.alignment.family())},
                {"embedded", family_to_json(res.embedded)},
                {"steps", steps}};
}

void tree_from_json(const Json& j, std::vector<std::pair<std::string, std::string>>& edges,
                    std::string& root) {
    edges.clear();
    for (const auto& e : j.at("edges")) {
        if (e.size() != 2) throw std::invalid_argument("tree: each edge needs two endpoints");
        edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    }
    root = j.at("root").get<std::string>();
}

}  // namespace og
