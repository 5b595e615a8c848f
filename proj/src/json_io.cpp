#include "tav/json_io.hpp"

namespace tav {

namespace {

std::string rat_str(const Rat& r) { return r.str(); }

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace

json to_json(const LaurentQ& p) {
    json j = json::object();
    for (auto& [d, k] : p.c) j[std::to_string(d)] = rat_str(k);
    return j;
}

json to_json(const LaurentC& p) {
    json j = json::object();
    for (auto& [d, k] : p.c) {
        json coeffs = json::array();
        for (auto& r : k.res) coeffs.push_back(rat_str(r));
        j[std::to_string(d)] = json{{"level", k.level}, {"coeffs", coeffs}};
    }
    return j;
}

LaurentQ laurent_q_from_json(const json& j) {
    LaurentQ p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.add_to(std::stoi(it.key()), rat_parse(it.value().get<std::string>()));
    return p;
}

json to_json(const GroupSpec& s) {
    json j{{"kind", s.kind}};
    if (s.kind == "cyclic" || s.kind == "dihedral" || s.kind == "dicyclic" ||
        s.kind == "symmetric" || s.kind == "alternating" || s.kind == "frobenius")
        j["n"] = s.params.at(0);
    else if (s.kind == "abelian")
        j["factors"] = s.params;
    else if (s.kind == "semidirect_cyclic") {
        j["m"] = s.params.at(0);
        j["k"] = s.params.at(1);
        j["b"] = s.params.at(2);
    } else if (s.kind == "gpqr") {
        j["p"] = s.params.at(0);
        j["q"] = s.params.at(1);
        j["r"] = s.params.at(2);
        j["a"] = s.params.at(3);
        j["b"] = s.params.at(4);
    } else if (s.kind == "metacyclic_holder") {
        j["n"] = s.params.at(0);
        j["m"] = s.params.at(1);
        j["tuple"] = s.holder_tuple;
    } else if (s.kind == "direct_product") {
        json fs = json::array();
        for (auto& f : s.factors) fs.push_back(to_json(f));
        j["factors"] = fs;
    }
    return j;
}

GroupSpec group_spec_from_json(const json& j) {
    GroupSpec s;
    s.kind = j.at("kind").get<std::string>();
    if (s.kind == "cyclic" || s.kind == "dihedral" || s.kind == "dicyclic" ||
        s.kind == "symmetric" || s.kind == "alternating" || s.kind == "frobenius")
        s.params = {j.at("n").get<std::uint64_t>()};
    else if (s.kind == "abelian")
        s.params = j.at("factors").get<std::vector<std::uint64_t>>();
    else if (s.kind == "semidirect_cyclic")
        s.params = {j.at("m").get<std::uint64_t>(), j.at("k").get<std::uint64_t>(),
                    j.at("b").get<std::uint64_t>()};
    else if (s.kind == "gpqr")
        s.params = {j.at("p").get<std::uint64_t>(), j.at("q").get<std::uint64_t>(),
                    j.at("r").get<std::uint64_t>(), j.at("a").get<std::uint64_t>(),
                    j.at("b").get<std::uint64_t>()};
    else if (s.kind == "metacyclic_holder") {
        s.params = {j.at("n").get<std::uint64_t>(), j.at("m").get<std::uint64_t>()};
        s.holder_tuple = j.at("tuple").get<std::vector<std::uint64_t>>();
    } else if (s.kind == "direct_product") {
        for (auto& f : j.at("factors")) s.factors.push_back(group_spec_from_json(f));
    } else {
        throw std::invalid_argument("unknown group spec kind: " + s.kind);
    }
    return s;
}

json to_json(const FiniteGroup& g) {
    json table = json::array();
    for (int a = 0; a < g.order; ++a) {
        json row = json::array();
        for (int b = 0; b < g.order; ++b) row.push_back(g.mult(a, b));
        table.push_back(row);
    }
    return json{{"order", g.order}, {"table", table}, {"name", g.name}};
}

json to_json(const Presentation& p) {
    json rels = json::array();
    for (auto& r : p.relators) rels.push_back(r);
    json marks = json::object();
    for (auto& [k, w] : p.marks) marks[k] = w;
    return json{{"ngens", p.ngens}, {"names", p.names}, {"relators", rels}, {"marks", marks}};
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.ngens = j.at("ngens").get<int>();
    p.names = j.at("names").get<std::vector<std::string>>();
    for (auto& r : j.at("relators")) p.relators.push_back(free_reduce(r.get<Word>()));
    if (j.contains("marks"))
        for (auto it = j.at("marks").begin(); it != j.at("marks").end(); ++it)
            p.marks[it.key()] = free_reduce(it.value().get<Word>());
    return p;
}

json to_json(const PDCode& pd) {
    json cr = json::array();
    for (auto& x : pd.crossings)
        cr.push_back(json{{"under_in", x.under_in},
                          {"under_out", x.under_out},
                          {"over_in", x.over_in},
                          {"over_out", x.over_out},
                          {"sign", x.sign}});
    json j{{"nedges", pd.nedges}, {"crossings", cr}, {"free_loops", pd.free_loops}};
    if (!pd.updown.empty()) {
        json ud = json::object();
        for (auto& [e, s] : pd.updown) ud[std::to_string(e)] = s;
        j["updown"] = ud;
    }
    if (!pd.closure_edges.empty()) j["closure_edges"] = pd.closure_edges;
    if (!pd.top_edges.empty()) j["top_edges"] = pd.top_edges;
    return j;
}

PDCode pd_from_json(const json& j) {
    PDCode pd;
    if (j.is_array()) {
        // spec 4-tuple form: [{"arcs":[a,b,c,d],"sign":s}, ...], counterclockwise
        // from the incoming under-edge a; over flow is d->b for positive sign.
        int maxe = -1;
        for (auto& c : j) {
            auto arcs = c.at("arcs").get<std::vector<int>>();
            int sign = c.at("sign").get<int>();
            if (arcs.size() != 4) throw std::invalid_argument("PD tuple needs 4 edges");
            PDCrossing x;
            x.under_in = arcs[0];
            x.under_out = arcs[2];
            if (sign > 0) {
                x.over_in = arcs[3];
                x.over_out = arcs[1];
            } else {
                x.over_in = arcs[1];
                x.over_out = arcs[3];
            }
            x.sign = sign;
            for (int e : arcs) maxe = std::max(maxe, e);
            pd.crossings.push_back(x);
        }
        pd.nedges = maxe + 1;
        pd.validate();
        return pd;
    }
    pd.nedges = j.at("nedges").get<int>();
    if (j.contains("free_loops")) pd.free_loops = j.at("free_loops").get<int>();
    for (auto& c : j.at("crossings")) {
        PDCrossing x;
        x.under_in = c.at("under_in").get<int>();
        x.under_out = c.at("under_out").get<int>();
        x.over_in = c.at("over_in").get<int>();
        x.over_out = c.at("over_out").get<int>();
        x.sign = c.at("sign").get<int>();
        pd.crossings.push_back(x);
    }
    if (j.contains("updown"))
        for (auto it = j.at("updown").begin(); it != j.at("updown").end(); ++it)
            pd.updown[std::stoi(it.key())] = it.value().get<int>();
    if (j.contains("closure_edges")) pd.closure_edges = j.at("closure_edges").get<std::vector<int>>();
    if (j.contains("top_edges")) pd.top_edges = j.at("top_edges").get<std::vector<int>>();
    pd.validate();
    return pd;
}

json to_json(const Hom& h) {
    return json{{"images", h.images}, {"valid", h.valid}, {"surjective", h.surjective}};
}

json to_json(const TwistedResult& r) {
    json j{{"vanished", r.vanished},
           {"column_removed", r.column_removed},
           {"cyclotomic", r.cyclotomic}};
    if (r.cyclotomic) {
        j["numerator"] = to_json(r.numerator_c);
        j["denominator"] = to_json(r.denominator_c);
        j["h0_order"] = to_json(r.h0_c);
        j["h1_order"] = to_json(r.h1_c);
    } else {
        j["numerator"] = to_json(r.numerator_q);
        j["denominator"] = to_json(r.denominator_q);
        j["h0_order"] = to_json(r.h0_q);
        j["h1_order"] = to_json(r.h1_q);
    }
    j["certified"] = r.certificate.has_value();
    return j;
}

json to_json(const OrderSearchReport& r) {
    json rows = json::array();
    for (auto& row : r.rows)
        rows.push_back(json{{"order", row.order},
                            {"group", row.group},
                            {"epimorphisms", row.epimorphisms},
                            {"nonvanishing_witnessed", row.nonvanishing_witnessed},
                            {"vanishing_found", row.vanishing_found},
                            {"stratum", row.stratum}});
    return json{{"rows", rows},
                {"tav_order", r.tav_order},
                {"witness_group", r.witness_group},
                {"complete", r.complete}};
}

} // namespace tav
