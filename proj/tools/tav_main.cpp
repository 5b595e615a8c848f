// tav: census, group analysis, knot construction, homomorphism search, and
// twisted Alexander computations from the command line.
//
// Exit codes: 0 success, 2 input error, 3 vanished (tap compute), 4 cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tav/census.hpp"
#include "tav/json_io.hpp"

using namespace tav;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

json parse_json_arg(const std::string& arg) {
    // inline JSON or a path to a JSON file
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
    return json::parse(slurp(arg));
}

FiniteGroup load_group(const std::string& arg) {
    return from_spec(group_spec_from_json(parse_json_arg(arg)));
}

Presentation load_presentation(const std::string& arg) {
    if (!arg.empty() && arg[0] == '{') return presentation_from_json(json::parse(arg));
    std::string text = slurp(arg);
    if (!text.empty() && text[0] == '{') return presentation_from_json(json::parse(text));
    return parse_presentation(text);
}

BraidWord parse_braid(int strands, const std::string& letters) {
    BraidWord b;
    b.strands = strands;
    std::istringstream in(letters);
    int l;
    while (in >> l) b.letters.push_back(l);
    return b;
}

// TAV count for the orders the counting theorems cover; nullopt otherwise.
std::optional<Int> count_tav_any(std::uint64_t n, const std::string& variant) {
    if (n == 1) return Int(0);
    auto fac = factorize(n);
    int nprimes = 0;
    for (auto& [p, e] : fac) nprimes += e;
    if (is_squarefree(n)) {
        if (fac.size() == 3)
            return count_tav_pqr(fac[0].first, fac[1].first, fac[2].first);
        return count_tav_squarefree(n);
    }
    if (fac.size() == 1) return Int(0); // p-groups
    if (fac.size() == 2 && nprimes == 3) return Int(0); // p^2 q
    if (fac.size() == 2 && nprimes == 4 && (fac[0].second == 3 || fac[1].second == 3)) {
        auto [p, q] = fac[0].second == 3 ? std::pair{fac[0].first, fac[1].first}
                                         : std::pair{fac[1].first, fac[0].first};
        return count_tav_p3q(p, q);
    }
    if (fac.size() == 2 && nprimes == 4) return Int(0); // p^2 q^2 (36 by the cited result)
    if (fac.size() == 3 && nprimes == 4) {
        // p^2 q r
        std::uint64_t p = 0, q = 0, r = 0;
        for (auto& [pp, e] : fac)
            if (e == 2) p = pp;
        std::vector<std::uint64_t> rest;
        for (auto& [pp, e] : fac)
            if (e == 1) rest.push_back(pp);
        q = std::min(rest[0], rest[1]);
        r = std::max(rest[0], rest[1]);
        return count_tav_p2qr(p, q, r, variant);
    }
    return std::nullopt;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Alexander vanishing workbench"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (also TAV_THREADS)");

    // census ------------------------------------------------------------
    auto* census = app.add_subcommand("census", "group counts by order");
    std::uint64_t census_n = 0;
    bool census_check = false;
    std::string census_variant = "theorem";
    std::string census_format = "text";
    auto* ccount = census->add_subcommand("count", "number of groups of square-free order");
    ccount->add_option("N", census_n)->required();
    ccount->add_flag("--check", census_check, "cross-validate against enumeration");
    auto* ctav = census->add_subcommand("tav", "number of TAV groups of order N");
    ctav->add_option("N", census_n)->required();
    ctav->add_option("--variant", census_variant, "theorem | table (p^2qr formula reading)");
    auto* clist = census->add_subcommand("list", "isomorphism classes of square-free order");
    clist->add_option("N", census_n)->required();
    clist->add_option("--format", census_format, "text | json");

    // group ---------------------------------------------------------------
    auto* group = app.add_subcommand("group", "finite group analysis");
    std::string group_spec_arg;
    auto* ganalyze = group->add_subcommand("analyze", "order, derived, center, weight, tav, seed");
    ganalyze->add_option("spec", group_spec_arg, "group spec JSON or file")->required();

    // knot ----------------------------------------------------------------
    auto* knot = app.add_subcommand("knot", "knot and link presentations");
    int strands = 2, torus_p = 2, torus_q = 3, column = -1;
    std::string braid_letters, pd_file;
    std::vector<int> companion_torus;
    auto* kbraid = knot->add_subcommand("braid", "Wirtinger presentation of a braid closure");
    kbraid->add_option("--strands", strands)->required();
    kbraid->add_option("letters", braid_letters, "signed generator indices")->required();
    auto* ktorus = knot->add_subcommand("torus", "torus knot presentation");
    ktorus->add_option("p", torus_p)->required();
    ktorus->add_option("q", torus_q)->required();
    auto* kpd = knot->add_subcommand("pd", "Wirtinger presentation from a PD code");
    kpd->add_option("file", pd_file)->required();
    auto* kenc = knot->add_subcommand("encircle", "insert the unknotted loop alpha");
    kenc->add_option("--strands", strands)->required();
    kenc->add_option("--braid", braid_letters)->required();
    kenc->add_option("--column", column, "column edge id (default: first candidate)");
    auto* ksat = knot->add_subcommand("satellite", "satellite of a braid closure");
    ksat->add_option("--strands", strands)->required();
    ksat->add_option("--braid", braid_letters)->required();
    ksat->add_option("--column", column);
    ksat->add_option("--companion-torus", companion_torus, "p q of the companion torus knot")
        ->expected(2);

    // homs ------------------------------------------------------------------
    auto* homs = app.add_subcommand("homs", "enumerate homomorphisms");
    std::string homs_pres, homs_group;
    bool homs_epi = false;
    int homs_meridian = -1;
    homs->add_option("--pres", homs_pres)->required();
    homs->add_option("--group", homs_group)->required();
    homs->add_flag("--epi", homs_epi);
    homs->add_option("--meridian-image", homs_meridian);

    // tap ---------------------------------------------------------------------
    auto* tap = app.add_subcommand("tap", "twisted Alexander polynomials");
    std::string tap_pres, tap_group, tap_hom, tap_rep = "regular";
    std::uint64_t tap_max = 30;
    int tap_power = 1;
    auto* tcompute = tap->add_subcommand("compute", "Wada invariant of (pres, hom, rep)");
    tcompute->add_option("--pres", tap_pres)->required();
    tcompute->add_option("--group", tap_group)->required();
    tcompute->add_option("--hom", tap_hom, "JSON array of generator images")->required();
    tcompute->add_option("--rep", tap_rep, "regular | trivial | dihedral:k");
    auto* tcertify = tap->add_subcommand("certify", "constructive vanishing pair (Lemma 5.3)");
    tcertify->add_option("--group", tap_group)->required();
    int tap_element = -1;
    tcertify->add_option("--element", tap_element, "element of G' of composite order")->required();
    tcertify->add_option("--strands", strands)->required();
    tcertify->add_option("--braid", braid_letters)->required();
    tcertify->add_option("--rep", tap_rep);
    auto* torder = tap->add_subcommand("order", "TAV order search on a satellite knot");
    torder->add_option("--strands", strands)->required();
    torder->add_option("--braid", braid_letters)->required();
    torder->add_option("--column", column);
    torder->add_option("--companion-torus", companion_torus)->expected(2);
    torder->add_option("--max", tap_max);
    auto* tdiv = tap->add_subcommand("divcheck", "Delta divides Delta of the braid power");
    tdiv->add_option("--strands", strands)->required();
    tdiv->add_option("--braid", braid_letters)->required();
    tdiv->add_option("--power", tap_power)->required();
    tdiv->add_option("--group", tap_group)->required();

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) setenv("TAV_THREADS", std::to_string(threads).c_str(), 1);

    try {
        if (ccount->parsed()) {
            Int c = holder_count(census_n);
            std::cout << c << "\n";
            if (census_check) {
                auto e = enumerate_squarefree(census_n);
                bool ok = Int(e.size()) == c;
                std::cout << "check " << (ok ? "OK" : "MISMATCH") << " (enumerated "
                          << e.size() << ")\n";
                if (!ok) return 1;
            }
            return 0;
        }
        if (ctav->parsed()) {
            auto c = count_tav_any(census_n, census_variant);
            if (!c) {
                std::cerr << "order " << census_n
                          << " is outside the counting theorems (non-square-free, > 4 primes)\n";
                return 2;
            }
            std::cout << *c << "\n";
            return 0;
        }
        if (clist->parsed()) {
            auto e = enumerate_squarefree(census_n);
            if (census_format == "json") {
                json rows = json::array();
                for (auto& g : e)
                    rows.push_back(json{{"m", g.m},
                                        {"H", g.gen_tuple},
                                        {"derived", g.derived_order},
                                        {"tav", g.structurally_tav()}});
                std::cout << rows.dump(2) << "\n";
            } else {
                for (auto& g : e) {
                    std::cout << "m=" << g.m << " H=(";
                    for (std::size_t i = 0; i < g.gen_tuple.size(); ++i)
                        std::cout << (i ? "," : "") << g.gen_tuple[i];
                    std::cout << ") derived=" << g.derived_order
                              << (g.structurally_tav() ? " TAV" : "") << "\n";
                }
            }
            return 0;
        }
        if (ganalyze->parsed()) {
            FiniteGroup g = load_group(group_spec_arg);
            Subgroup d = derived_subgroup(g);
            Subgroup z = center(g);
            auto witness = weight_one_witness(g);
            std::cout << "group: " << g.name << "\n";
            std::cout << "order: " << g.order << "\n";
            std::cout << "derived subgroup order: " << d.size() << "\n";
            std::cout << "center order: " << z.size() << "\n";
            std::cout << "weight one: " << (witness ? "yes" : "no");
            if (witness) std::cout << " (witness element " << *witness << ")";
            std::cout << "\n";
            bool tav = is_tav(g);
            std::cout << "TAV: " << (tav ? "yes" : "no") << "\n";
            if (witness) std::cout << "seed: " << (is_seed(g) ? "yes" : "no") << "\n";
            return 0;
        }
        if (kbraid->parsed()) {
            BraidWord b = parse_braid(strands, braid_letters);
            auto w = pd_wirtinger(braid_to_pd(b));
            std::cout << format_presentation(w.pres);
            return 0;
        }
        if (ktorus->parsed()) {
            std::cout << format_presentation(torus_presentation(torus_p, torus_q));
            return 0;
        }
        if (kpd->parsed()) {
            PDCode pd = pd_from_json(parse_json_arg(pd_file));
            std::cout << format_presentation(pd_wirtinger(pd).pres);
            return 0;
        }
        if (kenc->parsed()) {
            BraidWord b = parse_braid(strands, braid_letters);
            PDCode pd = braid_to_pd(b);
            auto cands = encircle_candidates(pd);
            if (cands.empty()) throw std::invalid_argument("no encircle candidates");
            int col = column >= 0 ? column : cands.front();
            EncircleResult enc = encircle(pd, col, pd.closure_edges[b.strands - 1]);
            std::cout << to_json(enc.pd).dump(2) << "\n";
            return 0;
        }
        if (ksat->parsed()) {
            BraidWord b = parse_braid(strands, braid_letters);
            if (companion_torus.size() != 2)
                throw std::invalid_argument("--companion-torus p q required");
            Presentation comp = torus_presentation(companion_torus[0], companion_torus[1]);
            PDCode pd = braid_to_pd(b);
            auto cands = encircle_candidates(pd);
            int col = column >= 0 ? column : cands.front();
            SatelliteBuild sb = satellite_from_braid(b, col, comp);
            std::cout << format_presentation(sb.glued.pres);
            return 0;
        }
        if (homs->parsed()) {
            Presentation p = load_presentation(homs_pres);
            FiniteGroup g = load_group(homs_group);
            HomConstraints hc;
            hc.surjective_only = homs_epi;
            if (homs_meridian >= 0) hc.meridian_image = homs_meridian;
            auto found = wirtinger_homs(p, g, hc);
            json out = json::array();
            for (auto& h : found) out.push_back(h.images);
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (tcompute->parsed()) {
            Presentation p = load_presentation(tap_pres);
            FiniteGroup g = load_group(tap_group);
            std::vector<int> images = json::parse(tap_hom).get<std::vector<int>>();
            Representation rep;
            if (tap_rep == "regular") rep = regular_rep(g);
            else if (tap_rep == "trivial") rep = trivial_rep(g);
            else if (tap_rep.rfind("dihedral:", 0) == 0) {
                int n = g.order / 2;
                int k = std::stoi(tap_rep.substr(9));
                auto irr = dihedral_irreps(n);
                rep = irr.at(2 + (k - 1)); // the 1-dims come first
            } else
                throw std::invalid_argument("unknown representation: " + tap_rep);
            if (p.deficiency() != 1) {
                auto t = tietze_simplify(p);
                std::vector<int> im2(t.pres.ngens);
                for (int i = 0; i < t.pres.ngens; ++i) im2[i] = images[t.kept[i]];
                p = t.pres;
                images = im2;
            }
            TwistSetup ts = make_twist(p, rep, images);
            TwistedResult r = wada_invariant(ts);
            std::cout << to_json(r).dump(2) << "\n";
            return r.vanished ? 3 : 0;
        }
        if (tcertify->parsed()) {
            FiniteGroup g = load_group(tap_group);
            BraidWord b = parse_braid(strands, braid_letters);
            Representation rep = tap_rep == "regular" ? regular_rep(g) : trivial_rep(g);
            WirtingerData w = pd_wirtinger(braid_to_pd(b));
            HomConstraints hc;
            hc.surjective_only = true;
            auto epis = wirtinger_homs(w.pres, g, hc);
            if (epis.empty()) throw std::invalid_argument("no epimorphism onto the group");
            VanishingPair pair =
                construct_vanishing_pair_cyclic(g, rep, tap_element, b, epis.front().images);
            std::cout << "certificate verified: "
                      << verify_certificate(pair.twist, pair.certificate) << "\n";
            std::cout << "satellite generators: " << pair.twist.pres.ngens << "\n";
            return 0;
        }
        if (torder->parsed()) {
            BraidWord b = parse_braid(strands, braid_letters);
            if (companion_torus.size() != 2)
                throw std::invalid_argument("--companion-torus p q required");
            Presentation comp = torus_presentation(companion_torus[0], companion_torus[1]);
            PDCode pd = braid_to_pd(b);
            auto cands = encircle_candidates(pd);
            int col = column >= 0 ? column : cands.front();
            SatelliteBuild sb = satellite_from_braid(b, col, comp);
            OrderSearchReport rep = tav_order_search(sb, tap_max);
            std::cout << to_json(rep).dump(2) << "\n";
            return 0;
        }
        if (tdiv->parsed()) {
            FiniteGroup g = load_group(tap_group);
            BraidWord b = parse_braid(strands, braid_letters);
            WirtingerData w = pd_wirtinger(braid_to_pd(b));
            HomConstraints hc;
            hc.surjective_only = true;
            auto epis = wirtinger_homs(w.pres, g, hc);
            if (epis.empty()) throw std::invalid_argument("no epimorphism onto the group");
            bool ok = braid_power_divisibility_check(b, tap_power, g, epis.front());
            std::cout << (ok ? "divides" : "DOES NOT divide") << "\n";
            return 0;
        }
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
