#include "tav/knots.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tav {

BraidWord braid_power(const BraidWord& b, int k) {
    if (k < 1) throw std::invalid_argument("braid_power: k >= 1 required");
    BraidWord r;
    r.strands = b.strands;
    for (int i = 0; i < k; ++i) r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

std::vector<int> braid_permutation(const BraidWord& b) {
    std::vector<int> pos(b.strands);
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        if (i < 0 || i + 1 >= b.strands) throw std::invalid_argument("braid letter out of range");
        std::swap(pos[i], pos[i + 1]);
    }
    // pos[p] = strand that ends at position p; we want top position -> bottom position
    std::vector<int> perm(b.strands);
    for (int p = 0; p < b.strands; ++p) perm[pos[p]] = p;
    return perm;
}

void PDCode::validate() const {
    std::vector<int> in_count(nedges, 0), out_count(nedges, 0);
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        const auto& x = crossings[c];
        for (int e : {x.under_in, x.under_out, x.over_in, x.over_out})
            if (e < 0 || e >= nedges)
                throw std::invalid_argument("PD: crossing " + std::to_string(c) +
                                            " references edge " + std::to_string(e) +
                                            " out of range");
        if (x.sign != 1 && x.sign != -1)
            throw std::invalid_argument("PD: crossing " + std::to_string(c) + " has invalid sign");
        ++in_count[x.under_in];
        ++in_count[x.over_in];
        ++out_count[x.under_out];
        ++out_count[x.over_out];
    }
    for (int e = 0; e < nedges; ++e) {
        if (in_count[e] != 1)
            throw std::invalid_argument("PD: edge " + std::to_string(e) + " has " +
                                        std::to_string(in_count[e]) + " incoming slots (want 1)");
        if (out_count[e] != 1)
            throw std::invalid_argument("PD: edge " + std::to_string(e) + " has " +
                                        std::to_string(out_count[e]) + " outgoing slots (want 1)");
    }
}

std::vector<std::vector<int>> PDCode::components() const {
    // successor of an edge: the out-edge of the strand consuming it
    std::vector<int> succ(nedges, -1);
    for (auto& x : crossings) {
        succ[x.under_in] = x.under_out;
        succ[x.over_in] = x.over_out;
    }
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(nedges, 0);
    for (int e = 0; e < nedges; ++e) {
        if (seen[e]) continue;
        std::vector<int> walk;
        int x = e;
        while (!seen[x]) {
            seen[x] = 1;
            walk.push_back(x);
            x = succ[x];
            if (x < 0) throw std::logic_error("PD: open strand");
        }
        comps.push_back(std::move(walk));
    }
    return comps;
}

PDCode braid_to_pd(const BraidWord& b) {
    PDCode pd;
    int n = b.strands;
    std::vector<int> cur(n), top(n);
    int next_edge = 0;
    for (int i = 0; i < n; ++i) cur[i] = top[i] = next_edge++;
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        if (i < 0 || i + 1 >= n) throw std::invalid_argument("braid letter out of range");
        PDCrossing x;
        int fresh_over = next_edge++;
        int fresh_under = next_edge++;
        if (l > 0) {
            // strand at position i passes over
            x.over_in = cur[i];
            x.over_out = fresh_over;
            x.under_in = cur[i + 1];
            x.under_out = fresh_under;
            x.sign = +1;
            cur[i] = fresh_under;
            cur[i + 1] = fresh_over;
        } else {
            x.under_in = cur[i];
            x.under_out = fresh_under;
            x.over_in = cur[i + 1];
            x.over_out = fresh_over;
            x.sign = -1;
            cur[i] = fresh_over;
            cur[i + 1] = fresh_under;
        }
        pd.crossings.push_back(x);
    }
    // closure: bottom edge at position k is the top edge at position k
    std::vector<int> repr(next_edge);
    std::iota(repr.begin(), repr.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (repr[x] != x) x = repr[x] = repr[repr[x]];
        return x;
    };
    for (int k = 0; k < n; ++k) repr[find(cur[k])] = find(top[k]);
    // free loops: strands untouched by any crossing
    std::vector<char> touched(next_edge, 0);
    for (auto& x : pd.crossings)
        for (int e : {x.under_in, x.under_out, x.over_in, x.over_out}) touched[e] = 1;
    // compress labels over touched classes
    std::vector<int> label(next_edge, -1);
    int ne = 0;
    for (int e = 0; e < next_edge; ++e) {
        int r = find(e);
        if (!touched[e]) continue;
        if (label[r] < 0) label[r] = ne++;
    }
    pd.nedges = ne;
    for (auto& x : pd.crossings) {
        x.under_in = label[find(x.under_in)];
        x.under_out = label[find(x.under_out)];
        x.over_in = label[find(x.over_in)];
        x.over_out = label[find(x.over_out)];
    }
    pd.closure_edges.assign(n, -1);
    pd.top_edges.assign(n, -1);
    for (int k = 0; k < n; ++k) {
        int r = find(top[k]);
        if (label[r] < 0) {
            ++pd.free_loops; // strand without crossings
            continue;
        }
        pd.closure_edges[k] = label[r];
        pd.top_edges[k] = label[r];
    }
    // braid columns run down, closure returns run up
    for (int e = 0; e < ne; ++e) pd.updown[e] = -1;
    for (int k = 0; k < n; ++k)
        if (pd.closure_edges[k] >= 0) pd.updown[pd.closure_edges[k]] = +1;
    pd.validate();
    return pd;
}

int linking_sign_sum(const PDCode& pd, int comp_a, int comp_b) {
    auto comps = pd.components();
    std::vector<int> comp_of(pd.nedges, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int e : comps[c]) comp_of[e] = static_cast<int>(c);
    int sum = 0;
    for (auto& x : pd.crossings) {
        int cu = comp_of[x.under_in], co = comp_of[x.over_in];
        if ((cu == comp_a && co == comp_b) || (cu == comp_b && co == comp_a)) sum += x.sign;
    }
    return sum;
}

WirtingerData pd_wirtinger(const PDCode& pd) {
    pd.validate();
    WirtingerData w;
    // arcs: edge classes joined across overpasses
    std::vector<int> repr(pd.nedges);
    std::iota(repr.begin(), repr.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (repr[x] != x) x = repr[x] = repr[repr[x]];
        return x;
    };
    for (auto& x : pd.crossings) repr[find(x.over_in)] = find(x.over_out);
    w.arc_of_edge.assign(pd.nedges, -1);
    int na = 0;
    std::vector<int> label(pd.nedges, -1);
    for (int e = 0; e < pd.nedges; ++e) {
        int r = find(e);
        if (label[r] < 0) label[r] = na++;
        w.arc_of_edge[e] = label[r];
    }
    w.arc_count = na;
    w.comps = pd.components();
    w.comp_of_edge.assign(pd.nedges, -1);
    for (std::size_t c = 0; c < w.comps.size(); ++c)
        for (int e : w.comps[c]) w.comp_of_edge[e] = static_cast<int>(c);

    Presentation p;
    p.ngens = na + pd.free_loops;
    for (int a = 0; a < p.ngens; ++a) p.names.push_back("x" + std::to_string(a + 1));
    for (auto& x : pd.crossings) {
        int ui = w.arc_of_edge[x.under_in], uo = w.arc_of_edge[x.under_out],
            ov = w.arc_of_edge[x.over_in];
        // sign +1: x_uo = ov x_ui ov^-1 ; sign -1: x_uo = ov^-1 x_ui ov
        Word r{-(uo + 1)};
        int s = x.sign;
        r.push_back(s > 0 ? ov + 1 : -(ov + 1));
        r.push_back(ui + 1);
        r.push_back(s > 0 ? -(ov + 1) : ov + 1);
        p.relators.push_back(free_reduce(r));
    }
    for (std::size_t c = 0; c < w.comps.size(); ++c) {
        std::string suffix = c == 0 ? "" : std::to_string(c);
        p.marks["meridian" + suffix] = Word{w.arc_of_edge[w.comps[c].front()] + 1};
    }
    w.pres = std::move(p);
    return w;
}

Word longitude_word(const PDCode& pd, const WirtingerData& w, int component) {
    if (component < 0 || component >= static_cast<int>(w.comps.size()))
        throw std::invalid_argument("longitude_word: no such component");
    // locate, per edge, the crossing where it is consumed as under_in
    std::map<int, const PDCrossing*> under_at;
    for (auto& x : pd.crossings) under_at[x.under_in] = &x;
    Word lambda;
    int writhe = 0;
    for (int e : w.comps[component]) {
        auto it = under_at.find(e);
        if (it == under_at.end()) continue;
        const PDCrossing& x = *it->second;
        int ov = w.arc_of_edge[x.over_in];
        lambda.push_back(x.sign > 0 ? ov + 1 : -(ov + 1));
        if (w.comp_of_edge[x.over_in] == component) writhe += x.sign;
    }
    int mu = w.arc_of_edge[w.comps[component].front()];
    lambda = word_mul(lambda, word_pow(Word{mu + 1}, -writhe));
    return free_reduce(lambda);
}

EncircleResult encircle(const PDCode& pd, int edge_i, int edge_j) {
    pd.validate();
    if (edge_i == edge_j) throw std::invalid_argument("encircle: edges must differ");
    auto oi = pd.updown.find(edge_i), oj = pd.updown.find(edge_j);
    if (oi == pd.updown.end() || oj == pd.updown.end())
        throw std::invalid_argument("encircle: edges lack orientation tags");
    int si = oi->second, sj = oj->second;
    if (si == sj)
        throw std::invalid_argument(
            "nonzero linking: encircled edges must have opposite orientation");
    EncircleResult res;
    PDCode& out = res.pd;
    out = pd;
    int i_mid = out.nedges++, i_head = out.nedges++;
    int j_mid = out.nedges++, j_head = out.nedges++;
    int e1 = out.nedges++, e2 = out.nedges++, e3 = out.nedges++, e4 = out.nedges++;
    res.alpha_edge = e1;
    res.split_i_mid = i_mid;
    res.split_i_head = i_head;
    res.split_j_mid = j_mid;
    res.split_j_head = j_head;
    // reroute the heads of the split edges
    auto reroute_head = [&](int old_edge, int new_edge) {
        for (auto& x : out.crossings) {
            if (x.under_in == old_edge) { x.under_in = new_edge; return; }
            if (x.over_in == old_edge) { x.over_in = new_edge; return; }
        }
        throw std::logic_error("encircle: head crossing not found");
    };
    reroute_head(edge_i, i_head);
    reroute_head(edge_j, j_head);
    // four ring crossings: alpha over i, alpha over j, alpha under j, alpha under i
    PDCrossing c1, c2, c3, c4;
    c1.over_in = e1; c1.over_out = e2; c1.under_in = i_mid; c1.under_out = i_head; c1.sign = si;
    c2.over_in = e2; c2.over_out = e3; c2.under_in = edge_j; c2.under_out = j_mid; c2.sign = sj;
    c3.over_in = j_mid; c3.over_out = j_head; c3.under_in = e3; c3.under_out = e4; c3.sign = sj;
    c4.over_in = edge_i; c4.over_out = i_mid; c4.under_in = e4; c4.under_out = e1; c4.sign = si;
    out.crossings.push_back(c1);
    out.crossings.push_back(c2);
    out.crossings.push_back(c3);
    out.crossings.push_back(c4);
    out.updown[i_mid] = out.updown[i_head] = si;
    out.updown[j_mid] = out.updown[j_head] = sj;
    out.validate();
    // verify lk(K, alpha) = 0 by its signed crossing count
    auto comps = out.components();
    std::vector<int> comp_of(out.nedges, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int e : comps[c]) comp_of[e] = static_cast<int>(c);
    int alpha_comp = comp_of[e1];
    int total = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (static_cast<int>(c) == alpha_comp) continue;
        total += linking_sign_sum(out, static_cast<int>(c), alpha_comp);
    }
    if (total != 0) throw std::logic_error("encircle: linking number check failed");
    return res;
}

Presentation link_presentation(const PDCode& pd) {
    return pd_wirtinger(pd).pres;
}

Presentation torus_presentation(int p, int q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus link, not knot: need coprime p, q >= 2");
    Presentation pr;
    pr.ngens = 2;
    pr.names = {"u", "v"};
    Word rel = word_mul(word_pow(Word{1}, p), word_pow(Word{2}, -q));
    pr.relators.push_back(rel);
    // meridian u^s v^-r with s q - r p = 1, smallest nonnegative s
    std::int64_t s0, r0;
    ext_gcd(q, p, s0, r0);
    // s0*q + r0*p = 1 -> use r = -r0
    std::int64_t s = s0, r = -r0;
    while (s < 0) { s += p; r += q; }
    while (s >= p) { s -= p; r -= q; }
    Word mu = word_mul(word_pow(Word{1}, static_cast<int>(s)), word_pow(Word{2}, -static_cast<int>(r)));
    Word lambda = word_mul(word_pow(Word{1}, p), word_pow(word_inv(mu), p * q));
    pr.marks["meridian"] = mu;
    pr.marks["longitude"] = lambda;
    auto phi = knot_phi(pr);
    if (phi_of_word(phi, mu) != 1 || phi_of_word(phi, lambda) != 0)
        throw std::logic_error("torus_presentation: mark postconditions failed");
    return pr;
}

GluedPresentation satellite_glue(const Presentation& link, const Presentation& companion) {
    for (const char* m : {"alpha_meridian", "alpha_longitude"})
        if (!link.marks.count(m)) throw std::invalid_argument(std::string("missing mark: ") + m);
    for (const char* m : {"meridian", "longitude"})
        if (!companion.marks.count(m))
            throw std::invalid_argument(std::string("missing companion mark: ") + m);
    GluedPresentation g;
    Presentation& out = g.pres;
    out = link;
    g.j_offset = link.ngens;
    g.j_ngens = companion.ngens;
    out.ngens += companion.ngens;
    for (auto& n : companion.names) {
        std::string nm = n;
        while (out.gen_index(nm) >= 0) nm += "'";
        out.names.push_back(nm);
    }
    auto shift = [&](const Word& w) {
        Word r;
        for (int l : w) r.push_back(l > 0 ? l + g.j_offset : l - g.j_offset);
        return r;
    };
    for (auto& r : companion.relators) out.relators.push_back(shift(r));
    Word mu_j = shift(companion.marks.at("meridian"));
    Word lam_j = shift(companion.marks.at("longitude"));
    const Word& mu_a = link.marks.at("alpha_meridian");
    const Word& lam_a = link.marks.at("alpha_longitude");
    out.relators.push_back(free_reduce(word_mul(mu_j, word_inv(lam_a))));
    out.relators.push_back(free_reduce(word_mul(lam_j, word_inv(mu_a))));
    out.marks.erase("alpha_meridian");
    out.marks.erase("alpha_longitude");
    // the satellite is a knot: H1 = Z with the K meridian mapping to 1
    auto phi = knot_phi(out);
    if (phi_of_word(phi, out.marks.at("meridian")) != 1)
        throw std::logic_error("satellite_glue: meridian not primitive in H1");
    for (int j = 0; j < companion.ngens; ++j)
        if (phi[g.j_offset + j] != 0)
            throw std::logic_error("satellite_glue: companion generators not null-homologous");
    return g;
}

std::vector<int> encircle_candidates(const PDCode& pd) {
    // column edges (they run down); the partner is the innermost closure edge
    std::vector<int> out;
    for (int e = 0; e < pd.nedges; ++e) {
        auto it = pd.updown.find(e);
        if (it != pd.updown.end() && it->second == -1) out.push_back(e);
    }
    return out;
}

SatelliteBuild satellite_from_braid(const BraidWord& base, int column_edge,
                                    const Presentation& companion) {
    SatelliteBuild sb;
    sb.base_pd = braid_to_pd(base);
    sb.base_w = pd_wirtinger(sb.base_pd);
    int n = base.strands;
    int closure = sb.base_pd.closure_edges[n - 1];
    if (closure < 0) throw std::invalid_argument("satellite_from_braid: no closure edge");
    EncircleResult enc = encircle(sb.base_pd, column_edge, closure);
    sb.link_pd = enc.pd;
    sb.link_w = pd_wirtinger(sb.link_pd);
    // alpha marks
    int alpha_comp = sb.link_w.comp_of_edge[enc.alpha_edge];
    Word mu_a{sb.link_w.arc_of_edge[enc.alpha_edge] + 1};
    Word lam_a = longitude_word(sb.link_pd, sb.link_w, alpha_comp);
    Presentation link = sb.link_w.pres;
    link.marks["alpha_meridian"] = mu_a;
    link.marks["alpha_longitude"] = lam_a;
    // normalize the knot marks: component of the base knot is the one containing edge 0
    link.marks["meridian"] = Word{sb.link_w.arc_of_edge[0] + 1};
    sb.j_pres = companion;
    sb.glued = satellite_glue(link, companion);
    sb.j_phi = knot_phi(companion);
    // arc correspondence for psi: new edges inherit the split bases
    std::vector<int> edge_to_base_edge(sb.link_pd.nedges, -1);
    for (int e = 0; e < sb.base_pd.nedges; ++e) edge_to_base_edge[e] = e;
    edge_to_base_edge[enc.split_i_mid] = column_edge;
    edge_to_base_edge[enc.split_i_head] = column_edge;
    edge_to_base_edge[enc.split_j_mid] = closure;
    edge_to_base_edge[enc.split_j_head] = closure;
    sb.link_arc_to_base_arc.assign(sb.link_w.arc_count, -1);
    for (int e = 0; e < sb.link_pd.nedges; ++e) {
        int be = edge_to_base_edge[e];
        if (be < 0) continue; // alpha edges
        sb.link_arc_to_base_arc[sb.link_w.arc_of_edge[e]] = sb.base_w.arc_of_edge[be];
    }
    // [alpha] in G(K): lambda_alpha with arcs mapped into the base diagram
    Word lam_base;
    for (int l : lam_a) {
        int arc = std::abs(l) - 1;
        int base_arc = sb.link_arc_to_base_arc[arc];
        if (base_arc < 0) throw std::logic_error("alpha longitude passes through alpha arcs");
        lam_base.push_back(l > 0 ? base_arc + 1 : -(base_arc + 1));
    }
    sb.alpha_in_base = free_reduce(lam_base);
    return sb;
}

std::vector<Word> collapse_pattern(const SatelliteBuild& sb) {
    std::vector<Word> psi(sb.glued.pres.ngens);
    for (int a = 0; a < sb.link_w.arc_count; ++a) {
        int base_arc = sb.link_arc_to_base_arc[a];
        if (base_arc >= 0) psi[a] = Word{base_arc + 1};
        else psi[a] = Word{}; // alpha meridians die in G(K)
    }
    for (int j = 0; j < sb.glued.j_ngens; ++j)
        psi[sb.glued.j_offset + j] = word_pow(sb.alpha_in_base, static_cast<int>(sb.j_phi[j]));
    return psi;
}

} // namespace tav
