#include "tav/homsearch.hpp"

#include <algorithm>
#include <stdexcept>

namespace tav {

namespace {

struct SearchState {
    const Presentation& p;
    const FiniteGroup& g;
    const HomConstraints& c;
    std::vector<int> assign;  // -1 unassigned
    std::vector<Hom> found;
    long nodes = 0;
    std::vector<char> allowed; // per element, subgroup restriction

    SearchState(const Presentation& p_, const FiniteGroup& g_, const HomConstraints& c_)
        : p(p_), g(g_), c(c_), assign(p_.ngens, -1) {
        allowed.assign(g.order, 1);
        if (c.within) {
            allowed.assign(g.order, 0);
            for (int x : *c.within) allowed[x] = 1;
        }
    }

    bool relator_sat(const Word& r) const {
        int x = g.identity;
        for (int l : r) {
            int v = assign[std::abs(l) - 1];
            x = g.mult(x, l > 0 ? v : g.inverse(v));
        }
        return x == g.identity;
    }

    // evaluate r assuming exactly one occurrence of an unassigned generator,
    // returning the forced value of that generator, or -2 on contradiction
    // structure: r = u x^e v = id  =>  x^e = u^-1 v^-1
    int solve_single(const Word& r, int gen, std::size_t pos) const {
        int u = g.identity, v = g.identity;
        for (std::size_t i = 0; i < pos; ++i) {
            int l = r[i];
            int val = assign[std::abs(l) - 1];
            u = g.mult(u, l > 0 ? val : g.inverse(val));
        }
        for (std::size_t i = pos + 1; i < r.size(); ++i) {
            int l = r[i];
            int val = assign[std::abs(l) - 1];
            v = g.mult(v, l > 0 ? val : g.inverse(val));
        }
        int target = g.mult(g.inverse(u), g.inverse(v)); // x^e = u^-1 v^-1
        return r[pos] > 0 ? target : g.inverse(target);
    }

    void record() {
        Hom h;
        h.images = assign;
        h.valid = true;
        std::vector<int> img = assign;
        h.surjective = subgroup_generated(g, img).is_whole();
        if (c.surjective_only && !h.surjective) return;
        found.push_back(std::move(h));
    }

    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& r : p.relators) {
                int unassigned = 0, gen = -1;
                std::size_t pos = 0;
                int occurrences_of_gen = 0;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    int gi = std::abs(r[i]) - 1;
                    if (assign[gi] < 0) {
                        if (gen == -1 || gen == gi) {
                            gen = gi;
                            pos = i;
                            ++occurrences_of_gen;
                        } else {
                            unassigned = 2;
                            break;
                        }
                    }
                }
                if (unassigned == 2) continue;
                if (gen < 0) {
                    if (!relator_sat(r)) return false;
                    continue;
                }
                if (occurrences_of_gen != 1) continue;
                int forced = solve_single(r, gen, pos);
                if (!allowed[forced]) return false;
                assign[gen] = forced;
                trail.push_back(gen);
                changed = true;
            }
        }
        return true;
    }

    void dfs() {
        if (nodes++ > c.node_cap)
            throw std::runtime_error("wirtinger_homs: search cap exceeded");
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int gi : trail) assign[gi] = -1;
            return;
        }
        int pick = -1;
        for (int i = 0; i < p.ngens; ++i)
            if (assign[i] < 0) { pick = i; break; }
        if (pick < 0) {
            record();
            for (int gi : trail) assign[gi] = -1;
            return;
        }
        for (int v = 0; v < g.order; ++v) {
            if (!allowed[v]) continue;
            assign[pick] = v;
            dfs();
            assign[pick] = -1;
        }
        for (int gi : trail) assign[gi] = -1;
    }
};

} // namespace

std::vector<Hom> wirtinger_homs(const Presentation& p, const FiniteGroup& g,
                                const HomConstraints& c) {
    SearchState st(p, g, c);
    int meridian_gen = -1;
    if (c.meridian_image) {
        auto it = p.marks.find("meridian");
        if (it == p.marks.end() || it->second.size() != 1 || it->second[0] < 0)
            throw std::invalid_argument(
                "wirtinger_homs: meridian constraint needs a single-generator meridian mark");
        meridian_gen = it->second[0] - 1;
        if (!st.allowed[*c.meridian_image])
            return {};
        st.assign[meridian_gen] = *c.meridian_image;
    }
    if (c.conjugacy_seed && !c.meridian_image) {
        // seed the first generator at class representatives and expand each
        // result through fixed conjugators, once per class element
        std::vector<Hom> all;
        for (auto& cls : conjugacy_classes(g)) {
            if (c.within) {
                bool inside = true;
                for (int x : cls)
                    if (!st.allowed[x]) inside = false;
                if (!inside) {
                    // class leaves the subgroup: fall back to plain elementwise seeding
                    for (int x : cls) {
                        if (!st.allowed[x]) continue;
                        SearchState s2(p, g, c);
                        s2.assign[0] = x;
                        s2.dfs();
                        for (auto& h : s2.found) all.push_back(h);
                    }
                    continue;
                }
            }
            int rep = cls.front();
            SearchState s2(p, g, c);
            s2.assign[0] = rep;
            s2.dfs();
            for (int target : cls) {
                int conj = -1;
                for (int x = 0; x < g.order && conj < 0; ++x)
                    if (g.conj(rep, x) == target) conj = x;
                for (auto& h : s2.found) {
                    Hom moved = h;
                    for (auto& v : moved.images) v = g.conj(v, conj);
                    if (c.within) {
                        bool ok = true;
                        for (int v : moved.images)
                            if (!st.allowed[v]) ok = false;
                        if (!ok) continue;
                    }
                    all.push_back(std::move(moved));
                }
            }
        }
        std::sort(all.begin(), all.end(),
                  [](const Hom& a, const Hom& b) { return a.images < b.images; });
        return all;
    }
    st.dfs();
    return st.found;
}

std::vector<int> hurwitz_act(const FiniteGroup& g, int letter, std::vector<int> tuple) {
    int i = std::abs(letter) - 1;
    if (i < 0 || i + 1 >= static_cast<int>(tuple.size()))
        throw std::invalid_argument("hurwitz_act: index out of range");
    int a = tuple[i], b = tuple[i + 1];
    if (letter > 0) {
        tuple[i] = g.mult(g.mult(a, b), g.inverse(a)); // a b a^-1
        tuple[i + 1] = a;
    } else {
        tuple[i] = b;
        tuple[i + 1] = g.mult(g.mult(g.inverse(b), a), b); // b^-1 a b
    }
    return tuple;
}

std::vector<int> hurwitz_act_word(const FiniteGroup& g, const BraidWord& b,
                                  std::vector<int> tuple) {
    for (int l : b.letters) tuple = hurwitz_act(g, l, std::move(tuple));
    return tuple;
}

std::vector<std::vector<int>> hurwitz_fixed_tuples(const BraidWord& b, const FiniteGroup& g,
                                                   std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < b.strands; ++i) {
        total *= g.order;
        if (total > cap)
            throw std::invalid_argument("hurwitz_fixed_tuples: |G|^n cap exceeded");
    }
    std::vector<std::vector<int>> fixed;
    std::vector<int> tuple(b.strands, 0);
    while (true) {
        if (hurwitz_act_word(g, b, tuple) == tuple) fixed.push_back(tuple);
        int i = 0;
        for (; i < b.strands; ++i) {
            if (++tuple[i] < g.order) break;
            tuple[i] = 0;
        }
        if (i == b.strands) break;
    }
    return fixed;
}

std::vector<int> braid_arc_values(const BraidWord& b, const PDCode& pd, const WirtingerData& w,
                                  const FiniteGroup& g, const std::vector<int>& top_values) {
    if (static_cast<int>(top_values.size()) != b.strands)
        throw std::invalid_argument("braid_arc_values: need one value per strand");
    // mirror the braid_to_pd traversal on values
    int n = b.strands;
    std::vector<int> cur = top_values;
    std::vector<int> arc_value(w.arc_count, -1);
    auto set_arc = [&](int edge, int value) {
        if (edge < 0) return true;
        int a = w.arc_of_edge[edge];
        if (arc_value[a] >= 0 && arc_value[a] != value) return false;
        arc_value[a] = value;
        return true;
    };
    for (int k = 0; k < n; ++k)
        if (!set_arc(pd.top_edges[k], cur[k]))
            return {};
    std::size_t ci = 0;
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        const PDCrossing& x = pd.crossings[ci++];
        int over = (l > 0) ? cur[i] : cur[i + 1];
        int under = (l > 0) ? cur[i + 1] : cur[i];
        int conj = l > 0 ? g.mult(g.mult(over, under), g.inverse(over))
                         : g.mult(g.mult(g.inverse(over), under), over);
        // under_out gets the conjugated value, over_out keeps the over value
        if (!set_arc(x.under_out, conj)) return {};
        if (!set_arc(x.over_out, over)) return {};
        if (l > 0) {
            cur[i] = conj;
            cur[i + 1] = over;
        } else {
            cur[i] = over;
            cur[i + 1] = conj;
        }
    }
    // closure: bottom values must match top values
    for (int k = 0; k < n; ++k)
        if (cur[k] != top_values[k]) return {};
    for (int a = 0; a < w.arc_count; ++a)
        if (arc_value[a] < 0) return {};
    return arc_value;
}

Hom transport_hom(const BraidWord& b, int k, const FiniteGroup& g, const PDCode& pd_b,
                  const WirtingerData& w_b, const Hom& hom, const PDCode& pd_bk,
                  const WirtingerData& w_bk) {
    // strand-top tuple of the original hom
    std::vector<int> tops(b.strands);
    for (int i = 0; i < b.strands; ++i) {
        int e = pd_b.top_edges[i];
        if (e < 0) throw std::invalid_argument("transport_hom: free strand");
        tops[i] = hom.images[w_b.arc_of_edge[e]];
    }
    BraidWord bk = braid_power(b, k);
    std::vector<int> values = braid_arc_values(bk, pd_bk, w_bk, g, tops);
    if (values.empty()) throw std::logic_error("transport_hom: propagation failed");
    Hom out;
    out.images = values;
    out.valid = verify_hom(w_bk.pres, g, values);
    out.surjective = subgroup_generated(g, values).is_whole();
    return out;
}

} // namespace tav
