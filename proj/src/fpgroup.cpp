#include "tav/fpgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tav {

Word free_reduce(Word w) {
    Word out;
    for (int l : w) {
        if (l == 0) throw std::invalid_argument("word letter 0");
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

Word word_mul(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return free_reduce(w);
}

Word word_inv(const Word& a) {
    Word w(a.rbegin(), a.rend());
    for (int& l : w) l = -l;
    return w;
}

Word word_pow(const Word& a, int e) {
    Word base = e < 0 ? word_inv(a) : a;
    int n = e < 0 ? -e : e;
    Word r;
    for (int i = 0; i < n; ++i) r = word_mul(r, base);
    return r;
}

Word cyclic_reduce(const Word& w0) {
    Word w = free_reduce(w0);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

Word cyclic_canonical(const Word& w0) {
    Word w = cyclic_reduce(w0);
    if (w.empty()) return w;
    auto least_rotation = [](const Word& v) {
        Word best = v;
        Word cur = v;
        for (std::size_t i = 1; i < v.size(); ++i) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        return best;
    };
    Word a = least_rotation(w);
    Word b = least_rotation(cyclic_reduce(word_inv(w)));
    return std::min(a, b);
}

long exponent_sum(const Word& w, int gen) {
    long s = 0;
    for (int l : w) {
        if (l == gen + 1) ++s;
        else if (l == -(gen + 1)) --s;
    }
    return s;
}

void GroupRingElem::add(const Word& w, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) terms.emplace(w, c);
    else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r = a;
    for (auto& [w, c] : b.terms) r.add(w, c);
    return r;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r = a;
    for (auto& [w, c] : b.terms) r.add(w, -c);
    return r;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r;
    for (auto& [wa, ca] : a.terms)
        for (auto& [wb, cb] : b.terms) r.add(word_mul(wa, wb), ca * cb);
    return r;
}

GroupRingElem GroupRingElem::of(const Word& w, Int c) {
    GroupRingElem r;
    r.add(free_reduce(w), c);
    return r;
}

GroupRingElem fox_derivative(const Word& w, int gen) {
    GroupRingElem r;
    Word prefix;
    for (int l : w) {
        if (l == gen + 1) {
            r.add(prefix, 1);
        } else if (l == -(gen + 1)) {
            Word p = prefix;
            p.push_back(l);
            r.add(free_reduce(p), -1);
        }
        prefix.push_back(l);
    }
    return r;
}

int Presentation::gen_index(const std::string& name) const {
    for (int i = 0; i < ngens; ++i)
        if (names[i] == name) return i;
    return -1;
}

std::string Presentation::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int l = w[i];
        int g = std::abs(l) - 1;
        if (i) s += " ";
        const std::string& nm = names[g];
        if (l > 0) s += nm;
        else if (nm.size() == 1 && std::islower(static_cast<unsigned char>(nm[0])))
            s += static_cast<char>(std::toupper(static_cast<unsigned char>(nm[0])));
        else s += nm + "^-1";
    }
    return s;
}

Word Presentation::parse_word(const std::string& s) const {
    Word w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        int power = 1;
        auto caret = tok.find('^');
        std::string base = tok;
        if (caret != std::string::npos) {
            base = tok.substr(0, caret);
            power = std::stoi(tok.substr(caret + 1));
        }
        int g = gen_index(base);
        if (g < 0 && base.size() == 1 && std::isupper(static_cast<unsigned char>(base[0]))) {
            std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(base[0]))));
            g = gen_index(lower);
            if (g >= 0) power = -power;
        }
        if (g < 0) throw std::invalid_argument("parse_word: unknown generator '" + base + "'");
        Word letter{power >= 0 ? g + 1 : -(g + 1)};
        w = word_mul(w, word_pow(letter, std::abs(power)));
    }
    return w;
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::string, std::string>> deferred_marks;
    std::vector<std::string> deferred_rels;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        if (key == "gens") {
            std::istringstream vs(val);
            std::string nm;
            while (vs >> nm) p.names.push_back(nm);
            p.ngens = static_cast<int>(p.names.size());
        } else if (key == "rel") {
            deferred_rels.push_back(val);
        } else if (key.rfind("mark", 0) == 0) {
            deferred_marks.emplace_back(key.substr(4), val);
        }
    }
    for (auto& r : deferred_rels) p.relators.push_back(free_reduce(p.parse_word(r)));
    for (auto& [name, val] : deferred_marks) p.marks[name] = free_reduce(p.parse_word(val));
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::string s = "gens:";
    for (auto& n : p.names) s += " " + n;
    s += "\n";
    for (auto& r : p.relators) s += "rel: " + p.word_str(r) + "\n";
    for (auto& [name, w] : p.marks) s += "mark " + name + ": " + p.word_str(w) + "\n";
    return s;
}

Abelianization abelianization(const Presentation& p) {
    IntMat m(std::max<std::size_t>(p.relators.size(), 1), p.ngens);
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (int j = 0; j < p.ngens; ++j) m.at(i, j) = exponent_sum(p.relators[i], j);
    auto snf = smith_normal_form(m);
    Abelianization ab;
    std::size_t k = std::min(m.rows, m.cols);
    std::vector<int> free_cols;
    for (std::size_t i = 0; i < k; ++i) {
        Int d = snf.d.at(i, i);
        if (d == 0) free_cols.push_back(static_cast<int>(i));
        else if (d > 1) ab.torsion.push_back(d);
    }
    for (std::size_t i = k; i < m.cols; ++i) free_cols.push_back(static_cast<int>(i));
    ab.free_rank = static_cast<int>(free_cols.size());
    if (ab.free_rank == 1) {
        int c = free_cols[0];
        ab.phi.resize(p.ngens);
        for (int j = 0; j < p.ngens; ++j) ab.phi[j] = snf.v.at(j, c).convert_to<long>();
    }
    return ab;
}

long phi_of_word(const std::vector<long>& phi, const Word& w) {
    long s = 0;
    for (int l : w) s += (l > 0 ? phi[l - 1] : -phi[-l - 1]);
    return s;
}

std::vector<long> knot_phi(const Presentation& p) {
    Abelianization ab = abelianization(p);
    if (ab.free_rank != 1 || !ab.torsion.empty())
        throw std::invalid_argument("not a knot-like presentation: H1 is not Z");
    std::vector<long> phi = ab.phi;
    long ref = 0;
    auto it = p.marks.find("meridian");
    if (it != p.marks.end()) ref = phi_of_word(phi, it->second);
    if (ref == 0)
        for (long v : phi)
            if (v != 0) { ref = v; break; }
    if (ref < 0)
        for (long& v : phi) v = -v;
    return phi;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
    Word out;
    for (int l : w) {
        int g = std::abs(l) - 1;
        const Word& img = images[g];
        if (l > 0) out.insert(out.end(), img.begin(), img.end());
        else {
            Word inv = word_inv(img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(out);
}

TietzeResult tietze_simplify(const Presentation& p, int max_steps) {
    Presentation cur = p;
    for (auto& r : cur.relators) r = cyclic_reduce(r);
    // fwd[i]: word for original generator i in current generators
    std::vector<Word> fwd(p.ngens);
    std::vector<int> kept(p.ngens);
    for (int i = 0; i < p.ngens; ++i) {
        fwd[i] = Word{i + 1};
        kept[i] = i;
    }

    auto drop_trivial_and_duplicates = [&]() {
        std::vector<Word> keep;
        std::vector<Word> canon_seen;
        for (auto& r : cur.relators) {
            Word rr = cyclic_reduce(r);
            if (rr.empty()) continue;
            Word canon = cyclic_canonical(rr);
            bool dup = false;
            for (auto& c : canon_seen)
                if (c == canon) { dup = true; break; }
            if (dup) continue;
            canon_seen.push_back(canon);
            keep.push_back(rr);
        }
        cur.relators = std::move(keep);
    };

    drop_trivial_and_duplicates();
    int steps = 0;
    while (steps++ < max_steps) {
        // find the cheapest elimination: a relator with a generator occurring once
        int best_rel = -1, best_gen = -1;
        long best_cost = -1;
        for (std::size_t ri = 0; ri < cur.relators.size(); ++ri) {
            const Word& r = cur.relators[ri];
            for (int g = 0; g < cur.ngens; ++g) {
                int occ = 0;
                for (int l : r)
                    if (std::abs(l) == g + 1) ++occ;
                if (occ != 1) continue;
                long uses = 0;
                for (std::size_t rj = 0; rj < cur.relators.size(); ++rj) {
                    if (rj == ri) continue;
                    for (int l : cur.relators[rj])
                        if (std::abs(l) == g + 1) ++uses;
                }
                long cost = static_cast<long>(r.size() - 1) * (uses + 1);
                if (best_rel < 0 || cost < best_cost) {
                    best_rel = static_cast<int>(ri);
                    best_gen = g;
                    best_cost = cost;
                }
            }
        }
        if (best_rel < 0) break;
        // rotate the relator so it starts with the single +-g letter
        Word r = cur.relators[best_rel];
        std::size_t pos = 0;
        while (std::abs(r[pos]) != best_gen + 1) ++pos;
        std::rotate(r.begin(), r.begin() + pos, r.end());
        // r = g^{eps} w  =>  g = w^{-1} if eps=+1, g = w if eps=-1
        Word tail(r.begin() + 1, r.end());
        Word repl = r[0] > 0 ? word_inv(tail) : tail;
        // build substitution map on current generators
        std::vector<Word> sub(cur.ngens);
        for (int i = 0; i < cur.ngens; ++i) sub[i] = Word{i + 1};
        sub[best_gen] = repl;
        // new generator numbering: drop best_gen
        std::vector<Word> renumber(cur.ngens);
        {
            int nj = 0;
            for (int i = 0; i < cur.ngens; ++i) {
                if (i == best_gen) { renumber[i] = {}; continue; }
                renumber[i] = Word{++nj};
            }
        }
        auto rewrite = [&](const Word& w) { return substitute(substitute(w, sub), renumber); };
        Presentation next;
        next.ngens = cur.ngens - 1;
        for (int i = 0; i < cur.ngens; ++i)
            if (i != best_gen) next.names.push_back(cur.names[i]);
        for (std::size_t ri = 0; ri < cur.relators.size(); ++ri) {
            if (static_cast<int>(ri) == best_rel) continue;
            next.relators.push_back(cyclic_reduce(rewrite(cur.relators[ri])));
        }
        for (auto& [name, w] : cur.marks) next.marks[name] = rewrite(w);
        for (auto& w : fwd) w = rewrite(w);
        {
            std::vector<int> nk;
            for (std::size_t i = 0; i < kept.size(); ++i) nk.push_back(kept[i]);
            // kept tracks per-current-generator original index
            std::vector<int> newkept;
            for (int i = 0; i < cur.ngens; ++i)
                if (i != best_gen) newkept.push_back(kept[i]);
            kept = std::move(newkept);
        }
        cur = std::move(next);
        drop_trivial_and_duplicates();
    }
    TietzeResult res;
    res.pres = std::move(cur);
    res.fwd = std::move(fwd);
    res.kept = std::move(kept);
    return res;
}

int word_eval(const FiniteGroup& g, const Word& w, const std::vector<int>& images) {
    int x = g.identity;
    for (int l : w) {
        int gi = std::abs(l) - 1;
        int v = images[gi];
        x = g.mult(x, l > 0 ? v : g.inverse(v));
    }
    return x;
}

bool verify_hom(const Presentation& p, const FiniteGroup& g, const std::vector<int>& images) {
    if (images.size() != static_cast<std::size_t>(p.ngens))
        throw std::invalid_argument("verify_hom: image count != generator count");
    for (auto& r : p.relators)
        if (word_eval(g, r, images) != g.identity) return false;
    return true;
}

Presentation ensure_mark_generator(const Presentation& p, const std::string& mark, int* gen_out) {
    auto it = p.marks.find(mark);
    if (it == p.marks.end()) throw std::invalid_argument("missing mark: " + mark);
    const Word& w = it->second;
    if (w.size() == 1 && w[0] > 0) {
        if (gen_out) *gen_out = w[0] - 1;
        return p;
    }
    Presentation q = p;
    q.ngens += 1;
    std::string nm = "m_" + mark;
    while (q.gen_index(nm) >= 0) nm += "_";
    q.names.push_back(nm);
    // relator m^-1 * w
    Word rel{-q.ngens};
    rel = word_mul(rel, w);
    q.relators.push_back(rel);
    q.marks[mark] = Word{q.ngens};
    if (gen_out) *gen_out = q.ngens - 1;
    return q;
}

} // namespace tav
