#include "tav/fingroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tav/numbers.hpp"

namespace tav {

FiniteGroup::FiniteGroup(int n, std::vector<std::uint16_t> t, std::string label)
    : order(n), table(std::move(t)), name(std::move(label)) {
    if (n <= 0 || table.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("FiniteGroup: bad table size");
    // Latin square check
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int b = 0; b < n; ++b) {
            int rb = mult(a, b), cb = mult(b, a);
            if (rb >= n || cb >= n || seen_row[rb] || seen_col[cb])
                throw std::invalid_argument("FiniteGroup: table is not a Latin square");
            seen_row[rb] = seen_col[cb] = 1;
        }
    }
    // identity
    identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (mult(e, a) != a || mult(a, e) != a) ok = false;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw std::invalid_argument("FiniteGroup: no identity");
    // inverses
    inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b)
            if (mult(a, b) == identity && mult(b, a) == identity) { found = b; break; }
        if (found < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
        inv[a] = static_cast<std::uint16_t>(found);
    }
    // associativity: full triple check up to order 256, sampled above
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = mult(a, b);
                for (int c = 0; c < n; ++c)
                    if (mult(ab, c) != mult(a, mult(b, c)))
                        throw std::invalid_argument("FiniteGroup: not associative");
            }
    } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(n) << 32);
        auto rnd = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int k = 0; k < 20000; ++k) {
            int a = static_cast<int>(rnd() % n), b = static_cast<int>(rnd() % n),
                c = static_cast<int>(rnd() % n);
            if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                throw std::invalid_argument("FiniteGroup: not associative (sampled)");
        }
    }
}

int FiniteGroup::power(int a, long e) const {
    int base = a;
    if (e < 0) { base = inv[a]; e = -e; }
    int r = identity;
    while (e) {
        if (e & 1) r = mult(r, base);
        base = mult(base, base);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::order_of(int a) const {
    int k = 1, x = a;
    while (x != identity) { x = mult(x, a); ++k; }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::element_orders() const {
    std::vector<int> v(order);
    for (int a = 0; a < order; ++a) v[a] = order_of(a);
    return v;
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<int> el) : parent(&g), elems(std::move(el)) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    member.assign(g.order, 0);
    for (int x : elems) member[x] = 1;
    // closure invariants
    if (!member[g.identity]) throw std::invalid_argument("Subgroup: identity missing");
    for (int x : elems) {
        if (!member[g.inverse(x)]) throw std::invalid_argument("Subgroup: not inverse-closed");
        for (int y : elems)
            if (!member[g.mult(x, y)]) throw std::invalid_argument("Subgroup: not product-closed");
    }
}

bool Subgroup::is_normal() const {
    for (int x : elems)
        for (int g = 0; g < parent->order; ++g)
            if (!member[parent->conj(x, g)]) return false;
    return true;
}

bool Subgroup::is_abelian() const {
    for (int x : elems)
        for (int y : elems)
            if (parent->mult(x, y) != parent->mult(y, x)) return false;
    return true;
}

FiniteGroup Subgroup::as_group() const {
    int n = size();
    std::vector<int> index(parent->order, -1);
    for (int i = 0; i < n; ++i) index[elems[i]] = i;
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[static_cast<std::size_t>(i) * n + j] =
                static_cast<std::uint16_t>(index[parent->mult(elems[i], elems[j])]);
    return FiniteGroup(n, std::move(t), "sub<" + parent->name + ">");
}

static std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed, bool under_conj) {
    std::vector<char> in(g.order, 0);
    std::vector<int> queue;
    auto push = [&](int x) {
        if (!in[x]) { in[x] = 1; queue.push_back(x); }
    };
    push(g.identity);
    for (int x : seed) push(x);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        push(g.inverse(x));
        if (under_conj)
            for (int c = 0; c < g.order; ++c) push(g.conj(x, c));
        for (std::size_t k = 0; k <= head; ++k) {
            push(g.mult(x, queue[k]));
            push(g.mult(queue[k], x));
        }
    }
    std::vector<int> out;
    for (int x = 0; x < g.order; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& s) {
    return Subgroup(g, closure(g, s, false));
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& s) {
    return Subgroup(g, closure(g, s, true));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    std::set<int> comms;
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b) comms.insert(g.commutator(a, b));
    return subgroup_generated(g, std::vector<int>(comms.begin(), comms.end()));
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int a = 0; a < g.order; ++a) {
        bool central = true;
        for (int b = 0; b < g.order && central; ++b)
            if (g.mult(a, b) != g.mult(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return Subgroup(g, std::move(z));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<char> seen(g.order, 0);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < g.order; ++a) {
        if (seen[a]) continue;
        std::set<int> cls;
        for (int c = 0; c < g.order; ++c) cls.insert(g.conj(a, c));
        std::vector<int> v(cls.begin(), cls.end());
        for (int x : v) seen[x] = 1;
        classes.push_back(std::move(v));
    }
    return classes;
}

std::vector<Subgroup> all_cyclic_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> sets;
    for (int a = 0; a < g.order; ++a) {
        std::vector<int> h{g.identity};
        int x = a;
        while (x != g.identity) { h.push_back(x); x = g.mult(x, a); }
        std::sort(h.begin(), h.end());
        sets.insert(h);
    }
    std::vector<Subgroup> out;
    for (auto& s : sets) out.emplace_back(g, s);
    return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> sets;
    for (auto& c : all_cyclic_subgroups(g)) sets.insert(c.elems);
    // grow by one generator at a time until closed under extension
    std::vector<std::vector<int>> frontier(sets.begin(), sets.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& h : frontier) {
            for (int x = 0; x < g.order; ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                std::vector<int> gen = h;
                gen.push_back(x);
                auto bigger = closure(g, gen, false);
                if (sets.insert(bigger).second) next.push_back(std::move(bigger));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (auto& s : sets) out.emplace_back(g, s);
    return out;
}

bool is_p_group_order(std::uint64_t n) {
    if (n == 1) return true;
    auto f = factorize(n);
    return f.size() == 1;
}

bool is_p_group(const Subgroup& h) { return is_p_group_order(h.elems.size()); }

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("sylow_subgroup: p not prime");
    std::uint64_t n = g.order, target = 1;
    while (n % p == 0) { n /= p; target *= p; }
    Subgroup cur(g, {g.identity});
    while (static_cast<std::uint64_t>(cur.size()) < target) {
        // find a p-element normalizing cur that extends it to a larger p-group
        bool extended = false;
        for (int x = 0; x < g.order && !extended; ++x) {
            if (cur.contains(x)) continue;
            std::uint64_t ox = g.order_of(x);
            bool ppow = true;
            for (std::uint64_t t = ox; t > 1;) {
                if (t % p != 0) { ppow = false; break; }
                t /= p;
            }
            if (!ppow || ox == 1) continue;
            bool normalizes = true;
            for (int h : cur.elems)
                if (!cur.contains(g.conj(h, x))) { normalizes = false; break; }
            if (!normalizes) continue;
            std::vector<int> gen = cur.elems;
            gen.push_back(x);
            auto bigger = closure(g, gen, false);
            if (is_p_group_order(bigger.size())) {
                cur = Subgroup(g, bigger);
                extended = true;
            }
        }
        if (!extended) break; // p does not divide |G| or growth exhausted
    }
    return cur;
}

bool is_nilpotent(const FiniteGroup& g) {
    for (auto p : prime_divisors(g.order))
        if (!sylow_subgroup(g, p).is_normal()) return false;
    return true;
}

std::optional<int> weight_one_witness(const FiniteGroup& g) {
    if (g.order == 1) return std::nullopt; // w({e}) = 0
    for (auto& cls : conjugacy_classes(g)) {
        int rep = cls.front();
        if (normal_closure(g, {rep}).is_whole()) return rep;
    }
    return std::nullopt;
}

bool is_tav(const FiniteGroup& g) {
    if (!weight_is_one(g)) return false;
    Subgroup d = derived_subgroup(g);
    return !is_p_group(d);
}

bool is_seed(const FiniteGroup& g) {
    if (!weight_is_one(g)) throw std::invalid_argument("seed criterion undefined: weight > 1");
    Subgroup z = center(g);
    Subgroup d = derived_subgroup(g);
    for (int x : z.elems) {
        if (x == g.identity) continue;
        // cyclic group generated by a central element
        bool meets_trivially = true;
        int y = x;
        while (y != g.identity) {
            if (d.contains(y)) { meets_trivially = false; break; }
            y = g.mult(y, x);
        }
        if (meets_trivially) return false;
    }
    return true;
}

// --- isomorphism test -------------------------------------------------------

namespace {

// (element order, conjugacy class size) fingerprint per element
std::vector<std::pair<int, int>> fingerprints(const FiniteGroup& g) {
    std::vector<std::pair<int, int>> fp(g.order);
    auto classes = conjugacy_classes(g);
    for (auto& cls : classes)
        for (int x : cls) fp[x] = {g.order_of(x), static_cast<int>(cls.size())};
    return fp;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    Subgroup cur(g, {g.identity});
    while (!cur.is_whole()) {
        int best = -1, best_size = cur.size();
        for (int x = 0; x < g.order; ++x) {
            if (cur.contains(x)) continue;
            std::vector<int> cand = cur.elems;
            cand.push_back(x);
            int sz = static_cast<int>(closure(g, cand, false).size());
            if (sz > best_size) { best_size = sz; best = x; }
            if (best_size == g.order) break;
        }
        gens.push_back(best);
        std::vector<int> cand = cur.elems;
        cand.push_back(best);
        cur = Subgroup(g, closure(g, cand, false));
    }
    if (gens.empty()) gens.push_back(g.identity);
    return gens;
}

// BFS word tree: each element an expression in the generators
struct WordTree {
    std::vector<int> parent, letter; // element = parent * gens[letter]
    std::vector<int> bfs;            // visit order
};

WordTree word_tree(const FiniteGroup& g, const std::vector<int>& gens) {
    WordTree t;
    t.parent.assign(g.order, -1);
    t.letter.assign(g.order, -1);
    std::vector<char> seen(g.order, 0);
    seen[g.identity] = 1;
    t.bfs.push_back(g.identity);
    for (std::size_t head = 0; head < t.bfs.size(); ++head) {
        int x = t.bfs[head];
        for (std::size_t li = 0; li < gens.size(); ++li) {
            int y = g.mult(x, gens[li]);
            if (!seen[y]) {
                seen[y] = 1;
                t.parent[y] = x;
                t.letter[y] = static_cast<int>(li);
                t.bfs.push_back(y);
            }
        }
    }
    return t;
}

bool try_iso(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
             const WordTree& tree, const std::vector<int>& images) {
    std::vector<int> phi(g.order, -1);
    phi[g.identity] = h.identity;
    for (int x : tree.bfs) {
        if (x == g.identity) continue;
        phi[x] = h.mult(phi[tree.parent[x]], images[tree.letter[x]]);
    }
    // surjectivity (injectivity follows for equal orders)
    std::vector<char> hit(h.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (phi[x] < 0 || hit[phi[x]]) return false;
        hit[phi[x]] = 1;
    }
    // homomorphism property: checking against generators suffices for the BFS map
    for (int x = 0; x < g.order; ++x)
        for (std::size_t li = 0; li < gens.size(); ++li)
            if (phi[g.mult(x, gens[li])] != h.mult(phi[x], images[li])) return false;
    return true;
}

} // namespace

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.order != h.order) return false;
    if (g.order > 512) throw std::invalid_argument("is_isomorphic: size limit (order > 512)");
    auto fg = fingerprints(g), fh = fingerprints(h);
    {
        auto a = fg, b = fh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    auto gens = greedy_generators(g);
    auto tree = word_tree(g, gens);
    // candidate image lists filtered by fingerprint
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (int y = 0; y < h.order; ++y)
            if (fh[y] == fg[gens[i]]) candidates[i].push_back(y);
        if (candidates[i].empty()) return false;
    }
    std::vector<int> images(gens.size(), -1);
    std::vector<std::size_t> cursor(gens.size(), 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == gens.size()) {
            if (try_iso(g, h, gens, tree, images)) return true;
            --depth;
            ++cursor[depth];
        }
        if (cursor[depth] >= candidates[depth].size()) {
            cursor[depth] = 0;
            if (depth == 0) return false;
            --depth;
            ++cursor[depth];
            continue;
        }
        images[depth] = candidates[depth][cursor[depth]];
        ++depth;
    }
}

// --- constructors ------------------------------------------------------------

namespace {

FiniteGroup build(int n, const std::function<int(int, int)>& mul, std::string name,
                  std::vector<int> gens = {}) {
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] =
            static_cast<std::uint16_t>(mul(a, b));
    FiniteGroup g(n, std::move(t), std::move(name));
    g.gens = std::move(gens);
    return g;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int perm_sign(const std::vector<int>& p) {
    int n = static_cast<int>(p.size()), s = 1;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = 1; j = p[j]; ++len; }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms, std::string name) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    int n = static_cast<int>(perms.size());
    auto mul = [&](int a, int b) {
        // (a*b)(x) = a(b(x))
        std::vector<int> c(perms[a].size());
        for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
        return index.at(c);
    };
    return build(n, mul, std::move(name));
}

} // namespace

FiniteGroup from_spec(const GroupSpec& spec) {
    const auto& P = spec.params;
    auto need = [&](std::size_t k) {
        if (P.size() < k) throw std::invalid_argument("GroupSpec: missing parameters");
    };
    if (spec.kind == "cyclic") {
        need(1);
        int n = static_cast<int>(P[0]);
        if (n < 1) throw std::invalid_argument("cyclic: n >= 1 required");
        return build(n, [n](int a, int b) { return (a + b) % n; }, "C" + std::to_string(n),
                     n > 1 ? std::vector<int>{1} : std::vector<int>{});
    }
    if (spec.kind == "abelian") {
        std::vector<GroupSpec> fs;
        for (auto n : P) fs.push_back(GroupSpec::cyclic(n));
        return from_spec(GroupSpec::direct_product(fs));
    }
    if (spec.kind == "dihedral") {
        need(1);
        int n = static_cast<int>(P[0]);
        if (n < 1) throw std::invalid_argument("dihedral: n >= 1 required");
        // element 2i+s = r^i s^eps
        auto mul = [n](int a, int b) {
            int i = a / 2, e = a % 2, j = b / 2, f = b % 2;
            int k = e ? (i - j % n + n) % n : (i + j) % n;
            return 2 * k + (e ^ f);
        };
        return build(2 * n, mul, "D" + std::to_string(n), {2, 1});
    }
    if (spec.kind == "dicyclic") {
        need(1);
        int n = static_cast<int>(P[0]);
        if (n < 1) throw std::invalid_argument("dicyclic: n >= 1 required");
        int m = 2 * n;
        // element 2i+j = a^i b^j with a^(2n)=e, b^2=a^n, b a b^-1 = a^-1
        auto mul = [n, m](int x, int y) {
            int i = x / 2, s = x % 2, j = y / 2, t = y % 2;
            int k = s ? (i - j % m + m) % m : (i + j) % m;
            if (s && t) return 2 * ((k + n) % m) + 0;
            return 2 * k + (s ^ t);
        };
        return build(4 * n, mul, "Dic" + std::to_string(n), {2, 1});
    }
    if (spec.kind == "symmetric" || spec.kind == "alternating") {
        need(1);
        int n = static_cast<int>(P[0]);
        if (n < 1 || n > 7) throw std::invalid_argument(spec.kind + ": supported for 1 <= n <= 7");
        auto perms = all_permutations(n);
        if (spec.kind == "alternating") {
            std::vector<std::vector<int>> even;
            for (auto& p : perms)
                if (perm_sign(p) == 1) even.push_back(p);
            perms = std::move(even);
        }
        return permutation_group(perms, (spec.kind == "symmetric" ? "S" : "A") + std::to_string(n));
    }
    if (spec.kind == "semidirect_cyclic" || spec.kind == "frobenius") {
        std::uint64_t m, k, b;
        if (spec.kind == "frobenius") {
            need(1);
            std::uint64_t p = P[0];
            if (!is_prime_u64(p)) throw std::invalid_argument("frobenius: p must be prime");
            m = p;
            k = primitive_root(p);
            b = p - 1;
        } else {
            need(3);
            m = P[0];
            k = P[1] % m;
            b = P[2];
        }
        if (std::gcd(k, m) != 1)
            throw std::invalid_argument("semidirect_cyclic: gcd(k, m) != 1");
        if (pow_mod_u64(k, b, m) != 1 % m)
            throw std::invalid_argument("semidirect_cyclic: k^b != 1 (mod m)");
        int mi = static_cast<int>(m), bi = static_cast<int>(b);
        std::vector<std::uint64_t> kpow(bi);
        for (int i = 0; i < bi; ++i) kpow[i] = pow_mod_u64(k, i, m);
        // element x*b + y = (x in C_m, y in C_b), (x1,y1)(x2,y2) = (x1 + k^y1 x2, y1+y2)
        auto mul = [mi, bi, &kpow](int a, int c) {
            int x1 = a / bi, y1 = a % bi, x2 = c / bi, y2 = c % bi;
            int x = static_cast<int>((x1 + kpow[y1] * x2) % mi);
            return x * bi + (y1 + y2) % bi;
        };
        std::string nm = spec.kind == "frobenius" ? "F" + std::to_string(m)
                                                  : "C" + std::to_string(m) + ":" +
                                                        std::to_string(k) + ":C" + std::to_string(b);
        return build(mi * bi, mul, nm, {bi, 1});
    }
    if (spec.kind == "gpqr") {
        need(5);
        std::uint64_t p = P[0], q = P[1], r = P[2], a = P[3], b = P[4];
        for (auto x : {p, q, r})
            if (!is_prime_u64(x)) throw std::invalid_argument("gpqr: p, q, r must be prime");
        if (p == q || p == r || q == r) throw std::invalid_argument("gpqr: primes must be distinct");
        if (pow_mod_u64(a, p, q) != 1)
            throw std::invalid_argument("gpqr: a^p != 1 (mod q)");
        if (a % q == 1) throw std::invalid_argument("gpqr: a == 1 (mod q), order p required");
        if (pow_mod_u64(b, p, r) != 1)
            throw std::invalid_argument("gpqr: b^p != 1 (mod r)");
        if (b % r == 1) throw std::invalid_argument("gpqr: b == 1 (mod r), order p required");
        int qi = static_cast<int>(q), ri = static_cast<int>(r), pi = static_cast<int>(p);
        std::vector<std::uint64_t> apow(pi), bpow(pi);
        for (int i = 0; i < pi; ++i) {
            apow[i] = pow_mod_u64(a, i, q);
            bpow[i] = pow_mod_u64(b, i, r);
        }
        // element ((x,y),z) encoded as (x*r + y)*p + z
        auto mul = [qi, ri, pi, &apow, &bpow](int u, int v) {
            int z1 = u % pi, xy1 = u / pi, z2 = v % pi, xy2 = v / pi;
            int x1 = xy1 / ri, y1 = xy1 % ri, x2 = xy2 / ri, y2 = xy2 % ri;
            int x = static_cast<int>((x1 + apow[z1] * x2) % qi);
            int y = static_cast<int>((y1 + bpow[z1] * y2) % ri);
            return (x * ri + y) * pi + (z1 + z2) % pi;
        };
        std::string nm = "G(" + std::to_string(p * q * r) + ";" + std::to_string(a) + "," +
                         std::to_string(b) + ")";
        return build(pi * qi * ri, mul, nm, {static_cast<int>(1 * ri + 0) * pi, pi, 1});
    }
    if (spec.kind == "metacyclic_holder") {
        need(2);
        std::uint64_t n = P[0], m = P[1];
        if (!is_squarefree(n)) throw std::invalid_argument("metacyclic_holder: n not square-free");
        if (m == 0 || n % m != 0) throw std::invalid_argument("metacyclic_holder: m must divide n");
        std::uint64_t d = n / m;
        auto qs = prime_divisors(m);
        if (spec.holder_tuple.size() != qs.size())
            throw std::invalid_argument("metacyclic_holder: tuple size != number of primes of m");
        // CRT-combine per-prime automorphism exponents into a unit k mod m
        std::uint64_t k = 0;
        {
            Int acc = 0, mod = 1;
            for (std::size_t i = 0; i < qs.size(); ++i) {
                std::uint64_t qq = qs[i];
                std::uint64_t g = primitive_root(qq);
                std::uint64_t res = pow_mod_u64(g, spec.holder_tuple[i] % (qq - 1), qq);
                // acc == res (mod q), keep acc mod (mod*q)
                while (acc % qq != res) acc += mod;
                mod *= qq;
            }
            k = acc.convert_to<std::uint64_t>();
        }
        if (order_mod(k, m) != static_cast<int>(d) && d != 1)
            throw std::invalid_argument("metacyclic_holder: generated subgroup has wrong order");
        if (d == 1) k = 1 % m;
        return from_spec(GroupSpec::semidirect_cyclic(m, k, d));
    }
    if (spec.kind == "direct_product") {
        if (spec.factors.empty()) return from_spec(GroupSpec::cyclic(1));
        FiniteGroup acc = from_spec(spec.factors[0]);
        for (std::size_t i = 1; i < spec.factors.size(); ++i) {
            FiniteGroup b = from_spec(spec.factors[i]);
            int n1 = acc.order, n2 = b.order;
            const FiniteGroup a = std::move(acc);
            auto mul = [&a, &b, n2](int x, int y) {
                int x1 = x / n2, x2 = x % n2, y1 = y / n2, y2 = y % n2;
                return a.mult(x1, y1) * n2 + b.mult(x2, y2);
            };
            acc = build(n1 * n2, mul, a.name + "x" + b.name);
        }
        return acc;
    }
    throw std::invalid_argument("GroupSpec: unknown kind '" + spec.kind + "'");
}

GroupSpec GroupSpec::abelian(std::vector<std::uint64_t> ns) {
    GroupSpec s;
    s.kind = "abelian";
    s.params = std::move(ns);
    return s;
}

} // namespace tav
