#include "tav/reps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace tav {

KMat<CyclotomicNum> Representation::matrix_of(int x) const {
    if (kind == Kind::matrix) return mats[x];
    KMat<CyclotomicNum> m(dim, dim);
    for (int c = 0; c < dim; ++c) m.at(perms[x][c], c) = CyclotomicNum(1);
    return m;
}

bool Representation::is_identity_at(int x) const {
    if (kind == Kind::permutation) {
        for (int c = 0; c < dim; ++c)
            if (perms[x][c] != c) return false;
        return true;
    }
    return mats[x] == KMat<CyclotomicNum>::identity(dim);
}

void Representation::verify() const {
    const FiniteGroup& G = g();
    if (!is_identity_at(G.identity)) throw std::logic_error("rep: identity image wrong");
    auto check_pair = [&](int a, int b) {
        int ab = G.mult(a, b);
        if (kind == Kind::permutation) {
            for (int c = 0; c < dim; ++c)
                if (perms[ab][c] != perms[a][perms[b][c]])
                    throw std::logic_error("rep: not a homomorphism");
        } else {
            if (!(mats[a] * mats[b] == mats[ab]))
                throw std::logic_error("rep: not a homomorphism");
        }
    };
    if (G.order <= 128) {
        for (int a = 0; a < G.order; ++a)
            for (int b = 0; b < G.order; ++b) check_pair(a, b);
    } else {
        std::uint64_t state = 0xabcdef1234567ull;
        auto rnd = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int k = 0; k < 4000; ++k)
            check_pair(static_cast<int>(rnd() % G.order), static_cast<int>(rnd() % G.order));
    }
}

Representation regular_rep(const FiniteGroup& g) {
    Representation r;
    r.group = std::make_shared<FiniteGroup>(g);
    r.kind = Representation::Kind::permutation;
    r.dim = g.order;
    r.level = 1;
    r.label = "regular";
    r.perms.resize(g.order);
    for (int x = 0; x < g.order; ++x) {
        r.perms[x].resize(g.order);
        for (int c = 0; c < g.order; ++c) r.perms[x][c] = g.mult(x, c);
    }
    r.verify();
    return r;
}

Representation trivial_rep(const FiniteGroup& g) {
    Representation r;
    r.group = std::make_shared<FiniteGroup>(g);
    r.kind = Representation::Kind::matrix;
    r.dim = 1;
    r.level = 1;
    r.label = "trivial";
    r.mats.assign(g.order, KMat<CyclotomicNum>::identity(1));
    return r;
}

namespace {

Representation matrix_rep(const FiniteGroup& g, int dim, std::uint64_t level,
                          std::vector<KMat<CyclotomicNum>> mats, std::string label) {
    Representation r;
    r.group = std::make_shared<FiniteGroup>(g);
    r.kind = Representation::Kind::matrix;
    r.dim = dim;
    r.level = level;
    r.mats = std::move(mats);
    r.label = std::move(label);
    r.verify();
    return r;
}

// cyclic decomposition of an abelian quotient G/D: returns per-element
// exponent vectors and the cyclic orders
struct CyclicQuotient {
    std::vector<std::uint64_t> orders;            // invariant factors
    std::vector<std::vector<int>> exponents;      // per group element
};

CyclicQuotient cyclic_quotient_data(const FiniteGroup& g, const Subgroup& d) {
    // quotient group on cosets
    std::vector<int> coset_of(g.order, -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        for (int h : d.elems) coset_of[g.mult(x, h)] = c;
        reps.push_back(x);
    }
    int q = static_cast<int>(reps.size());
    std::vector<std::uint16_t> table(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<std::size_t>(a) * q + b] =
                static_cast<std::uint16_t>(coset_of[g.mult(reps[a], reps[b])]);
    FiniteGroup quot(q, std::move(table), "quot");
    // abelian: decompose into cyclic factors greedily by maximal order
    CyclicQuotient res;
    std::vector<int> gens;
    Subgroup cur(quot, {quot.identity});
    while (!cur.is_whole()) {
        int best = -1, best_ord = 0;
        for (int x = 0; x < quot.order; ++x) {
            if (cur.contains(x)) continue;
            int o = quot.order_of(x);
            if (o > best_ord) { best_ord = o; best = x; }
        }
        gens.push_back(best);
        std::vector<int> s = cur.elems;
        s.push_back(best);
        cur = subgroup_generated(quot, s);
        res.orders.push_back(best_ord);
    }
    // exponents: brute-force decomposition over the generator lattice
    res.exponents.assign(g.order, {});
    std::map<int, std::vector<int>> decomp;
    std::vector<int> exps(gens.size(), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int acc) {
        if (i == gens.size()) {
            if (!decomp.count(acc)) decomp[acc] = exps;
            return;
        }
        int x = acc;
        for (int e = 0; e < static_cast<int>(res.orders[i]); ++e) {
            exps[i] = e;
            walk(i + 1, x);
            x = quot.mult(x, gens[i]);
        }
        exps[i] = 0;
    };
    walk(0, quot.identity);
    for (int x = 0; x < g.order; ++x) res.exponents[x] = decomp.at(coset_of[x]);
    return res;
}

} // namespace

std::vector<Representation> one_dim_reps(const FiniteGroup& g) {
    Subgroup d = derived_subgroup(g);
    CyclicQuotient cq = cyclic_quotient_data(g, d);
    std::uint64_t level = 1;
    for (auto o : cq.orders) level = std::lcm(level, o);
    // all tuples of characters of the cyclic factors
    std::vector<Representation> out;
    std::vector<std::uint64_t> k(cq.orders.size(), 0);
    while (true) {
        std::vector<KMat<CyclotomicNum>> mats(g.order, KMat<CyclotomicNum>(1, 1));
        for (int x = 0; x < g.order; ++x) {
            CyclotomicNum v(1);
            for (std::size_t i = 0; i < cq.orders.size(); ++i) {
                std::int64_t e = static_cast<std::int64_t>(k[i]) * cq.exponents[x][i];
                v = v * CyclotomicNum::zeta(cq.orders[i], e);
            }
            mats[x].at(0, 0) = v.embedded(std::lcm(v.level, level));
        }
        out.push_back(matrix_rep(g, 1, level, std::move(mats),
                                 "chi" + std::to_string(out.size())));
        // advance
        std::size_t i = 0;
        for (; i < k.size(); ++i) {
            if (++k[i] < cq.orders[i]) break;
            k[i] = 0;
        }
        if (i == k.size()) break;
        if (k.empty()) break;
    }
    return out;
}

std::vector<Representation> dihedral_irreps(int n) {
    if (n < 3) throw std::invalid_argument("dihedral_irreps: n >= 3");
    FiniteGroup g = from_spec(GroupSpec::dihedral(n));
    // element 2i+e = r^i s^e
    std::vector<Representation> out = one_dim_reps(g);
    for (int k = 1; 2 * k < n; ++k) {
        std::vector<KMat<CyclotomicNum>> mats(g.order, KMat<CyclotomicNum>(2, 2));
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < 2; ++e) {
                KMat<CyclotomicNum>& m = mats[2 * i + e];
                CyclotomicNum zk = CyclotomicNum::zeta(n, static_cast<std::int64_t>(k) * i);
                CyclotomicNum zmk = CyclotomicNum::zeta(n, -static_cast<std::int64_t>(k) * i);
                if (e == 0) {
                    m.at(0, 0) = zk;
                    m.at(1, 1) = zmk;
                } else {
                    m.at(0, 1) = zk;
                    m.at(1, 0) = zmk;
                }
            }
        out.push_back(matrix_rep(g, 2, n, std::move(mats), "rho" + std::to_string(k)));
    }
    // squared dimensions must sum to |G|
    int sq = 0;
    for (auto& r : out) sq += r.dim * r.dim;
    if (sq != g.order) throw std::logic_error("dihedral_irreps: dimension identity failed");
    return out;
}

std::vector<Representation> s3_irreps() {
    FiniteGroup s3 = from_spec(GroupSpec::symmetric(3));
    std::vector<Representation> out = one_dim_reps(s3);
    // standard 2-dim: realize via the dihedral presentation D_3 = S_3 by
    // locating a 3-cycle r and a transposition s
    int r = -1, s = -1;
    for (int x = 0; x < 6; ++x) {
        if (s3.order_of(x) == 3 && r < 0) r = x;
        if (s3.order_of(x) == 2 && s < 0) s = x;
    }
    std::vector<KMat<CyclotomicNum>> mats(6, KMat<CyclotomicNum>(2, 2));
    for (int i = 0; i < 6; ++i) mats[i] = KMat<CyclotomicNum>(2, 2);
    // enumerate each element as r^i s^e
    for (int i = 0; i < 3; ++i)
        for (int e = 0; e < 2; ++e) {
            int x = s3.mult(s3.power(r, i), s3.power(s, e));
            KMat<CyclotomicNum> m(2, 2);
            CyclotomicNum zk = CyclotomicNum::zeta(3, i);
            CyclotomicNum zmk = CyclotomicNum::zeta(3, -i);
            if (e == 0) {
                m.at(0, 0) = zk;
                m.at(1, 1) = zmk;
            } else {
                m.at(0, 1) = zk;
                m.at(1, 0) = zmk;
            }
            mats[x] = m;
        }
    out.push_back(matrix_rep(s3, 2, 3, std::move(mats), "std"));
    return out;
}

std::vector<Representation> schmidt_irreps(const FiniteGroup& h) {
    if (is_nilpotent(h)) throw std::invalid_argument("schmidt_irreps: group is nilpotent");
    for (auto& s : all_subgroups(h)) {
        if (s.is_whole()) continue;
        if (!is_nilpotent(s.as_group()))
            throw std::invalid_argument("schmidt_irreps: proper subgroup not nilpotent");
    }
    Subgroup d = derived_subgroup(h);
    auto dfac = factorize(d.elems.size());
    if (dfac.size() != 1)
        throw std::invalid_argument("schmidt_irreps: derived subgroup not of prime-power order");
    std::uint64_t q = dfac[0].first;
    // cyclic check and a generator
    int c = -1;
    for (int x : d.elems)
        if (h.order_of(x) == d.size()) { c = x; break; }
    if (c < 0) throw std::invalid_argument("schmidt_irreps: derived subgroup not cyclic");
    std::uint64_t qb = d.elems.size();
    std::uint64_t ph = h.order / qb;
    auto pfac = factorize(ph);
    if (pfac.size() != 1)
        throw std::invalid_argument("schmidt_irreps: G/G' not of prime-power order");
    std::uint64_t p = pfac[0].first;
    std::uint64_t hexp = pfac[0].second;
    // generator z of a cyclic Sylow p-subgroup
    Subgroup syl = sylow_subgroup(h, p);
    int z = -1;
    for (int x : syl.elems)
        if (h.order_of(x) == static_cast<int>(ph)) { z = x; break; }
    if (z < 0) throw std::invalid_argument("schmidt_irreps: Sylow p-subgroup not cyclic");

    // index of each derived element as a power of c
    std::map<int, std::uint64_t> logc;
    {
        int x = h.identity;
        for (std::uint64_t e = 0; e < qb; ++e) {
            logc[x] = e;
            x = h.mult(x, c);
        }
    }
    // eta_k, lifted characters of G/G' = C_{p^h}
    std::vector<Representation> etas = one_dim_reps(h);
    if (etas.size() != ph) throw std::logic_error("schmidt_irreps: wrong character count");
    // orbits of the z-action on nontrivial characters chi_m: c -> zeta^m
    // z acts by (z.chi)(x) = chi(z^-1 x z); on exponents m -> m * a where
    // z^-1 c z = c^a
    std::uint64_t a = logc.at(h.conj(c, h.inverse(z)));
    std::vector<char> used(qb, 0);
    std::vector<std::uint64_t> orbit_reps;
    for (std::uint64_t m = 1; m < qb; ++m) {
        if (used[m]) continue;
        orbit_reps.push_back(m);
        std::uint64_t x = m;
        for (std::uint64_t i = 0; i < p; ++i) {
            used[x] = 1;
            x = x * a % qb;
        }
    }
    // induced p-dimensional representations from B = G' <z^p>
    int zp = h.power(z, static_cast<long>(p));
    std::vector<int> zpow(p);
    for (std::uint64_t i = 0; i < p; ++i) zpow[i] = h.power(z, static_cast<long>(i));
    std::uint64_t zp_order = ph / p == 0 ? 1 : ph / p;
    std::vector<Representation> taus;
    for (auto m : orbit_reps) {
        std::uint64_t level = qb;
        std::vector<KMat<CyclotomicNum>> mats(h.order, KMat<CyclotomicNum>(p, p));
        // chi-tilde on B = G' * <z^p>: chi(g') on G', 1 on z^p
        auto chi_tilde = [&](int b) -> CyclotomicNum {
            for (std::uint64_t k = 0; k < zp_order; ++k) {
                int gp = h.mult(b, h.inverse(h.power(zp, static_cast<long>(k))));
                auto it = logc.find(gp);
                if (it != logc.end())
                    return CyclotomicNum::zeta(qb, static_cast<std::int64_t>(m * it->second % qb));
            }
            throw std::logic_error("schmidt_irreps: element not in B");
        };
        auto in_B = [&](int x) {
            for (std::uint64_t k = 0; k < zp_order; ++k)
                if (logc.count(h.mult(x, h.inverse(h.power(zp, static_cast<long>(k))))))
                    return true;
            return false;
        };
        for (int x = 0; x < h.order; ++x) {
            KMat<CyclotomicNum> mat(p, p);
            for (std::uint64_t i = 0; i < p; ++i) {
                // find i' with z^-i' x z^i in B
                bool placed = false;
                for (std::uint64_t ip = 0; ip < p && !placed; ++ip) {
                    int b = h.mult(h.inverse(zpow[ip]), h.mult(x, zpow[i]));
                    if (in_B(b)) {
                        mat.at(ip, i) = chi_tilde(b);
                        placed = true;
                    }
                }
                if (!placed) throw std::logic_error("schmidt_irreps: induction failed");
            }
            mats[x] = std::move(mat);
        }
        taus.push_back(matrix_rep(h, static_cast<int>(p), level, std::move(mats),
                                  "tau" + std::to_string(taus.size() + 1)));
    }
    std::vector<Representation> out = etas;
    std::uint64_t tensor_range = 1;
    for (std::uint64_t i = 1; i < hexp; ++i) tensor_range *= p; // p^(h-1)
    // order the characters by their value at z: eta_k(z) = zeta_{p^h}^k
    std::vector<const Representation*> eta_by_k(ph, nullptr);
    for (auto& eta : etas) {
        CyclotomicNum val = eta.mats[z].at(0, 0);
        for (std::uint64_t k = 0; k < ph; ++k)
            if (val == CyclotomicNum::zeta(ph, static_cast<std::int64_t>(k))) {
                eta_by_k[k] = &eta;
                break;
            }
    }
    for (std::uint64_t k = 0; k < ph; ++k)
        if (!eta_by_k[k]) throw std::logic_error("schmidt_irreps: character values at z not cyclic");
    for (auto& tau : taus)
        for (std::uint64_t k = 0; k < tensor_range; ++k) {
            if (k == 0) out.push_back(tau);
            else out.push_back(tensor_with_char(tau, *eta_by_k[k]));
        }
    // completeness: squared dimensions sum to |H|
    long sq = 0;
    for (auto& r : out) sq += static_cast<long>(r.dim) * r.dim;
    if (sq != h.order) throw std::logic_error("schmidt_irreps: dimension identity failed");
    return out;
}

std::vector<CyclotomicNum> character(const Representation& r) {
    std::vector<CyclotomicNum> chi(r.g().order);
    for (int x = 0; x < r.g().order; ++x) {
        if (r.kind == Representation::Kind::permutation) {
            int fixed = 0;
            for (int c = 0; c < r.dim; ++c)
                if (r.perms[x][c] == c) ++fixed;
            chi[x] = CyclotomicNum(fixed);
        } else {
            CyclotomicNum tr(0);
            for (int i = 0; i < r.dim; ++i) tr = tr + r.mats[x].at(i, i);
            chi[x] = tr;
        }
    }
    return chi;
}

CyclotomicNum char_inner(const Representation& a, const Representation& b) {
    if (a.group->order != b.group->order)
        throw std::invalid_argument("char_inner: group mismatch");
    auto ca = character(a), cb = character(b);
    CyclotomicNum sum(0);
    for (int x = 0; x < a.g().order; ++x) sum = sum + ca[x] * cb[x].conj();
    return sum / CyclotomicNum(a.g().order);
}

bool is_irreducible(const Representation& r) { return char_inner(r, r) == CyclotomicNum(1); }

bool is_faithful(const Representation& r) {
    for (int x = 0; x < r.g().order; ++x)
        if (x != r.g().identity && r.is_identity_at(x)) return false;
    return true;
}

std::pair<int, std::vector<std::vector<CyclotomicNum>>> fixed_subspace(const Representation& r,
                                                                       const Subgroup& n) {
    if (n.parent->order != r.g().order) throw std::invalid_argument("fixed_subspace: group mismatch");
    if (!n.is_normal()) throw std::invalid_argument("fixed_subspace: subgroup not normal");
    // stack rho(x) - I over x in N
    KMat<CyclotomicNum> stack(static_cast<std::size_t>(n.size()) * r.dim, r.dim);
    std::size_t row = 0;
    for (int x : n.elems) {
        KMat<CyclotomicNum> m = r.matrix_of(x);
        for (int i = 0; i < r.dim; ++i, ++row)
            for (int j = 0; j < r.dim; ++j)
                stack.at(row, j) = m.at(i, j) - (i == j ? CyclotomicNum(1) : CyclotomicNum(0));
    }
    auto basis = kernel_basis(stack);
    return {static_cast<int>(basis.size()), basis};
}

std::vector<int> eigenvalue_orders(const Representation& r, int g) {
    int d = r.g().order_of(g);
    std::vector<int> orders;
    if (r.kind == Representation::Kind::permutation) {
        // cycle of length L contributes every L-th root of unity once
        std::vector<char> seen(r.dim, 0);
        for (int c = 0; c < r.dim; ++c) {
            if (seen[c]) continue;
            int len = 0, x = c;
            while (!seen[x]) {
                seen[x] = 1;
                x = r.perms[g][x];
                ++len;
            }
            for (int k = 0; k < len; ++k) orders.push_back(len / std::gcd(len, k));
        }
    } else {
        KMat<CyclotomicNum> m = r.mats[g];
        int total = 0;
        for (int k = 0; k < d; ++k) {
            KMat<CyclotomicNum> shifted = m;
            CyclotomicNum ev = CyclotomicNum::zeta(d, k);
            for (int i = 0; i < r.dim; ++i) shifted.at(i, i) = shifted.at(i, i) - ev;
            int mult = static_cast<int>(kernel_basis(shifted).size());
            for (int j = 0; j < mult; ++j) orders.push_back(d / std::gcd(d, k));
            total += mult;
        }
        if (total != r.dim)
            throw std::logic_error("eigenvalue_orders: eigenvalue multiplicities do not sum");
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

Representation tensor_with_char(const Representation& r, const Representation& eta) {
    if (eta.dim != 1) throw std::invalid_argument("tensor_with_char: eta must be 1-dim");
    if (eta.group->order != r.group->order)
        throw std::invalid_argument("tensor_with_char: group mismatch");
    std::vector<KMat<CyclotomicNum>> mats(r.g().order);
    for (int x = 0; x < r.g().order; ++x) {
        KMat<CyclotomicNum> m = r.matrix_of(x);
        CyclotomicNum s = eta.mats[x].at(0, 0);
        for (auto& e : m.a) e = e * s;
        mats[x] = std::move(m);
    }
    return matrix_rep(r.g(), r.dim, std::lcm(r.level, eta.level), std::move(mats),
                      r.label + "*" + eta.label);
}

Representation direct_sum(const std::vector<Representation>& rs) {
    if (rs.empty()) throw std::invalid_argument("direct_sum: empty list");
    int dim = 0;
    std::uint64_t level = 1;
    for (auto& r : rs) {
        if (r.group->order != rs[0].group->order)
            throw std::invalid_argument("direct_sum: group mismatch");
        dim += r.dim;
        level = std::lcm(level, r.level);
    }
    std::vector<KMat<CyclotomicNum>> mats(rs[0].g().order);
    for (int x = 0; x < rs[0].g().order; ++x) {
        KMat<CyclotomicNum> m(dim, dim);
        int off = 0;
        for (auto& r : rs) {
            KMat<CyclotomicNum> b = r.matrix_of(x);
            for (int i = 0; i < r.dim; ++i)
                for (int j = 0; j < r.dim; ++j) m.at(off + i, off + j) = b.at(i, j);
            off += r.dim;
        }
        mats[x] = std::move(m);
    }
    return matrix_rep(rs[0].g(), dim, level, std::move(mats), "sum");
}

} // namespace tav
