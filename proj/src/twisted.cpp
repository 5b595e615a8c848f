#include "tav/twisted.hpp"

#include <algorithm>
#include <numeric>

#include "tav/census.hpp"

namespace tav {

namespace {

bool is_perm(const Representation& r) { return r.kind == Representation::Kind::permutation; }

int f_of_word(const TwistSetup& ts, const Word& w) {
    return word_eval(ts.rep.g(), w, ts.images);
}

// discrete log in the cyclic subgroup generated by g; -1 if absent
int cyclic_log(const FiniteGroup& G, int g, int x) {
    int e = 0, cur = G.identity;
    do {
        if (cur == x) return e;
        cur = G.mult(cur, g);
        ++e;
    } while (cur != G.identity);
    return -1;
}

} // namespace

TwistSetup make_twist(const Presentation& p, const Representation& rep,
                      const std::vector<int>& images) {
    if (!verify_hom(p, rep.g(), images))
        throw std::invalid_argument("make_twist: images do not define a homomorphism");
    TwistSetup ts;
    ts.pres = p;
    ts.rep = rep;
    ts.images = images;
    ts.phi = knot_phi(p);
    ts.meridian_gen = -1;
    auto it = p.marks.find("meridian");
    if (it != p.marks.end() && it->second.size() == 1 && it->second[0] > 0 &&
        ts.phi[it->second[0] - 1] == 1)
        ts.meridian_gen = it->second[0] - 1;
    if (ts.meridian_gen < 0)
        for (int j = 0; j < p.ngens; ++j)
            if (ts.phi[j] == 1) { ts.meridian_gen = j; break; }
    if (ts.meridian_gen < 0)
        for (int j = 0; j < p.ngens; ++j)
            if (ts.phi[j] != 0) { ts.meridian_gen = j; break; }
    if (ts.meridian_gen < 0)
        throw std::invalid_argument("denominator vanishes for all generators");
    return ts;
}

PolyMatQ twist_matrix_q(const TwistSetup& ts) {
    if (!is_perm(ts.rep)) throw std::invalid_argument("twist_matrix_q: permutation rep required");
    int d = ts.rep.dim;
    std::size_t R = ts.pres.relators.size();
    PolyMatQ m(d * R, static_cast<std::size_t>(d) * ts.pres.ngens);
    for (std::size_t i = 0; i < R; ++i)
        for (int j = 0; j < ts.pres.ngens; ++j) {
            GroupRingElem fox = fox_derivative(ts.pres.relators[i], j);
            for (auto& [w, c] : fox.terms) {
                int g = f_of_word(ts, w);
                long e = phi_of_word(ts.phi, w);
                const auto& perm = ts.rep.perms[g];
                Rat coeff(c);
                for (int k = 0; k < d; ++k)
                    m.at(d * i + perm[k], static_cast<std::size_t>(d) * j + k)
                        .add_to(static_cast<int>(e), coeff);
            }
        }
    return m;
}

PolyMatC twist_matrix_c(const TwistSetup& ts) {
    int d = ts.rep.dim;
    std::size_t R = ts.pres.relators.size();
    PolyMatC m(d * R, static_cast<std::size_t>(d) * ts.pres.ngens);
    for (std::size_t i = 0; i < R; ++i)
        for (int j = 0; j < ts.pres.ngens; ++j) {
            GroupRingElem fox = fox_derivative(ts.pres.relators[i], j);
            for (auto& [w, c] : fox.terms) {
                int g = f_of_word(ts, w);
                long e = phi_of_word(ts.phi, w);
                KMat<CyclotomicNum> mat = ts.rep.matrix_of(g);
                CyclotomicNum coeff{Rat(c)};
                for (int r = 0; r < d; ++r)
                    for (int k = 0; k < d; ++k) {
                        CyclotomicNum v = mat.at(r, k) * coeff;
                        if (!v.is_zero())
                            m.at(d * i + r, static_cast<std::size_t>(d) * j + k)
                                .add_to(static_cast<int>(e), v);
                    }
            }
        }
    return m;
}

namespace {

// single-letter application of Phi to a cyclotomic vector
std::vector<LaurentC> apply_letter(const TwistSetup& ts, int letter,
                                   const std::vector<LaurentC>& v) {
    int gi = std::abs(letter) - 1;
    int g = ts.images[gi];
    long e = ts.phi[gi];
    const FiniteGroup& G = ts.rep.g();
    if (letter < 0) {
        g = G.inverse(g);
        e = -e;
    }
    int d = ts.rep.dim;
    std::vector<LaurentC> out(d);
    if (is_perm(ts.rep)) {
        const auto& perm = ts.rep.perms[g];
        for (int k = 0; k < d; ++k) out[perm[k]] = v[k].shifted(static_cast<int>(e));
    } else {
        const KMat<CyclotomicNum>& m = ts.rep.mats[g];
        for (int r = 0; r < d; ++r) {
            LaurentC acc;
            for (int k = 0; k < d; ++k) {
                if (m.at(r, k).is_zero() || v[k].is_zero()) continue;
                acc = acc + v[k] * m.at(r, k);
            }
            out[r] = acc.shifted(static_cast<int>(e));
        }
    }
    return out;
}

// derivation value on a word from generator values: d(uv) = d(u) + Phi(u)d(v)
std::vector<LaurentC> derivation_of_word(const TwistSetup& ts, const DerivationCertificate& cert,
                                         const Word& w) {
    int d = ts.rep.dim;
    std::vector<LaurentC> acc(d);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int letter = *it;
        int gi = std::abs(letter) - 1;
        std::vector<LaurentC> shifted = apply_letter(ts, letter, acc);
        if (letter > 0) {
            for (int k = 0; k < d; ++k) shifted[k] = shifted[k] + cert.vectors[gi][k];
        } else {
            // d(x^-1) = -Phi(x^-1) d(x)
            std::vector<LaurentC> dx = apply_letter(ts, letter, cert.vectors[gi]);
            for (int k = 0; k < d; ++k) shifted[k] = shifted[k] - dx[k];
        }
        acc = std::move(shifted);
    }
    return acc;
}

bool vec_zero(const std::vector<LaurentC>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace

bool verify_certificate(const TwistSetup& ts, const DerivationCertificate& cert) {
    if (cert.vectors.size() != static_cast<std::size_t>(ts.pres.ngens)) return false;
    bool nonzero = false;
    for (auto& v : cert.vectors)
        if (!vec_zero(v)) nonzero = true;
    if (!nonzero) return false;
    for (auto& r : ts.pres.relators)
        if (!vec_zero(derivation_of_word(ts, cert, r))) return false;
    if (cert.meridian_zero) {
        Word m;
        auto it = ts.pres.marks.find("meridian");
        if (it != ts.pres.marks.end()) m = it->second;
        else m = Word{ts.meridian_gen + 1};
        if (!vec_zero(derivation_of_word(ts, cert, m))) return false;
    }
    return true;
}

namespace {

LaurentQ den_one_q(const TwistSetup& ts, int j) {
    int d = ts.rep.dim;
    PolyMatQ m(d, d);
    const auto& perm = ts.rep.perms[ts.images[j]];
    for (int k = 0; k < d; ++k) {
        m.at(perm[k], k).add_to(static_cast<int>(ts.phi[j]), Rat(1));
        m.at(k, k).add_to(0, Rat(-1));
    }
    return poly_matrix_det(m);
}

LaurentC den_one_c(const TwistSetup& ts, int j) {
    int d = ts.rep.dim;
    PolyMatC m(d, d);
    KMat<CyclotomicNum> mat = ts.rep.matrix_of(ts.images[j]);
    for (int r = 0; r < d; ++r)
        for (int k = 0; k < d; ++k) {
            if (!mat.at(r, k).is_zero())
                m.at(r, k).add_to(static_cast<int>(ts.phi[j]), mat.at(r, k));
            if (r == k) m.at(r, k).add_to(0, CyclotomicNum(-1));
        }
    return poly_matrix_det(m);
}

// coinvariant H0 machinery over a scalar field.  The t-grading-1 slice of the
// image of (f, phi) is represented by g1 = f(m) for a word m with phi(m) = 1;
// the grading-0 slice is G0 = f(ker phi), the normal closure of the twisted
// generator differences.
template <class K, class MatOf>
LaurentPoly<K> h0_impl(const TwistSetup& ts, MatOf mat_of) {
    const FiniteGroup& G = ts.rep.g();
    int d = ts.rep.dim;
    int g1 = -1;
    auto mk = ts.pres.marks.find("meridian");
    if (mk != ts.pres.marks.end() && phi_of_word(ts.phi, mk->second) == 1) {
        g1 = word_eval(G, mk->second, ts.images);
    } else {
        // integer combination of the phi values equal to 1
        std::vector<long> coeff(ts.pres.ngens, 0);
        long g = 0;
        for (int i = 0; i < ts.pres.ngens; ++i) {
            if (ts.phi[i] == 0) continue;
            if (g == 0) {
                g = std::abs(ts.phi[i]);
                coeff[i] = ts.phi[i] > 0 ? 1 : -1;
            } else {
                std::int64_t x, y;
                long ng = static_cast<long>(ext_gcd(g, std::abs(ts.phi[i]), x, y));
                for (auto& c : coeff) c *= x;
                coeff[i] = ts.phi[i] > 0 ? y : -y;
                g = ng;
            }
            if (g == 1) break;
        }
        if (g != 1) throw std::logic_error("h0: abelianization not surjective");
        g1 = G.identity;
        for (int i = 0; i < ts.pres.ngens; ++i)
            if (coeff[i] != 0) g1 = G.mult(g1, G.power(ts.images[i], coeff[i]));
    }
    const long e1 = 1;
    std::vector<int> seeds;
    for (int i = 0; i < ts.pres.ngens; ++i)
        seeds.push_back(G.mult(ts.images[i], G.power(g1, -ts.phi[i])));
    Subgroup g0 = normal_closure(G, seeds);
    // column span of (rho(g) - I) over g in G0
    KMat<K> rows(static_cast<std::size_t>(d) * g0.size(), d);
    std::size_t ri = 0;
    for (int g : g0.elems) {
        KMat<K> m = mat_of(g);
        for (int c = 0; c < d; ++c, ++ri)
            for (int r = 0; r < d; ++r) rows.at(ri, r) = m.at(r, c) - (r == c ? K(1) : K(0));
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = reduce_echelon(rows, &pivots);
    std::vector<char> is_pivot(d, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<int> freeidx;
    for (int i = 0; i < d; ++i)
        if (!is_pivot[i]) freeidx.push_back(i);
    int w = static_cast<int>(freeidx.size());
    if (w == 0) return LaurentPoly<K>::one();
    auto reduce_vec = [&](std::vector<K> v) {
        for (std::size_t r = 0; r < rank; ++r) {
            K f = v[pivots[r]];
            if (f == K(0)) continue;
            for (int c = 0; c < d; ++c) v[c] = v[c] - f * rows.at(r, c);
        }
        return v;
    };
    KMat<K> mg1 = mat_of(g1);
    PolyMat<K> big(w, w);
    for (int s = 0; s < w; ++s) {
        std::vector<K> v(d, K(0));
        for (int r = 0; r < d; ++r) v[r] = mg1.at(r, freeidx[s]);
        v = reduce_vec(std::move(v));
        for (int sp = 0; sp < w; ++sp) {
            if (!(v[freeidx[sp]] == K(0)))
                big.at(sp, s).add_to(static_cast<int>(e1), v[freeidx[sp]]);
            if (sp == s) big.at(sp, s).add_to(0, K(-1));
        }
    }
    return det_bareiss(big);
}

} // namespace

LaurentQ h0_order_q(const TwistSetup& ts) {
    if (!is_perm(ts.rep)) throw std::invalid_argument("h0_order_q: permutation rep required");
    auto mat_of = [&](int g) {
        KMat<Rat> m(ts.rep.dim, ts.rep.dim);
        for (int c = 0; c < ts.rep.dim; ++c) m.at(ts.rep.perms[g][c], c) = Rat(1);
        return m;
    };
    return h0_impl<Rat>(ts, mat_of);
}

LaurentC h0_order_c(const TwistSetup& ts) {
    auto mat_of = [&](int g) { return ts.rep.matrix_of(g); };
    return h0_impl<CyclotomicNum>(ts, mat_of);
}

namespace {

template <class K>
std::optional<DerivationCertificate> kernel_certificate(const TwistSetup& ts,
                                                        const PolyMat<K>& deleted, int mer) {
    auto ker = poly_matrix_kernel(deleted);
    if (ker.empty()) return std::nullopt;
    const auto& v = ker.front();
    DerivationCertificate cert;
    cert.meridian_zero = true;
    int d = ts.rep.dim;
    cert.vectors.assign(ts.pres.ngens, std::vector<LaurentC>(d));
    std::size_t col = 0;
    for (int j = 0; j < ts.pres.ngens; ++j) {
        if (j == mer) {
            continue;
        }
        for (int k = 0; k < d; ++k, ++col) {
            if constexpr (std::is_same_v<K, Rat>)
                cert.vectors[j][k] = to_cyclotomic(v[col]);
            else
                cert.vectors[j][k] = v[col];
        }
    }
    if (!verify_certificate(ts, cert))
        throw std::logic_error("kernel certificate failed symbolic verification");
    return cert;
}

} // namespace

TwistedResult wada_invariant(const TwistSetup& ts, const WadaOptions& opt) {
    if (ts.pres.deficiency() != 1)
        throw std::invalid_argument(
            "wada_invariant: presentation not deficiency-one (apply tietze_simplify)");
    TwistedResult res;
    res.column_removed = ts.meridian_gen;
    res.cyclotomic = !is_perm(ts.rep);
    int d = ts.rep.dim;
    bool hinted = false;
    if (opt.hint && verify_certificate(ts, *opt.hint)) {
        res.vanished = true;
        res.certificate = *opt.hint;
        hinted = true;
    }
    if (!res.cyclotomic) {
        PolyMatQ m = twist_matrix_q(ts);
        PolyMatQ del = m.without_col_block(static_cast<std::size_t>(d) * ts.meridian_gen, d);
        res.denominator_q = den_one_q(ts, ts.meridian_gen);
        if (res.denominator_q.is_zero())
            throw std::logic_error("wada_invariant: denominator vanished");
        if (!hinted) {
            res.numerator_q = det_modular(del, opt.threads);
            res.vanished = res.numerator_q.is_zero();
        }
        if (res.vanished && !res.certificate && opt.kernel_certificate &&
            del.cols <= opt.kernel_cols_cap)
            res.certificate = kernel_certificate<Rat>(ts, del, ts.meridian_gen);
        if (opt.want_h1) {
            res.h0_q = h0_order_q(ts);
            res.h1_q = res.vanished
                           ? LaurentQ()
                           : normalize(div_exact(res.numerator_q * res.h0_q, res.denominator_q));
        }
    } else {
        PolyMatC m = twist_matrix_c(ts);
        PolyMatC del = m.without_col_block(static_cast<std::size_t>(d) * ts.meridian_gen, d);
        res.denominator_c = den_one_c(ts, ts.meridian_gen);
        if (res.denominator_c.is_zero())
            throw std::logic_error("wada_invariant: denominator vanished");
        if (!hinted) {
            res.numerator_c = poly_matrix_det(del);
            res.vanished = res.numerator_c.is_zero();
        }
        if (res.vanished && !res.certificate && opt.kernel_certificate &&
            del.cols <= opt.kernel_cols_cap)
            res.certificate = kernel_certificate<CyclotomicNum>(ts, del, ts.meridian_gen);
        if (opt.want_h1) {
            res.h0_c = h0_order_c(ts);
            res.h1_c = res.vanished
                           ? LaurentC()
                           : normalize(div_exact(res.numerator_c * res.h0_c, res.denominator_c));
        }
    }
    if (res.vanished && res.certificate && !verify_certificate(ts, *res.certificate))
        throw std::logic_error("wada_invariant: certificate verification failed");
    return res;
}

VanishVerdict vanishing_probe(const TwistSetup& ts, const WadaOptions& opt) {
    VanishVerdict v;
    int d = ts.rep.dim;
    if (opt.hint && verify_certificate(ts, *opt.hint)) {
        v.state = VanishVerdict::State::vanishing;
        v.certificate = *opt.hint;
        return v;
    }
    if (!is_perm(ts.rep)) {
        PolyMatC m = twist_matrix_c(ts);
        PolyMatC del = m.without_col_block(static_cast<std::size_t>(d) * ts.meridian_gen, d);
        for (std::uint64_t pt : {2ull, 3ull, 5ull}) {
            auto w = column_rank_probe(del, pt);
            if (w.full_column_rank) {
                v.state = VanishVerdict::State::nonvanishing;
                v.witness = w;
                return v;
            }
        }
        if (del.cols <= opt.kernel_cols_cap) {
            auto cert = kernel_certificate<CyclotomicNum>(ts, del, ts.meridian_gen);
            if (cert) {
                v.state = VanishVerdict::State::vanishing;
                v.certificate = std::move(cert);
            } else {
                v.state = VanishVerdict::State::nonvanishing;
                v.witness.full_column_rank = true;
                v.witness.rank = del.cols;
            }
        }
        return v;
    }
    PolyMatQ m = twist_matrix_q(ts);
    PolyMatQ del = m.without_col_block(static_cast<std::size_t>(d) * ts.meridian_gen, d);
    for (std::uint64_t pt : {2ull, 3ull, 5ull, 7ull}) {
        auto w = column_rank_probe(del, pt);
        if (w.full_column_rank) {
            v.state = VanishVerdict::State::nonvanishing;
            v.witness = w;
            return v;
        }
    }
    if (del.cols <= opt.kernel_cols_cap) {
        auto cert = kernel_certificate<Rat>(ts, del, ts.meridian_gen);
        if (cert) {
            v.state = VanishVerdict::State::vanishing;
            v.certificate = std::move(cert);
        } else {
            v.state = VanishVerdict::State::nonvanishing;
            v.witness.full_column_rank = true;
            v.witness.rank = del.cols;
        }
    }
    return v;
}

LaurentQ alexander_polynomial(const Presentation& p) {
    Presentation q = p;
    if (q.deficiency() != 1) {
        auto t = tietze_simplify(q);
        q = t.pres;
    }
    if (q.deficiency() != 1)
        throw std::invalid_argument("alexander_polynomial: no deficiency-one presentation found");
    FiniteGroup triv = from_spec(GroupSpec::cyclic(1));
    Representation rep = regular_rep(triv);
    std::vector<int> images(q.ngens, 0);
    TwistSetup ts = make_twist(q, rep, images);
    TwistedResult r = wada_invariant(ts);
    return normalize(r.h1_q);
}

bool satellite_vanishing(const TwistSetup& base, const Presentation& companion, int d,
                         bool factored, int lk) {
    if (lk != 0)
        throw std::invalid_argument(
            "satellite_vanishing: lk != 0; use the linked variant (Remark 4.4 disjunction)");
    if (!factored) return true;
    if (d <= 0) throw std::invalid_argument("satellite_vanishing: d >= 1 required for factored f");
    TwistedResult base_res = wada_invariant(base);
    if (base_res.vanished) return true;
    LaurentQ delta_j = alexander_polynomial(companion);
    return divides(cyclotomic_poly(static_cast<std::uint64_t>(d)), delta_j);
}

bool satellite_vanishing_linked(bool link_side_vanished, bool companion_side_vanished) {
    return link_side_vanished || companion_side_vanished;
}

namespace {

std::vector<int> glued_images(const SatelliteBuild& sb, const FiniteGroup& G,
                              const std::vector<int>& f0_images,
                              const std::vector<int>& fj_images) {
    std::vector<int> img(sb.glued.pres.ngens, G.identity);
    for (int a = 0; a < sb.link_w.arc_count; ++a) {
        int ba = sb.link_arc_to_base_arc[a];
        img[a] = ba >= 0 ? f0_images[ba] : G.identity;
    }
    for (int j = 0; j < sb.glued.j_ngens; ++j) img[sb.glued.j_offset + j] = fj_images[j];
    return img;
}

// derivation supported on companion generators with values in the
// zeta-eigenspace of rho(g_elem); exact linear solve over Q(zeta)
std::optional<DerivationCertificate> eigenvector_certificate(const TwistSetup& ts,
                                                             const SatelliteBuild& sb, int g_elem,
                                                             const CyclotomicNum& zeta,
                                                             std::uint64_t level) {
    const FiniteGroup& G = ts.rep.g();
    int d = ts.rep.dim;
    KMat<CyclotomicNum> shifted(d, d);
    {
        KMat<CyclotomicNum> m = ts.rep.matrix_of(g_elem);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                shifted.at(r, c) = m.at(r, c).embedded(std::lcm(m.at(r, c).level, level)) -
                                   (r == c ? zeta : CyclotomicNum(0));
    }
    auto eigen = kernel_basis(shifted);
    if (eigen.empty()) return std::nullopt;
    const auto& w = eigen.front();
    int nj = sb.glued.j_ngens, off = sb.glued.j_offset;
    std::vector<std::vector<CyclotomicNum>> rows;
    for (auto& r : ts.pres.relators) {
        std::vector<CyclotomicNum> row(nj, CyclotomicNum(0));
        bool touches = false;
        for (int u = 0; u < nj; ++u) {
            GroupRingElem fox = fox_derivative(r, off + u);
            for (auto& [word, c] : fox.terms) {
                int fw = word_eval(G, word, ts.images);
                long e = phi_of_word(ts.phi, word);
                if (e != 0) return std::nullopt;
                int k = cyclic_log(G, g_elem, fw);
                if (k < 0) return std::nullopt;
                CyclotomicNum zk(1);
                for (int i = 0; i < k; ++i) zk = zk * zeta;
                row[u] = row[u] + zk * CyclotomicNum(Rat(c));
                touches = true;
            }
        }
        if (touches) rows.push_back(std::move(row));
    }
    KMat<CyclotomicNum> sys(rows.size(), nj);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int u = 0; u < nj; ++u) sys.at(i, u) = rows[i][u];
    auto sol = kernel_basis(sys);
    if (sol.empty()) return std::nullopt;
    DerivationCertificate cert;
    cert.meridian_zero = true;
    cert.vectors.assign(ts.pres.ngens, std::vector<LaurentC>(d));
    for (int u = 0; u < nj; ++u) {
        if (sol.front()[u].is_zero()) continue;
        for (int k = 0; k < d; ++k) {
            CyclotomicNum val = sol.front()[u] * w[k];
            if (!val.is_zero()) cert.vectors[off + u][k] = LaurentC(val);
        }
    }
    if (!verify_certificate(ts, cert)) return std::nullopt;
    return cert;
}

// Inner derivation on the companion side at a vector fixed by the images of
// both peripheral curves of J: d(u) = (rho(f(u)) - I) v.  With the regular
// representation, v is the double coset sum over <f(mu_J)> <f(lambda_J)>,
// the vector of the non-factoring construction.
std::optional<DerivationCertificate> inner_certificate(const TwistSetup& ts,
                                                       const SatelliteBuild& sb,
                                                       const std::vector<CyclotomicNum>& v) {
    const FiniteGroup& G = ts.rep.g();
    int d = ts.rep.dim;
    DerivationCertificate cert;
    cert.meridian_zero = true;
    cert.vectors.assign(ts.pres.ngens, std::vector<LaurentC>(d));
    bool nonzero = false;
    for (int j = 0; j < sb.glued.j_ngens; ++j) {
        int u = sb.glued.j_offset + j;
        KMat<CyclotomicNum> m = ts.rep.matrix_of(ts.images[u]);
        for (int r = 0; r < d; ++r) {
            CyclotomicNum acc(0);
            for (int c = 0; c < d; ++c)
                if (!m.at(r, c).is_zero() && !v[c].is_zero()) acc = acc + m.at(r, c) * v[c];
            acc = acc - v[r];
            if (!acc.is_zero()) {
                cert.vectors[u][r] = LaurentC(acc);
                nonzero = true;
            }
        }
    }
    if (!nonzero) return std::nullopt;
    if (!verify_certificate(ts, cert)) return std::nullopt;
    return cert;
}

// xi vector of the non-factoring construction for permutation representations:
// sum of the permutation orbit of the identity coordinate under left
// multiplication by <f(mu_J)> then <f(lambda_J)>.
std::vector<CyclotomicNum> xi_vector(const TwistSetup& ts, const SatelliteBuild& sb) {
    const FiniteGroup& G = ts.rep.g();
    int d = ts.rep.dim;
    std::vector<CyclotomicNum> v(d, CyclotomicNum(0));
    if (ts.rep.kind != Representation::Kind::permutation || d != G.order) return v;
    Word mu_j, lam_j;
    {
        auto shift = [&](const Word& w) {
            Word r;
            for (int l : w) r.push_back(l > 0 ? l + sb.glued.j_offset : l - sb.glued.j_offset);
            return r;
        };
        mu_j = shift(sb.j_pres.marks.at("meridian"));
        lam_j = shift(sb.j_pres.marks.at("longitude"));
    }
    int m = word_eval(G, mu_j, ts.images);
    int l = word_eval(G, lam_j, ts.images);
    int dm = G.order_of(m), dl = G.order_of(l);
    std::vector<Rat> coords(G.order, Rat(0));
    int xm = G.identity;
    for (int i = 0; i < dm; ++i) {
        for (int j = 0; j < dl; ++j) coords[G.mult(xm, G.power(l, j))] += 1;
        xm = G.mult(xm, m);
    }
    for (int i = 0; i < d; ++i) v[i] = CyclotomicNum(coords[i]);
    return v;
}

} // namespace

VanishingPair construct_vanishing_pair_cyclic(const FiniteGroup& g, const Representation& rep,
                                              int elem, const BraidWord& base,
                                              const std::vector<int>& f0_images) {
    int order = g.order_of(elem);
    auto fac = factorize(order);
    if (fac.size() != 2 || fac[0].second != 1 || fac[1].second != 1)
        throw std::invalid_argument(
            "construct_vanishing_pair_cyclic: element order must be a product of two primes");
    int p = static_cast<int>(fac[0].first), q = static_cast<int>(fac[1].first);
    auto orders = eigenvalue_orders(rep, elem);
    if (std::find(orders.begin(), orders.end(), order) == orders.end())
        throw std::invalid_argument(
            "construct_vanishing_pair_cyclic: no primitive pq-th eigenvalue");
    PDCode pd = braid_to_pd(base);
    WirtingerData w0 = pd_wirtinger(pd);
    if (!verify_hom(w0.pres, g, f0_images) || !subgroup_generated(g, f0_images).is_whole())
        throw std::invalid_argument("construct_vanishing_pair_cyclic: f0 not an epimorphism");
    Presentation companion = torus_presentation(p, q);
    std::optional<SatelliteBuild> found;
    for (int cand : encircle_candidates(pd)) {
        SatelliteBuild sb = satellite_from_braid(base, cand, companion);
        if (word_eval(g, sb.alpha_in_base, f0_images) == elem) {
            found = std::move(sb);
            break;
        }
    }
    if (!found) throw std::invalid_argument("alpha placement failed: no suitable arc pair");
    SatelliteBuild sb = std::move(*found);
    std::vector<int> fj(sb.glued.j_ngens);
    for (int j = 0; j < sb.glued.j_ngens; ++j)
        fj[j] = g.power(elem, sb.j_phi[j]);
    std::vector<int> images = glued_images(sb, g, f0_images, fj);
    TwistSetup ts = make_twist(sb.glued.pres, rep, images);
    std::uint64_t pq = static_cast<std::uint64_t>(order);
    std::uint64_t level = std::lcm(rep.level, pq);
    std::optional<DerivationCertificate> cert;
    for (std::uint64_t j = 1; j < pq && !cert; ++j) {
        if (std::gcd(j, pq) != 1) continue;
        cert = eigenvector_certificate(
            ts, sb, elem, CyclotomicNum::zeta(level, static_cast<std::int64_t>(j * (level / pq))),
            level);
    }
    if (!cert)
        throw std::logic_error("construct_vanishing_pair_cyclic: certificate construction failed");
    VanishingPair out{std::move(sb), std::move(ts), std::move(*cert)};
    return out;
}

VanishingPair construct_vanishing_pair_weight(const FiniteGroup& g, const Representation& rep,
                                              const Subgroup& h_sub, int h_elem,
                                              const BraidWord& base,
                                              const std::vector<int>& f0_images,
                                              const Presentation& j_pres,
                                              const std::vector<int>& fj_images) {
    if (!is_faithful(rep))
        throw std::invalid_argument("construct_vanishing_pair_weight: representation not faithful");
    Subgroup derived = derived_subgroup(g);
    for (int x : h_sub.elems)
        if (!derived.contains(x))
            throw std::invalid_argument("construct_vanishing_pair_weight: H not inside G'");
    if (h_sub.is_abelian())
        throw std::invalid_argument("construct_vanishing_pair_weight: H must be non-commutative");
    {
        FiniteGroup hg = h_sub.as_group();
        auto pos = std::lower_bound(h_sub.elems.begin(), h_sub.elems.end(), h_elem);
        if (pos == h_sub.elems.end() || *pos != h_elem)
            throw std::invalid_argument("construct_vanishing_pair_weight: h not in H");
        int idx = static_cast<int>(pos - h_sub.elems.begin());
        if (!normal_closure(hg, {idx}).is_whole())
            throw std::invalid_argument("construct_vanishing_pair_weight: h not a weight element");
    }
    KMat<CyclotomicNum> mh = rep.matrix_of(h_elem);
    for (int i = 0; i < rep.dim; ++i) mh.at(i, i) = mh.at(i, i) - CyclotomicNum(1);
    auto fixed = kernel_basis(mh);
    if (fixed.empty())
        throw std::invalid_argument("construct_vanishing_pair_weight: 1 not an eigenvalue");
    std::vector<int> conjugates;
    for (int c : h_sub.elems) {
        int hx = g.conj(h_elem, c);
        if (hx != h_elem && h_sub.contains(hx)) conjugates.push_back(hx);
    }
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    std::optional<std::vector<CyclotomicNum>> v0;
    for (auto& v : fixed) {
        for (int hp : conjugates) {
            KMat<CyclotomicNum> m = rep.matrix_of(hp);
            bool moves = false;
            for (int r = 0; r < rep.dim && !moves; ++r) {
                CyclotomicNum acc(0);
                for (int c = 0; c < rep.dim; ++c) acc = acc + m.at(r, c) * v[c];
                if (!(acc == v[r])) moves = true;
            }
            if (moves) { v0 = v; break; }
        }
        if (v0) break;
    }
    if (!v0)
        throw std::invalid_argument(
            "faithfulness insufficient on eigenspace: no moved fixed vector");
    PDCode pd = braid_to_pd(base);
    WirtingerData w0 = pd_wirtinger(pd);
    if (!verify_hom(w0.pres, g, f0_images) || !subgroup_generated(g, f0_images).is_whole())
        throw std::invalid_argument("construct_vanishing_pair_weight: f0 not an epimorphism");
    if (!verify_hom(j_pres, g, fj_images))
        throw std::invalid_argument("construct_vanishing_pair_weight: f_J not a homomorphism");
    if (word_eval(g, j_pres.marks.at("meridian"), fj_images) != h_elem)
        throw std::invalid_argument("construct_vanishing_pair_weight: f_J(meridian) != h");
    if (word_eval(g, j_pres.marks.at("longitude"), fj_images) != g.identity)
        throw std::invalid_argument("construct_vanishing_pair_weight: f_J(longitude) != e");
    std::optional<SatelliteBuild> found;
    for (int cand : encircle_candidates(pd)) {
        SatelliteBuild sb = satellite_from_braid(base, cand, j_pres);
        if (word_eval(g, sb.alpha_in_base, f0_images) == h_elem) {
            found = std::move(sb);
            break;
        }
    }
    if (!found) throw std::invalid_argument("alpha placement failed: no suitable arc pair");
    SatelliteBuild sb = std::move(*found);
    std::vector<int> images = glued_images(sb, g, f0_images, fj_images);
    TwistSetup ts = make_twist(sb.glued.pres, rep, images);
    DerivationCertificate cert;
    cert.meridian_zero = true;
    cert.vectors.assign(ts.pres.ngens, std::vector<LaurentC>(rep.dim));
    for (int j = 0; j < sb.glued.j_ngens; ++j) {
        int u = sb.glued.j_offset + j;
        KMat<CyclotomicNum> m = rep.matrix_of(images[u]);
        for (int r = 0; r < rep.dim; ++r) {
            CyclotomicNum acc(0);
            for (int c = 0; c < rep.dim; ++c) acc = acc + m.at(r, c) * (*v0)[c];
            acc = acc - (*v0)[r];
            if (!acc.is_zero()) cert.vectors[u][r] = LaurentC(acc);
        }
    }
    if (!verify_certificate(ts, cert))
        throw std::logic_error("construct_vanishing_pair_weight: certificate verification failed");
    VanishingPair out{std::move(sb), std::move(ts), std::move(cert)};
    return out;
}

bool braid_power_divisibility_check(const BraidWord& b, int k, const FiniteGroup& g,
                                    const Hom& hom) {
    PDCode pd = braid_to_pd(b);
    WirtingerData w = pd_wirtinger(pd);
    BraidWord bk = braid_power(b, k);
    PDCode pdk = braid_to_pd(bk);
    WirtingerData wk = pd_wirtinger(pdk);
    Hom moved = transport_hom(b, k, g, pd, w, hom, pdk, wk);
    if (!moved.valid) throw std::logic_error("braid_power_divisibility_check: transport failed");
    Representation reg = regular_rep(g);
    auto h1_of = [&](const Presentation& pres, const std::vector<int>& imgs) {
        auto t = tietze_simplify(pres);
        std::vector<int> imgs2(t.pres.ngens);
        for (int i = 0; i < t.pres.ngens; ++i) imgs2[i] = imgs[t.kept[i]];
        TwistSetup ts = make_twist(t.pres, reg, imgs2);
        TwistedResult r = wada_invariant(ts);
        if (r.vanished) throw std::logic_error("divisibility check: invariant vanished");
        return r.h1_q;
    };
    LaurentQ small = h1_of(w.pres, hom.images);
    LaurentQ big = h1_of(wk.pres, moved.images);
    return divides(small, big);
}

OrderSearchReport tav_order_search(const SatelliteBuild& sb, std::uint64_t max_order) {
    OrderSearchReport rep;
    for (std::uint64_t n = 2; n <= max_order && rep.tav_order == 0; ++n) {
        auto fac = factorize(n);
        std::vector<FiniteGroup> catalog;
        std::string stratum;
        int nprimes = 0;
        for (auto& [p, e] : fac) nprimes += e;
        if (fac.size() == 1) {
            stratum = "p-group: no TAV groups";
        } else if (is_squarefree(n)) {
            stratum = "square-free: census-complete";
            for (auto& prm : tav_filter(enumerate_squarefree(n)))
                catalog.push_back(from_spec(prm.to_spec()));
        } else if (fac.size() == 2 && nprimes == 3) {
            stratum = "p^2 q: excluded (normal Sylow argument)";
        } else if (fac.size() == 2 && nprimes == 4 &&
                   (fac[0].second == 3 || fac[1].second == 3)) {
            stratum = n == 24 ? "p^3 q: S_4 only" : "p^3 q: excluded except order 24";
            if (n == 24) catalog.push_back(from_spec(GroupSpec::symmetric(4)));
        } else if (fac.size() == 2 && nprimes == 4) {
            stratum = n == 36 ? "p^2 q^2 = 36: excluded (cited computation)"
                              : "p^2 q^2: excluded (normal Sylow argument)";
        } else {
            stratum = "unverified stratum (non-square-free, beyond the census)";
            rep.complete = false;
        }
        if (catalog.empty()) {
            OrderSearchRow row;
            row.order = n;
            row.group = "-";
            row.stratum = stratum;
            rep.rows.push_back(row);
            continue;
        }
        for (auto& G : catalog) {
            OrderSearchRow row;
            row.order = n;
            row.group = G.name;
            row.stratum = stratum;
            Representation reg = regular_rep(G);
            HomConstraints hc;
            hc.surjective_only = true;
            auto epis = wirtinger_homs(sb.glued.pres, G, hc);
            row.epimorphisms = static_cast<int>(epis.size());
            for (auto& e : epis) {
                TwistSetup ts = make_twist(sb.glued.pres, reg, e.images);
                WadaOptions wo;
                wo.kernel_cols_cap = 0; // big matrices: probes plus certificates only
                VanishVerdict v = vanishing_probe(ts, wo);
                if (v.state == VanishVerdict::State::undecided) {
                    // companion image cyclic: try the eigenvector certificates
                    std::vector<int> jimgs;
                    for (int j = 0; j < sb.glued.j_ngens; ++j)
                        jimgs.push_back(e.images[sb.glued.j_offset + j]);
                    Subgroup jim = subgroup_generated(G, jimgs);
                    for (int cand : jim.elems) {
                        int dord = G.order_of(cand);
                        if (dord != jim.size()) continue;
                        std::uint64_t level = std::lcm(reg.level, (std::uint64_t)dord);
                        for (std::uint64_t j = 1; j < static_cast<std::uint64_t>(dord); ++j) {
                            if (std::gcd(j, static_cast<std::uint64_t>(dord)) != 1) continue;
                            auto cert = eigenvector_certificate(
                                ts, sb, cand,
                                CyclotomicNum::zeta(level,
                                                    static_cast<std::int64_t>(j * (level / dord))),
                                level);
                            if (cert) {
                                v.state = VanishVerdict::State::vanishing;
                                v.certificate = std::move(cert);
                                break;
                            }
                        }
                        if (v.state == VanishVerdict::State::vanishing) break;
                    }
                    if (v.state == VanishVerdict::State::undecided) {
                        // non-factoring construction: inner derivation at xi
                        auto cert = inner_certificate(ts, sb, xi_vector(ts, sb));
                        if (cert) {
                            v.state = VanishVerdict::State::vanishing;
                            v.certificate = std::move(cert);
                        }
                    }
                }
                if (v.state == VanishVerdict::State::vanishing) {
                    row.vanishing_found = true;
                    rep.tav_order = n;
                    rep.witness_group = G.name;
                } else if (v.state == VanishVerdict::State::nonvanishing) {
                    ++row.nonvanishing_witnessed;
                } else {
                    throw std::runtime_error("tav_order_search: undecided vanishing for " + G.name);
                }
            }
            rep.rows.push_back(row);
            if (rep.tav_order != 0) break;
        }
    }
    return rep;
}

} // namespace tav
