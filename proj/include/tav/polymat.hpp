#ifndef TAV_POLYMAT_HPP
#define TAV_POLYMAT_HPP

#include <algorithm>
#include <functional>
#include <optional>

#include "tav/cyclotomic.hpp"
#include "tav/laurent.hpp"

namespace tav {

// ---------------------------------------------------------------------------
// scalar matrices over a field K
// ---------------------------------------------------------------------------

template <class K>
struct KMat {
    std::size_t rows = 0, cols = 0;
    std::vector<K> a;

    KMat() = default;
    KMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, K(0)) {}
    K& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static KMat identity(std::size_t n) {
        KMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }
    friend KMat operator*(const KMat& x, const KMat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("KMat: dimension mismatch");
        KMat r(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                if (x.at(i, k) == K(0)) continue;
                for (std::size_t j = 0; j < y.cols; ++j)
                    r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        return r;
    }
    friend bool operator==(const KMat& x, const KMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Row echelon reduction in place; returns rank.  pivots[j] = row of pivot in
// column j, or npos.
template <class K>
std::size_t reduce_echelon(KMat<K>& m, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, j) == K(0)) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
        K inv = K(1) / m.at(r, j);
        for (std::size_t k = j; k < m.cols; ++k) m.at(r, k) = m.at(r, k) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, j) == K(0)) continue;
            K f = m.at(i, j);
            for (std::size_t k = j; k < m.cols; ++k)
                m.at(i, k) = m.at(i, k) - f * m.at(r, k);
        }
        if (pivot_cols) pivot_cols->push_back(j);
        ++r;
    }
    return r;
}

template <class K>
std::size_t rank_of(KMat<K> m) {
    return reduce_echelon(m);
}

// Basis of the right kernel {v : M v = 0}.
template <class K>
std::vector<std::vector<K>> kernel_basis(KMat<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t rank = reduce_echelon(m, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto j : pivots) is_pivot[j] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<K> v(m.cols, K(0));
        v[j] = K(1);
        for (std::size_t r = 0; r < rank; ++r)
            v[pivots[r]] = K(0) - m.at(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
K det_scalar(KMat<K> m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square");
    K det(1);
    for (std::size_t j = 0; j < m.cols; ++j) {
        std::size_t piv = j;
        while (piv < m.rows && m.at(piv, j) == K(0)) ++piv;
        if (piv == m.rows) return K(0);
        if (piv != j) {
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(j, k));
            det = K(0) - det;
        }
        det = det * m.at(j, j);
        K inv = K(1) / m.at(j, j);
        for (std::size_t i = j + 1; i < m.rows; ++i) {
            if (m.at(i, j) == K(0)) continue;
            K f = m.at(i, j) * inv;
            for (std::size_t k = j; k < m.cols; ++k)
                m.at(i, k) = m.at(i, k) - f * m.at(j, k);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// matrices of Laurent polynomials
// ---------------------------------------------------------------------------

template <class K>
struct PolyMat {
    std::size_t rows = 0, cols = 0;
    std::vector<LaurentPoly<K>> a;

    PolyMat() = default;
    PolyMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    LaurentPoly<K>& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const LaurentPoly<K>& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    PolyMat without_col_block(std::size_t j0, std::size_t width) const {
        PolyMat r(rows, cols - width);
        for (std::size_t i = 0; i < rows; ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j >= j0 && j < j0 + width) continue;
                r.at(i, cj++) = at(i, j);
            }
        }
        return r;
    }

    KMat<K> eval(const K& x) const {
        KMat<K> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = at(i, j).eval(x);
        return m;
    }
};

using PolyMatQ = PolyMat<Rat>;
using PolyMatC = PolyMat<CyclotomicNum>;

// Shift every row (and column) so entries are ordinary polynomials; the det of
// the original equals t^shift * det(shifted).
template <class K>
int normalize_shifts(PolyMat<K>& m) {
    int shift = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        int mn = 0;
        bool any = false;
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (m.at(i, j).is_zero()) continue;
            int d = m.at(i, j).min_deg();
            mn = any ? std::min(mn, d) : d;
            any = true;
        }
        if (!any || mn == 0) continue;
        shift += mn;
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = m.at(i, j).shifted(-mn);
    }
    for (std::size_t j = 0; j < m.cols; ++j) {
        int mn = 0;
        bool any = false;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (m.at(i, j).is_zero()) continue;
            int d = m.at(i, j).min_deg();
            mn = any ? std::min(mn, d) : d;
            any = true;
        }
        if (!any || mn == 0) continue;
        shift += mn;
        for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = m.at(i, j).shifted(-mn);
    }
    return shift;
}

// Degree bound for det of a shifted (ordinary-polynomial) square matrix.
template <class K>
int det_degree_bound(const PolyMat<K>& m) {
    long rowsum = 0, colsum = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        int mx = 0;
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) mx = std::max(mx, m.at(i, j).max_deg());
        rowsum += mx;
    }
    for (std::size_t j = 0; j < m.cols; ++j) {
        int mx = 0;
        for (std::size_t i = 0; i < m.rows; ++i)
            if (!m.at(i, j).is_zero()) mx = std::max(mx, m.at(i, j).max_deg());
        colsum += mx;
    }
    return static_cast<int>(std::min(rowsum, colsum));
}

// Fraction-free Bareiss elimination over K[t]; exact, intended for small
// matrices and as the independent oracle for the evaluation strategy.
template <class K>
LaurentPoly<K> det_bareiss(PolyMat<K> m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square");
    std::size_t n = m.rows;
    if (n == 0) return LaurentPoly<K>::one();
    int shift = normalize_shifts(m);
    LaurentPoly<K> prev = LaurentPoly<K>::one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return LaurentPoly<K>();
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly<K> num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.is_zero() ? num : div_exact(num, prev);
            }
        prev = m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) m.at(i, k) = LaurentPoly<K>();
    }
    LaurentPoly<K> d = m.at(n - 1, n - 1).shifted(shift);
    return sign < 0 ? -d : d;
}

// Evaluation/interpolation over the coefficient field K at integer points.
// Exact; practical for small sizes or cyclotomic coefficients.
template <class K>
LaurentPoly<K> det_interpolate(PolyMat<K> m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square");
    std::size_t n = m.rows;
    if (n == 0) return LaurentPoly<K>::one();
    int shift = normalize_shifts(m);
    int dbound = det_degree_bound(m);
    std::size_t npts = static_cast<std::size_t>(dbound) + 1;
    std::vector<K> xs(npts), ys(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        xs[i] = K(static_cast<int>(i));
        ys[i] = det_scalar(m.eval(xs[i]));
    }
    // Newton divided differences
    std::vector<K> coef = ys;
    for (std::size_t j = 1; j < npts; ++j)
        for (std::size_t i = npts; i-- > j;)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    // expand Newton form
    LaurentPoly<K> det;
    for (std::size_t i = npts; i-- > 0;) {
        LaurentPoly<K> lin;
        lin.set(1, K(1));
        lin.set(0, K(0) - xs[i]);
        det = det * lin + LaurentPoly<K>(coef[i]);
    }
    return det.shifted(shift);
}

// ---------------------------------------------------------------------------
// modular evaluation/interpolation determinant for rational matrices
// ---------------------------------------------------------------------------

namespace detail {

struct DenseModPoly {
    std::vector<std::uint64_t> c; // coeff of t^i
};

inline std::uint64_t eval_mod(const DenseModPoly& p, std::uint64_t x, std::uint64_t mod) {
    std::uint64_t acc = 0;
    for (std::size_t i = p.c.size(); i-- > 0;)
        acc = (static_cast<unsigned __int128>(acc) * x + p.c[i]) % mod;
    return acc;
}

inline std::uint64_t det_mod(std::vector<std::uint64_t>& a, std::size_t n, std::uint64_t p) {
    std::uint64_t det = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t piv = j;
        while (piv < n && a[piv * n + j] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != j) {
            for (std::size_t k = j; k < n; ++k) std::swap(a[piv * n + k], a[j * n + k]);
            det = p - det;
            if (det == p) det = 0;
        }
        std::uint64_t d = a[j * n + j];
        det = mul_mod_u64(det, d, p);
        std::uint64_t inv = pow_mod_u64(d, p - 2, p);
        for (std::size_t i = j + 1; i < n; ++i) {
            std::uint64_t f = a[i * n + j];
            if (f == 0) continue;
            f = mul_mod_u64(f, inv, p);
            a[i * n + j] = 0;
            for (std::size_t k = j + 1; k < n; ++k) {
                std::uint64_t sub = mul_mod_u64(f, a[j * n + k], p);
                std::uint64_t& t = a[i * n + k];
                t = (t >= sub) ? t - sub : t + p - sub;
            }
        }
    }
    return det % p;
}

// Newton interpolation at x = 0..d modulo p; returns dense coefficients.
inline std::vector<std::uint64_t> interpolate_mod(const std::vector<std::uint64_t>& ys,
                                                  std::uint64_t p) {
    std::size_t n = ys.size();
    std::vector<std::uint64_t> coef = ys;
    std::vector<std::uint64_t> inv(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) inv[i] = pow_mod_u64(i % p, p - 2, p);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n; i-- > j;) {
            std::uint64_t diff = coef[i] >= coef[i - 1] ? coef[i] - coef[i - 1]
                                                        : coef[i] + p - coef[i - 1];
            coef[i] = mul_mod_u64(diff, inv[j], p);
        }
    // expand sum coef[i] * prod_{k<i} (x - k)
    std::vector<std::uint64_t> out(n, 0), basis(n, 0);
    basis[0] = 1;
    std::size_t blen = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (coef[i] != 0)
            for (std::size_t k = 0; k < blen; ++k) {
                out[k] = (out[k] + static_cast<unsigned __int128>(coef[i]) * basis[k]) % p;
            }
        if (i + 1 < n) {
            // basis *= (x - i): new[k] = old[k-1] - i*old[k], descending in place
            std::uint64_t c = i % p;
            std::uint64_t old0 = basis[0];
            for (std::size_t k = blen; k >= 1; --k) {
                std::uint64_t scaled = mul_mod_u64(basis[k], c, p);
                std::uint64_t prev = basis[k - 1];
                basis[k] = (prev >= scaled) ? prev - scaled : prev + p - scaled;
            }
            std::uint64_t scaled0 = mul_mod_u64(old0, c, p);
            basis[0] = scaled0 == 0 ? 0 : p - scaled0;
            ++blen;
        }
    }
    return out;
}

} // namespace detail

// Exact determinant of an integer-coefficient Laurent matrix by scalar
// evaluation modulo word-size primes, interpolation, and CRT reconstruction
// up to a rigorous coefficient bound.  Entries must have integral
// coefficients (callers clear rational content first).
LaurentQ det_modular(PolyMatQ m, int nthreads = 0);

// Dispatching determinant: modular path for rational matrices beyond the
// Bareiss comfort zone, interpolation otherwise.
LaurentQ poly_matrix_det(const PolyMatQ& m);
LaurentC poly_matrix_det(const PolyMatC& m);

// ---------------------------------------------------------------------------
// rational functions over K[t] and exact kernels
// ---------------------------------------------------------------------------

template <class K>
struct PolyFrac {
    LaurentPoly<K> num, den; // den never zero

    PolyFrac() : den(LaurentPoly<K>::one()) {}
    PolyFrac(int v) : num(LaurentPoly<K>(K(v))), den(LaurentPoly<K>::one()) {}
    explicit PolyFrac(const LaurentPoly<K>& n) : num(n), den(LaurentPoly<K>::one()) {}
    PolyFrac(LaurentPoly<K> n, LaurentPoly<K> d) : num(std::move(n)), den(std::move(d)) {
        reduce();
    }
    bool is_zero() const { return num.is_zero(); }
    void reduce() {
        if (num.is_zero()) { den = LaurentPoly<K>::one(); return; }
        LaurentPoly<K> g = poly_gcd(num, den);
        if (!(g == LaurentPoly<K>::one())) {
            num = div_exact(num, g);
            den = div_exact(den, g);
        }
        int s = den.min_deg();
        if (s != 0) { den = den.shifted(-s); num = num.shifted(-s); }
        K lead = den.c.rbegin()->second;
        if (!(lead == K(1))) {
            K inv = K(1) / lead;
            num = num * inv;
            den = den * inv;
        }
    }
    friend PolyFrac operator+(const PolyFrac& x, const PolyFrac& y) {
        return PolyFrac(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    friend PolyFrac operator-(const PolyFrac& x, const PolyFrac& y) {
        return PolyFrac(x.num * y.den - y.num * x.den, x.den * y.den);
    }
    friend PolyFrac operator*(const PolyFrac& x, const PolyFrac& y) {
        return PolyFrac(x.num * y.num, x.den * y.den);
    }
    friend PolyFrac operator/(const PolyFrac& x, const PolyFrac& y) {
        if (y.is_zero()) throw std::domain_error("PolyFrac: division by zero");
        return PolyFrac(x.num * y.den, x.den * y.num);
    }
    friend bool operator==(const PolyFrac& x, const PolyFrac& y) {
        return x.num * y.den == y.num * x.den;
    }
};

// Right kernel over the fraction field, cleared to polynomial entries and
// symbolically verified (M v = 0) before returning.
template <class K>
std::vector<std::vector<LaurentPoly<K>>> poly_matrix_kernel(const PolyMat<K>& m) {
    KMat<PolyFrac<K>> f(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) f.at(i, j) = PolyFrac<K>(m.at(i, j));
    auto frac_kernel = kernel_basis(f);
    std::vector<std::vector<LaurentPoly<K>>> out;
    for (auto& v : frac_kernel) {
        // clear denominators
        LaurentPoly<K> l = LaurentPoly<K>::one();
        for (auto& e : v)
            if (!e.is_zero()) l = div_exact(l * e.den, poly_gcd(l, e.den));
        std::vector<LaurentPoly<K>> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) w[i] = v[i].num * div_exact(l, v[i].den);
        // mandatory symbolic verification
        for (std::size_t i = 0; i < m.rows; ++i) {
            LaurentPoly<K> acc;
            for (std::size_t j = 0; j < m.cols; ++j) acc = acc + m.at(i, j) * w[j];
            if (!acc.is_zero()) throw std::logic_error("poly_matrix_kernel: verification failed");
        }
        out.push_back(std::move(w));
    }
    return out;
}

// Full-column-rank probe at a scalar point: sound witness of nonvanishing.
struct RankWitness {
    std::uint64_t prime = 0;
    std::uint64_t point = 0;   // value of t
    std::size_t rank = 0;
    bool full_column_rank = false;
};

RankWitness column_rank_probe(const PolyMatQ& m, std::uint64_t point_seed = 2);
RankWitness column_rank_probe(const PolyMatC& m, std::uint64_t point_seed = 2);

} // namespace tav

#endif
