#ifndef TAV_CYCLOTOMIC_HPP
#define TAV_CYCLOTOMIC_HPP

#include <vector>

#include "tav/laurent.hpp"

namespace tav {

// Element of the cyclotomic field Q(zeta_N): residue polynomial in zeta of
// degree < phi(N), always kept reduced modulo Phi_N.  Mixed levels embed into
// the lcm level; arithmetic is exact throughout.
class CyclotomicNum {
public:
    std::uint64_t level = 1;
    std::vector<Rat> res; // res[i] * zeta^i, size phi(level), trailing zeros kept

    CyclotomicNum() : level(1), res(1, Rat(0)) {}
    CyclotomicNum(int v) : level(1), res(1, Rat(v)) {}
    explicit CyclotomicNum(const Rat& v) : level(1), res(1, v) {}
    CyclotomicNum(std::uint64_t N, std::vector<Rat> coeffs) : level(N), res(std::move(coeffs)) {
        reduce();
    }

    static CyclotomicNum zeta(std::uint64_t N, std::int64_t power = 1) {
        std::uint64_t k = ((power % static_cast<std::int64_t>(N)) + static_cast<std::int64_t>(N)) %
                          static_cast<std::int64_t>(N);
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = 1;
        return CyclotomicNum(N, std::move(v));
    }

    bool is_zero() const {
        for (auto& r : res)
            if (r != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < res.size(); ++i)
            if (res[i] != 0) return false;
        return true;
    }
    Rat rational_part() const { return res.empty() ? Rat(0) : res[0]; }

    // Dense coefficients of Phi_N as rationals (integer-valued).
    static const std::vector<Rat>& phi_dense(std::uint64_t N) {
        static std::map<std::uint64_t, std::vector<Rat>> cache;
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
        return cache.emplace(N, cyclotomic_poly(N).dense()).first->second;
    }

    void reduce() {
        const auto& phi = phi_dense(level);
        std::size_t deg = phi.size() - 1; // phi(level)
        // reduce res modulo Phi_level (monic)
        for (std::size_t i = res.size(); i-- > deg;) {
            Rat f = res[i];
            if (f == 0) continue;
            res[i] = 0;
            for (std::size_t j = 0; j < deg; ++j) res[i - deg + j] -= f * phi[j];
        }
        res.resize(deg, Rat(0));
    }

    CyclotomicNum embedded(std::uint64_t N) const {
        if (N == level) return *this;
        if (N % level != 0) throw std::invalid_argument("cyclotomic embed: level mismatch");
        std::uint64_t s = N / level;
        std::vector<Rat> v;
        v.resize(res.size() * s, Rat(0));
        for (std::size_t i = 0; i < res.size(); ++i) v[i * s] = res[i];
        return CyclotomicNum(N, std::move(v));
    }

    friend std::uint64_t common_level(const CyclotomicNum& a, const CyclotomicNum& b) {
        return std::lcm(a.level, b.level);
    }

    friend CyclotomicNum operator+(const CyclotomicNum& a, const CyclotomicNum& b) {
        std::uint64_t N = common_level(a, b);
        CyclotomicNum x = a.embedded(N), y = b.embedded(N);
        for (std::size_t i = 0; i < x.res.size(); ++i) x.res[i] += y.res[i];
        return x;
    }
    friend CyclotomicNum operator-(const CyclotomicNum& a, const CyclotomicNum& b) {
        std::uint64_t N = common_level(a, b);
        CyclotomicNum x = a.embedded(N), y = b.embedded(N);
        for (std::size_t i = 0; i < x.res.size(); ++i) x.res[i] -= y.res[i];
        return x;
    }
    friend CyclotomicNum operator*(const CyclotomicNum& a, const CyclotomicNum& b) {
        std::uint64_t N = common_level(a, b);
        CyclotomicNum x = a.embedded(N), y = b.embedded(N);
        std::vector<Rat> v(x.res.size() + y.res.size(), Rat(0));
        for (std::size_t i = 0; i < x.res.size(); ++i) {
            if (x.res[i] == 0) continue;
            for (std::size_t j = 0; j < y.res.size(); ++j)
                if (y.res[j] != 0) v[i + j] += x.res[i] * y.res[j];
        }
        CyclotomicNum r;
        r.level = N;
        r.res = std::move(v);
        r.reduce();
        return r;
    }
    friend bool operator==(const CyclotomicNum& a, const CyclotomicNum& b) {
        std::uint64_t N = common_level(a, b);
        return a.embedded(N).res == b.embedded(N).res;
    }

    // Inverse via extended Euclid in Q[x] against Phi_level.
    CyclotomicNum inverse() const {
        if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
        if (is_rational()) {
            CyclotomicNum r(Rat(1) / res[0]);
            return r;
        }
        LaurentQ a = LaurentQ::from_dense(res);
        LaurentQ m = cyclotomic_poly(level);
        // extended Euclid: s*a + t*m = gcd = 1
        LaurentQ r0 = m, r1 = a, s0 = LaurentQ::zero(), s1 = LaurentQ::one();
        while (!r1.is_zero()) {
            LaurentQ q, rem;
            poly_divmod(r0, r1, q, rem);
            LaurentQ s2 = s0 - q * s1;
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 = c (nonzero constant since Phi is irreducible over Q)
        if (r0.is_zero() || r0.max_deg() != 0)
            throw std::logic_error("cyclotomic inverse: gcd not constant");
        Rat c = r0.coeff(0);
        std::vector<Rat> v(phi_dense(level).size() - 1, Rat(0));
        for (auto& [d, k] : s0.c) v.at(d) = k / c;
        return CyclotomicNum(level, std::move(v));
    }
    friend CyclotomicNum operator/(const CyclotomicNum& a, const CyclotomicNum& b) {
        return a * b.inverse();
    }

    // complex conjugation zeta -> zeta^{-1}
    CyclotomicNum conj() const {
        CyclotomicNum acc;
        for (std::size_t i = 0; i < res.size(); ++i) {
            if (res[i] == 0) continue;
            acc = acc + zeta(level, -static_cast<std::int64_t>(i)) * CyclotomicNum(res[i]);
        }
        return acc.embedded(std::lcm(acc.level, level));
    }

    // multiplicative order if a root of unity; 0 if not
    int root_of_unity_order(int max_order) const {
        CyclotomicNum p = *this;
        for (int k = 1; k <= max_order; ++k) {
            if (p == CyclotomicNum(1)) return k;
            p = p * (*this);
        }
        return 0;
    }
};

inline int coeff_sign(const CyclotomicNum& x) {
    for (auto& r : x.res) {
        if (r != 0) return r > 0 ? 1 : -1;
    }
    return 0;
}

using LaurentC = LaurentPoly<CyclotomicNum>;

inline LaurentC to_cyclotomic(const LaurentQ& p, std::uint64_t level = 1) {
    LaurentC r;
    for (auto& [d, k] : p.c) {
        CyclotomicNum x(k);
        r.c[d] = x.embedded(level);
    }
    return r;
}

// Evaluate a rational Laurent polynomial at a cyclotomic point.
inline CyclotomicNum eval_at(const LaurentQ& p, const CyclotomicNum& x) {
    return to_cyclotomic(p).eval(x);
}

} // namespace tav

#endif
