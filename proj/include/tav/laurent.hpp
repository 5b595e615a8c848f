#ifndef TAV_LAURENT_HPP
#define TAV_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "tav/numbers.hpp"

namespace tav {

// Sign used by unit normalization: +1 / -1 / 0.  Specialized per coefficient type.
inline int coeff_sign(const Rat& r) {
    if (r == 0) return 0;
    return r > 0 ? 1 : -1;
}

// Exact Laurent polynomial over a field K (Rat or CyclotomicNum).
// Invariant: no zero coefficients are stored; zero polynomial = empty map.
template <class K>
class LaurentPoly {
public:
    std::map<int, K> c;

    LaurentPoly() = default;
    explicit LaurentPoly(const K& k) {
        if (!(k == K(0))) c[0] = k;
    }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(K(1)); }
    static LaurentPoly t(int deg = 1, const K& coeff = K(1)) {
        LaurentPoly p;
        if (!(coeff == K(0))) p.c[deg] = coeff;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int min_deg() const { return c.empty() ? 0 : c.begin()->first; }
    int max_deg() const { return c.empty() ? 0 : c.rbegin()->first; }
    int spread() const { return c.empty() ? 0 : max_deg() - min_deg(); }

    K coeff(int d) const {
        auto it = c.find(d);
        return it == c.end() ? K(0) : it->second;
    }
    void set(int d, const K& k) {
        if (k == K(0)) c.erase(d);
        else c[d] = k;
    }
    void add_to(int d, const K& k) {
        auto it = c.find(d);
        if (it == c.end()) {
            if (!(k == K(0))) c[d] = k;
        } else {
            it->second = it->second + k;
            if (it->second == K(0)) c.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [d, k] : b.c) r.add_to(d, k);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [d, k] : b.c) r.add_to(d, K(0) - k);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [d, k] : c) r.c[d] = K(0) - k;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [da, ka] : a.c)
            for (auto& [db, kb] : b.c) r.add_to(da + db, ka * kb);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const K& k) {
        LaurentPoly r;
        if (k == K(0)) return r;
        for (auto& [d, ka] : a.c) r.c[d] = ka * k;
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c == b.c; }

    LaurentPoly shifted(int by) const {
        LaurentPoly r;
        for (auto& [d, k] : c) r.c[d + by] = k;
        return r;
    }

    // Dense coefficient vector of the min-degree-0 shift.
    std::vector<K> dense() const {
        std::vector<K> v(c.empty() ? 0 : spread() + 1, K(0));
        for (auto& [d, k] : c) v[d - min_deg()] = k;
        return v;
    }
    static LaurentPoly from_dense(const std::vector<K>& v, int min_deg = 0) {
        LaurentPoly p;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!(v[i] == K(0))) p.c[static_cast<int>(i) + min_deg] = v[i];
        return p;
    }

    // Horner evaluation; negative exponents need x invertible.
    K eval(const K& x) const {
        if (c.empty()) return K(0);
        K acc(0);
        int prev = max_deg();
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            for (int i = it->first; i < prev; ++i) acc = acc * x;
            acc = acc + it->second;
            prev = it->first;
        }
        if (prev > 0)
            for (int i = 0; i < prev; ++i) acc = acc * x;
        if (prev < 0) {
            K xi = K(1) / x;
            for (int i = 0; i < -prev; ++i) acc = acc * xi;
        }
        return acc;
    }
};

// Ordinary polynomial division over the field K: a = q*b + r, deg r < deg b.
// Inputs must have no negative-degree terms.
template <class K>
void poly_divmod(const LaurentPoly<K>& a, const LaurentPoly<K>& b, LaurentPoly<K>& q,
                 LaurentPoly<K>& r) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
    if ((!a.is_zero() && a.min_deg() < 0) || b.min_deg() < 0)
        throw std::invalid_argument("poly_divmod: negative-degree input");
    q = LaurentPoly<K>();
    r = a;
    K lead = b.c.rbegin()->second;
    int db = b.max_deg();
    while (!r.is_zero() && r.max_deg() >= db) {
        int d = r.max_deg() - db;
        K f = r.c.rbegin()->second / lead;
        q.add_to(d, f);
        for (auto& [dd, k] : b.c) r.add_to(dd + d, K(0) - k * f);
    }
}

// divides?(a, b) in the Laurent sense: exists q with a q = b (units t^k free).
template <class K>
bool divides(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return true;
    LaurentPoly<K> q, r;
    poly_divmod(b.shifted(-b.min_deg()), a.shifted(-a.min_deg()), q, r);
    return r.is_zero();
}

// Exact division (up to the implied t^k shift); throws if not a divisor.
template <class K>
LaurentPoly<K> div_exact(const LaurentPoly<K>& b, const LaurentPoly<K>& a) {
    if (b.is_zero()) return LaurentPoly<K>();
    if (a.is_zero()) throw std::domain_error("not divisible: division by zero");
    LaurentPoly<K> q, r;
    poly_divmod(b.shifted(-b.min_deg()), a.shifted(-a.min_deg()), q, r);
    if (!r.is_zero()) throw std::domain_error("not divisible");
    return q.shifted(b.min_deg() - a.min_deg());
}

using LaurentQ = LaurentPoly<Rat>;

// Rational content (gcd of numerators / lcm of denominators), sign of leading coeff.
inline Rat content(const LaurentQ& p) {
    if (p.is_zero()) return Rat(0);
    Int g = 0, l = 1;
    for (auto& [d, k] : p.c) {
        g = boost::multiprecision::gcd(g, rat_num(k));
        l = boost::multiprecision::lcm(l, rat_den(k));
    }
    Rat c(g, l);
    if (coeff_sign(p.c.rbegin()->second) < 0) c = -c;
    return c;
}

inline LaurentQ primitive_part(const LaurentQ& p) {
    if (p.is_zero()) return p;
    Rat c = content(p);
    LaurentQ r;
    for (auto& [d, k] : p.c) r.c[d] = k / c;
    return r;
}

// Monic gcd over K[t], computed on min-degree-0 representatives.  Remainders
// are rescaled every round to control coefficient growth.
template <class K>
LaurentPoly<K> poly_gcd(LaurentPoly<K> a, LaurentPoly<K> b) {
    auto rescale = [](LaurentPoly<K> p) {
        if (p.is_zero()) return p;
        p = p.shifted(-p.min_deg());
        if constexpr (std::is_same_v<K, Rat>) {
            return primitive_part(p);
        } else {
            K lead = p.c.rbegin()->second;
            return p * (K(1) / lead);
        }
    };
    a = rescale(a);
    b = rescale(b);
    while (!b.is_zero()) {
        LaurentPoly<K> q, r;
        poly_divmod(a, b, q, r);
        a = b;
        b = rescale(r);
    }
    if (!a.is_zero()) {
        K lead = a.c.rbegin()->second;
        a = a * (K(1) / lead);
    }
    return a;
}

// Unit-normal form: representative modulo +-t^k.  Minimal degree 0, leading
// coefficient of positive sign.
template <class K>
LaurentPoly<K> normalize(const LaurentPoly<K>& p) {
    if (p.is_zero()) return p;
    LaurentPoly<K> r = p.shifted(-p.min_deg());
    if (coeff_sign(r.c.rbegin()->second) < 0) r = -r;
    return r;
}

template <class K>
bool eq_up_to_unit(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    return normalize(a) == normalize(b);
}

// Equality up to multiplication by c*t^k with c a nonzero element of K.
template <class K>
bool eq_up_to_scalar_unit(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    LaurentPoly<K> na = a.shifted(-a.min_deg());
    LaurentPoly<K> nb = b.shifted(-b.min_deg());
    K ca = na.c.rbegin()->second, cb = nb.c.rbegin()->second;
    return na * (K(1) / ca) == nb * (K(1) / cb);
}

// n-th cyclotomic polynomial, computed by the division formula
// Phi_n = (t^n - 1) / prod_{d|n, d<n} Phi_d.  Cached.
inline const LaurentQ& cyclotomic_poly(std::uint64_t n) {
    static std::map<std::uint64_t, LaurentQ> cache;
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    LaurentQ tn1 = LaurentQ::t(static_cast<int>(n)) - LaurentQ::one();
    LaurentQ q = tn1;
    for (auto d : divisors(n))
        if (d < n) q = div_exact(q, cyclotomic_poly(d));
    return cache.emplace(n, q).first->second;
}

inline std::string to_string(const LaurentQ& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        const auto& [d, k] = *it;
        std::string ks = k.str();
        if (!s.empty()) {
            if (ks.size() && ks[0] == '-') { s += " - "; ks = ks.substr(1); }
            else s += " + ";
        }
        if (d == 0) s += ks;
        else {
            if (ks != "1") { if (ks == "-1") s += "-"; else s += ks + "*"; }
            s += "t";
            if (d != 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

} // namespace tav

#endif
