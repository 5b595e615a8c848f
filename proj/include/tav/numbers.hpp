#ifndef TAV_NUMBERS_HPP
#define TAV_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tav {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::uint64_t pow_mod_u64_fwd(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// deterministic Miller-Rabin for 64-bit inputs
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull}) {
        std::uint64_t x = pow_mod_u64_fwd(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// prime -> exponent, ascending primes
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            f.emplace_back(d, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

inline bool is_squarefree(std::uint64_t n) {
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ds{1};
    for (auto& [p, e] : factorize(n)) {
        std::size_t m = ds.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < m; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t t = n;
    for (auto& [p, e] : factorize(n)) t = t / p * (p - 1);
    return t;
}

inline std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t pow_mod_u64_fwd(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    return pow_mod_u64(b, e, m);
}

// descending sequence of large word-size primes for modular reconstruction
inline std::uint64_t nth_modulus_prime(std::size_t k) {
    static std::vector<std::uint64_t> primes;
    static std::uint64_t cursor = (1ull << 62) - 1;
    while (primes.size() <= k) {
        while (!is_prime_u64(cursor)) cursor -= 2;
        primes.push_back(cursor);
        cursor -= 2;
    }
    return primes[k];
}

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline int order_mod(std::uint64_t a, std::uint64_t m) {
    if (std::gcd(a % m, m) != 1) throw std::invalid_argument("order_mod: not a unit");
    std::uint64_t x = a % m;
    int k = 1;
    std::uint64_t y = x;
    while (y != 1 % m) { y = y * x % m; ++k; }
    return k;
}

// smallest primitive root mod prime p
inline std::uint64_t primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto qs = prime_divisors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : qs)
            if (pow_mod_u64(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace tav

#endif
