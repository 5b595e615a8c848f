#ifndef TAV_CENSUS_HPP
#define TAV_CENSUS_HPP

#include <cstdint>
#include <vector>

#include "tav/fingroup.hpp"
#include "tav/numbers.hpp"

namespace tav {

// Isomorphism class of a group of square-free order n, parametrized as
// C_m x| H with H a cyclic subgroup of Aut(C_m) of order n/m.  H is recorded
// by one exponent per prime factor of m (coordinates of a generator in
// prod_{q|m} C_{q-1}).
struct SquarefreeGroupParam {
    std::uint64_t n = 1;
    std::uint64_t m = 1;
    std::vector<std::uint64_t> m_primes;   // ascending prime factors of m
    std::vector<std::uint64_t> gen_tuple;  // exponent in C_{q-1} per prime of m
    std::uint64_t derived_order = 1;       // product of primes acted on nontrivially

    bool structurally_tav() const { return prime_divisors(derived_order).size() >= 2; }
    GroupSpec to_spec() const;
};

// D_u^v indicator
inline int divides_ind(std::uint64_t u, std::uint64_t v) {
    if (u == 0) throw std::invalid_argument("divides_ind: u >= 1 required");
    return v % u == 0 ? 1 : 0;
}

// c_m(p) = #{q in pi(m) : p | q-1},  cbar_n(p) = #{q in pi(n) : q | p-1}
int c_count(std::uint64_t m, std::uint64_t p);
int cbar_count(std::uint64_t n, std::uint64_t p);

// Counting formulas for TAV groups of order a product of at most four primes.
Int count_tav_pqr(std::uint64_t p, std::uint64_t q, std::uint64_t r);
Int count_tav_p3q(std::uint64_t p, std::uint64_t q);
// variant: "theorem" evaluates the displayed formula as printed; "table"
// replaces the bare D_2^q summand by (p-1) D_2^q per the proof's table row.
Int count_tav_p2qr(std::uint64_t p, std::uint64_t q, std::uint64_t r,
                   const std::string& variant = "theorem");
Int count_tav_pqrs(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t s);

// Hoelder's count of all groups of square-free order n, and the TAV count.
Int holder_count(std::uint64_t n);
Int count_tav_squarefree(std::uint64_t n);

// One parameter set per isomorphism class; |result| == holder_count(n).
std::vector<SquarefreeGroupParam> enumerate_squarefree(std::uint64_t n);

// Keep exactly the classes whose derived subgroup has >= 2 prime factors.
std::vector<SquarefreeGroupParam> tav_filter(const std::vector<SquarefreeGroupParam>& params);

} // namespace tav

#endif
