#include "tav/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace tav {

namespace {

void require_prime(std::uint64_t p, const char* who) {
    if (!is_prime_u64(p)) throw std::invalid_argument(std::string(who) + ": argument not prime");
}

Int ipow(Int b, int e) {
    Int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

GroupSpec SquarefreeGroupParam::to_spec() const {
    std::vector<std::uint64_t> tuple;
    for (std::size_t i = 0; i < m_primes.size(); ++i) tuple.push_back(gen_tuple[i]);
    return GroupSpec::metacyclic_holder(n, m, tuple);
}

int c_count(std::uint64_t m, std::uint64_t p) {
    require_prime(p, "c_count");
    int c = 0;
    for (auto q : prime_divisors(m))
        if ((q - 1) % p == 0) ++c;
    return c;
}

int cbar_count(std::uint64_t n, std::uint64_t p) {
    require_prime(p, "cbar_count");
    int c = 0;
    for (auto q : prime_divisors(n))
        if ((p - 1) % q == 0) ++c;
    return c;
}

Int count_tav_pqr(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    require_prime(p, "count_tav_pqr");
    require_prime(q, "count_tav_pqr");
    require_prime(r, "count_tav_pqr");
    if (!(p < q && q < r)) throw std::invalid_argument("count_tav_pqr: need p < q < r");
    return Int(p - 1) * divides_ind(p, q - 1) * divides_ind(p, r - 1);
}

Int count_tav_p3q(std::uint64_t p, std::uint64_t q) {
    require_prime(p, "count_tav_p3q");
    require_prime(q, "count_tav_p3q");
    if (p == q) throw std::invalid_argument("count_tav_p3q: need p != q");
    return (p == 2 && q == 3) ? Int(1) : Int(0);
}

Int count_tav_p2qr(std::uint64_t p, std::uint64_t q, std::uint64_t r, const std::string& variant) {
    require_prime(p, "count_tav_p2qr");
    require_prime(q, "count_tav_p2qr");
    require_prime(r, "count_tav_p2qr");
    if (p == q || p == r || q == r)
        throw std::invalid_argument("count_tav_p2qr: primes must be distinct");
    if (!(q < r)) throw std::invalid_argument("count_tav_p2qr: need q < r");
    auto D = [](std::uint64_t u, std::uint64_t v) { return Int(divides_ind(u, v)); };
    Int q1 = Int(q - 1), p1 = Int(p - 1);
    Int d2q = D(2, q);

    Int total = 0;
    // C_{pr} x| C_{pq}
    total += D(p, r - 1) * D(q, p - 1);
    total += q1 * D(q, r - 1) * D(q, p - 1);
    total += q1 * D(p, r - 1) * D(q, r - 1) * D(q, p - 1);
    // C_{qr} x| C_{p^2}
    total += p1 * D(p, q - 1) * D(p, r - 1);
    total += p1 * D(p * p, q - 1) * D(p, r - 1);
    total += p1 * D(p, q - 1) * D(p * p, r - 1);
    total += Int(p) * p1 * D(p * p, q - 1) * D(p * p, r - 1);
    // C_{p^2 r} x| C_q
    total += q1 * D(q, p - 1) * D(q, r - 1);
    // (C_{pr} x C_p) x| C_q
    if (variant == "table")
        total += p1 * d2q;
    else if (variant == "theorem")
        total += d2q;
    else
        throw std::invalid_argument("count_tav_p2qr: variant must be 'theorem' or 'table'");
    total += Int(q) * (q1 - d2q) * D(q, p - 1) * D(q, r - 1) / 2;
    total += (q1 - d2q) * D(q, p + 1) * D(q, r - 1) / 2;
    // ((C_p x C_p) x| C_r) x| C_q
    total += d2q * D(r, p - 1);
    total += d2q * D(r, p + 1);
    // A_5
    total += D(2, p) * D(3, q) * D(5, r);
    return total;
}

Int count_tav_pqrs(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t s) {
    for (auto x : {p, q, r, s}) require_prime(x, "count_tav_pqrs");
    if (!(p < q && q < r && r < s))
        throw std::invalid_argument("count_tav_pqrs: need p < q < r < s");
    auto D = [](std::uint64_t u, std::uint64_t v) { return Int(divides_ind(u, v)); };
    Int p1 = Int(p - 1), q1 = Int(q - 1);
    Int total = 0;
    total += p1 * D(p, q - 1) * D(p, r - 1);
    total += p1 * D(p, q - 1) * D(p, s - 1);
    total += D(p, q - 1) * D(r, s - 1);
    total += p1 * D(p, q - 1) * D(p, s - 1) * D(r, s - 1);
    total += D(p, r - 1) * D(q, s - 1);
    total += D(p, s - 1) * D(q, r - 1);
    total += p1 * D(p, r - 1) * D(p, s - 1);
    total += q1 * D(q, r - 1) * D(q, s - 1);
    total += p1 * D(p, r - 1) * D(p, s - 1) * D(q, r - 1);
    total += p1 * D(p, r - 1) * D(p, s - 1) * D(q, s - 1);
    total += q1 * D(q, r - 1) * D(q, s - 1) * D(p, r - 1);
    total += q1 * D(q, r - 1) * D(q, s - 1) * D(p, s - 1);
    total += (Int(p) * q - p - q + 1) * D(p, r - 1) * D(p, s - 1) * D(q, r - 1) * D(q, s - 1);
    total += p1 * p1 * D(p, q - 1) * D(p, r - 1) * D(p, s - 1);
    return total;
}

Int holder_count(std::uint64_t n) {
    if (!is_squarefree(n)) throw std::invalid_argument("holder_count: n not square-free");
    Int total = 0;
    for (auto m : divisors(n)) {
        Int term = 1;
        for (auto p : prime_divisors(n / m)) {
            int c = c_count(m, p);
            term *= (ipow(Int(p), c) - 1) / Int(p - 1);
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

Int count_tav_squarefree(std::uint64_t n) {
    if (!is_squarefree(n)) throw std::invalid_argument("count_tav_squarefree: n not square-free");
    Int total = holder_count(n);
    for (auto p : prime_divisors(n)) total -= ipow(Int(2), cbar_count(n, p)) - 1;
    return total - 1;
}

std::vector<SquarefreeGroupParam> enumerate_squarefree(std::uint64_t n) {
    if (!is_squarefree(n)) throw std::invalid_argument("enumerate_squarefree: n not square-free");
    if (n > 1000000) throw std::invalid_argument("enumerate_squarefree: n too large");
    std::vector<SquarefreeGroupParam> out;
    for (auto m : divisors(n)) {
        std::uint64_t d = n / m;
        auto qs = prime_divisors(m);
        auto ps = prime_divisors(d);
        // order-p subgroups of prod_q C_{q-1} exist only for p | q-1 somewhere;
        // enumerate one normalized generator line per subgroup and per p, then
        // combine across p | d (the product of the p-parts is a cyclic subgroup
        // of order d, each subgroup obtained exactly once).
        std::vector<std::vector<std::vector<std::uint64_t>>> per_prime; // tuples per p
        bool feasible = true;
        for (auto p : ps) {
            std::vector<std::size_t> cols; // indices of q with p | q-1
            for (std::size_t i = 0; i < qs.size(); ++i)
                if ((qs[i] - 1) % p == 0) cols.push_back(i);
            if (cols.empty()) { feasible = false; break; }
            std::vector<std::vector<std::uint64_t>> tuples;
            // normalized nonzero vectors over F_p: first nonzero coordinate = 1
            std::vector<std::uint64_t> vec(cols.size(), 0);
            std::size_t lead;
            for (lead = 0; lead < cols.size(); ++lead) {
                // lead coordinate fixed to 1, later coordinates free in [0, p)
                std::vector<std::uint64_t> tail(cols.size() - lead - 1, 0);
                bool done = false;
                while (!done) {
                    std::vector<std::uint64_t> full(cols.size(), 0);
                    full[lead] = 1;
                    for (std::size_t i = 0; i < tail.size(); ++i) full[lead + 1 + i] = tail[i];
                    // embed into exponents of C_{q-1}: coordinate a gives a*(q-1)/p
                    std::vector<std::uint64_t> tuple(qs.size(), 0);
                    for (std::size_t i = 0; i < cols.size(); ++i)
                        tuple[cols[i]] = full[i] * ((qs[cols[i]] - 1) / p) % (qs[cols[i]] - 1);
                    tuples.push_back(std::move(tuple));
                    // increment tail
                    done = true;
                    for (std::size_t i = tail.size(); i-- > 0;) {
                        if (++tail[i] < p) { done = false; break; }
                        tail[i] = 0;
                    }
                    if (tail.empty()) done = true;
                }
            }
            per_prime.push_back(std::move(tuples));
        }
        if (!feasible) continue;
        // cartesian product over primes of d; sum exponent tuples
        std::vector<std::size_t> idx(per_prime.size(), 0);
        bool more = true;
        if (per_prime.empty()) {
            // d = 1: the cyclic group C_n (trivial action)
            SquarefreeGroupParam g;
            g.n = n;
            g.m = m;
            g.m_primes = qs;
            g.gen_tuple.assign(qs.size(), 0);
            g.derived_order = 1;
            if (d == 1) out.push_back(std::move(g));
            continue;
        }
        while (more) {
            SquarefreeGroupParam g;
            g.n = n;
            g.m = m;
            g.m_primes = qs;
            g.gen_tuple.assign(qs.size(), 0);
            for (std::size_t pi = 0; pi < per_prime.size(); ++pi) {
                const auto& t = per_prime[pi][idx[pi]];
                for (std::size_t i = 0; i < qs.size(); ++i)
                    g.gen_tuple[i] = (g.gen_tuple[i] + t[i]) % (qs[i] - 1);
            }
            g.derived_order = 1;
            for (std::size_t i = 0; i < qs.size(); ++i)
                if (g.gen_tuple[i] != 0) g.derived_order *= qs[i];
            out.push_back(std::move(g));
            // advance
            more = false;
            for (std::size_t i = idx.size(); i-- > 0;) {
                if (++idx[i] < per_prime[i].size()) { more = true; break; }
                idx[i] = 0;
            }
        }
    }
    return out;
}

std::vector<SquarefreeGroupParam> tav_filter(const std::vector<SquarefreeGroupParam>& params) {
    std::vector<SquarefreeGroupParam> out;
    for (auto& g : params)
        if (g.structurally_tav()) out.push_back(g);
    return out;
}

} // namespace tav
