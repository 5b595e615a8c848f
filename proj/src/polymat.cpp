#include "tav/polymat.hpp"

#include <cmath>
#include <future>
#include <thread>

namespace tav {

namespace {

int thread_count(int requested) {
    if (requested > 0) return requested;
    const char* env = std::getenv("TAV_THREADS");
    if (env) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// log2 of the permanent-style coefficient bound: prod_i (sum_j |entry|_1)
double det_coeff_bound_log2(const PolyMatQ& m) {
    double bits = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        double rowsum = 0;
        for (std::size_t j = 0; j < m.cols; ++j)
            for (auto& [d, k] : m.at(i, j).c) {
                rowsum += std::fabs(static_cast<double>(rat_num(k))) /
                          static_cast<double>(rat_den(k));
            }
        bits += std::log2(std::max(rowsum, 1.0));
    }
    return bits;
}

std::uint64_t rat_mod(const Rat& r, std::uint64_t p) {
    Int n = rat_num(r) % p;
    if (n < 0) n += p;
    Int d = rat_den(r) % p;
    std::uint64_t nn = n.convert_to<std::uint64_t>();
    std::uint64_t dd = d.convert_to<std::uint64_t>();
    if (dd == 1) return nn;
    return mul_mod_u64(nn, pow_mod_u64(dd, p - 2, p), p);
}

} // namespace

LaurentQ det_modular(PolyMatQ m, int nthreads) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square");
    std::size_t n = m.rows;
    if (n == 0) return LaurentQ::one();
    int shift = normalize_shifts(m);

    // clear rational content row by row, remembering the scale factor
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j)
            for (auto& [d, k] : m.at(i, j).c) l = boost::multiprecision::lcm(l, rat_den(k));
        if (l != 1) {
            Rat f(l, 1);
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = m.at(i, j) * f;
            scale /= f;
        }
    }

    int dbound = det_degree_bound(m);
    std::size_t npts = static_cast<std::size_t>(dbound) + 1;
    double bound_bits = det_coeff_bound_log2(m) + 1.0; // +1 for sign range
    std::size_t nprimes = static_cast<std::size_t>(bound_bits / 61.0) + 1;

    // dense coefficient tables once per prime
    struct Entry {
        int mindeg;
        std::vector<Rat> coeffs;
    };
    std::vector<Entry> entries(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        entries[i].mindeg = m.a[i].is_zero() ? 0 : m.a[i].min_deg();
        entries[i].coeffs = m.a[i].dense();
    }

    auto run_prime = [&](std::uint64_t p) {
        std::vector<detail::DenseModPoly> mod_entries(n * n);
        for (std::size_t i = 0; i < n * n; ++i) {
            auto& e = entries[i];
            auto& out = mod_entries[i].c;
            out.assign(e.mindeg + e.coeffs.size(), 0);
            for (std::size_t k = 0; k < e.coeffs.size(); ++k)
                out[e.mindeg + k] = rat_mod(e.coeffs[k], p);
        }
        std::vector<std::uint64_t> ys(npts);
        std::vector<std::uint64_t> scratch(n * n);
        for (std::size_t pt = 0; pt < npts; ++pt) {
            for (std::size_t i = 0; i < n * n; ++i)
                scratch[i] = detail::eval_mod(mod_entries[i], pt, p);
            ys[pt] = detail::det_mod(scratch, n, p);
        }
        return detail::interpolate_mod(ys, p);
    };

    int nt = thread_count(nthreads);
    std::vector<std::uint64_t> primes(nprimes);
    for (std::size_t k = 0; k < nprimes; ++k) primes[k] = nth_modulus_prime(k);
    std::vector<std::vector<std::uint64_t>> residues(nprimes);
    if (nt <= 1 || nprimes == 1) {
        for (std::size_t k = 0; k < nprimes; ++k) residues[k] = run_prime(primes[k]);
    } else {
        std::vector<std::future<std::vector<std::uint64_t>>> futs;
        for (std::size_t k = 0; k < nprimes; ++k)
            futs.push_back(std::async(std::launch::async, run_prime, primes[k]));
        for (std::size_t k = 0; k < nprimes; ++k) residues[k] = futs[k].get();
    }

    // CRT with symmetric lift
    LaurentQ det;
    for (std::size_t d = 0; d <= static_cast<std::size_t>(dbound); ++d) {
        Int x = 0, mod = 1;
        for (std::size_t k = 0; k < nprimes; ++k) {
            Int p(primes[k]);
            Int r(residues[k].size() > d ? residues[k][d] : 0);
            // x' == x (mod mod), x' == r (mod p)
            Int diff = (r - x) % p;
            if (diff < 0) diff += p;
            Int modinv = 1;
            {
                // inverse of mod modulo p
                Int base = mod % p;
                std::uint64_t b = base.convert_to<std::uint64_t>();
                modinv = Int(pow_mod_u64(b, primes[k] - 2, primes[k]));
            }
            Int t = (diff * modinv) % p;
            x += t * mod;
            mod *= p;
        }
        if (x * 2 > mod) x -= mod;
        if (x != 0) det.c[static_cast<int>(d)] = Rat(x);
    }
    LaurentQ result;
    for (auto& [d, k] : det.c) {
        Rat v = k * scale;
        if (v != 0) result.c[d + shift] = v;
    }
    return result;
}

LaurentQ poly_matrix_det(const PolyMatQ& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square");
    if (m.rows <= 8) return det_bareiss(m);
    return det_modular(m);
}

LaurentC poly_matrix_det(const PolyMatC& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square");
    // check for purely rational content: route to the fast integer path
    bool rational = true;
    std::uint64_t lvl = 1;
    for (auto& e : m.a)
        for (auto& [d, k] : e.c) {
            lvl = std::lcm(lvl, k.level);
            if (!k.is_rational()) { rational = false; }
        }
    if (rational) {
        PolyMatQ q(m.rows, m.cols);
        for (std::size_t i = 0; i < m.a.size(); ++i)
            for (auto& [d, k] : m.a[i].c) q.a[i].c[d] = k.rational_part();
        LaurentQ dq = poly_matrix_det(q);
        return to_cyclotomic(dq, 1);
    }
    if (m.rows <= 6) return det_bareiss(m);
    return det_interpolate(m);
}

RankWitness column_rank_probe(const PolyMatQ& m, std::uint64_t point_seed) {
    RankWitness w;
    w.prime = nth_modulus_prime(0);
    w.point = point_seed;
    std::uint64_t p = w.prime;
    std::size_t rows = m.rows, cols = m.cols;
    // evaluate entries at t = point modulo p
    std::vector<std::uint64_t> a(rows * cols, 0);
    std::uint64_t inv_pt = pow_mod_u64(point_seed % p, p - 2, p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint64_t acc = 0;
            for (auto& [d, k] : m.at(i, j).c) {
                std::uint64_t coeff = rat_mod(k, p);
                std::uint64_t tp = d >= 0 ? pow_mod_u64(point_seed % p, d, p)
                                          : pow_mod_u64(inv_pt, -d, p);
                acc = (acc + static_cast<unsigned __int128>(coeff) * tp) % p;
            }
            a[i * cols + j] = acc;
        }
    // column rank by elimination
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + j] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
        std::uint64_t inv = pow_mod_u64(a[rank * cols + j], p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t f = mul_mod_u64(a[i * cols + j], inv, p);
            if (f == 0) continue;
            for (std::size_t k = j; k < cols; ++k) {
                std::uint64_t sub = mul_mod_u64(f, a[rank * cols + k], p);
                std::uint64_t& t = a[i * cols + k];
                t = (t >= sub) ? t - sub : t + p - sub;
            }
        }
        ++rank;
    }
    w.rank = rank;
    w.full_column_rank = (rank == cols);
    return w;
}

RankWitness column_rank_probe(const PolyMatC& m, std::uint64_t point_seed) {
    RankWitness w;
    w.prime = 0; // exact evaluation over the cyclotomic field, no modulus
    w.point = point_seed;
    KMat<CyclotomicNum> e = m.eval(CyclotomicNum(Rat(point_seed)));
    w.rank = rank_of(e);
    w.full_column_rank = (w.rank == m.cols);
    return w;
}

} // namespace tav
