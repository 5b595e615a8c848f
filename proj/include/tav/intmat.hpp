#ifndef TAV_INTMAT_HPP
#define TAV_INTMAT_HPP

#include <vector>

#include "tav/numbers.hpp"

namespace tav {

// Dense integer matrix over arbitrary-precision integers.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("IntMat: dimension mismatch");
        IntMat r(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                if (x.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < y.cols; ++j)
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }
    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

struct SmithForm {
    IntMat d;           // diagonal, each entry divides the next
    IntMat u, v;        // unimodular: u * m * v = d
    std::vector<Int> diag() const {
        std::vector<Int> out;
        for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d.at(i, i));
        return out;
    }
};

// Smith normal form with transforms.  Classic pivot-reduce algorithm; pivot
// chosen as a minimal-absolute-value nonzero entry to limit growth.
inline SmithForm smith_normal_form(const IntMat& m) {
    SmithForm s;
    s.d = m;
    s.u = IntMat::identity(m.rows);
    s.v = IntMat::identity(m.cols);
    IntMat& d = s.d;
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < d.cols; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (std::size_t k = 0; k < s.u.cols; ++k) std::swap(s.u.at(i, k), s.u.at(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < d.rows; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (std::size_t k = 0; k < s.v.rows; ++k) std::swap(s.v.at(k, i), s.v.at(k, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) { // row dst += f*src
        for (std::size_t k = 0; k < d.cols; ++k) d.at(dst, k) += f * d.at(src, k);
        for (std::size_t k = 0; k < s.u.cols; ++k) s.u.at(dst, k) += f * s.u.at(src, k);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t k = 0; k < d.rows; ++k) d.at(k, dst) += f * d.at(k, src);
        for (std::size_t k = 0; k < s.v.rows; ++k) s.v.at(k, dst) += f * s.v.at(k, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t k = 0; k < d.cols; ++k) d.at(i, k) = -d.at(i, k);
        for (std::size_t k = 0; k < s.u.cols; ++k) s.u.at(i, k) = -s.u.at(i, k);
    };

    std::size_t t = 0;
    while (t < d.rows && t < d.cols) {
        // find minimal nonzero pivot in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < d.rows; ++i)
            for (std::size_t j = t; j < d.cols; ++j) {
                if (d.at(i, j) == 0) continue;
                Int v = abs(d.at(i, j));
                if (!found || v < best) { found = true; best = v; pi = i; pj = j; }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                add_row(i, t, -q);
                if (d.at(i, t) != 0) { swap_rows(t, i); dirty = true; }
            }
            for (std::size_t j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                add_col(j, t, -q);
                if (d.at(t, j) != 0) { swap_cols(t, j); dirty = true; }
            }
        }
        if (d.at(t, t) < 0) negate_row(t);
        ++t;
    }
    // enforce the divisibility chain
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            if (d.at(i + 1, i + 1) % d.at(i, i) == 0) continue;
            // fold entry (i+1,i+1) into the (i,i) pivot block and re-reduce
            add_col(i, i + 1, 1);
            std::size_t save = t;
            t = i;
            while (t < save) {
                std::size_t pi = t, pj = t;
                bool found = false;
                Int best = 0;
                for (std::size_t r = t; r < d.rows; ++r)
                    for (std::size_t c = t; c < d.cols; ++c) {
                        if (d.at(r, c) == 0) continue;
                        Int v = abs(d.at(r, c));
                        if (!found || v < best) { found = true; best = v; pi = r; pj = c; }
                    }
                if (!found) break;
                swap_rows(t, pi);
                swap_cols(t, pj);
                bool dirty = true;
                while (dirty) {
                    dirty = false;
                    for (std::size_t r = t + 1; r < d.rows; ++r) {
                        if (d.at(r, t) == 0) continue;
                        Int q = d.at(r, t) / d.at(t, t);
                        add_row(r, t, -q);
                        if (d.at(r, t) != 0) { swap_rows(t, r); dirty = true; }
                    }
                    for (std::size_t c = t + 1; c < d.cols; ++c) {
                        if (d.at(t, c) == 0) continue;
                        Int q = d.at(t, c) / d.at(t, t);
                        add_col(c, t, -q);
                        if (d.at(t, c) != 0) { swap_cols(t, c); dirty = true; }
                    }
                }
                if (d.at(t, t) < 0) negate_row(t);
                ++t;
            }
            changed = true;
        }
    }
    return s;
}

} // namespace tav

#endif
