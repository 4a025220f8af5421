#pragma once

// Trilinear decompositions of the square matrix multiplication tensor,
// with Kronecker powering. A decomposition of rank R for <n,n,n> is three
// coefficient tables alpha, beta, gamma with
//
//   sum_{d,e,f} u_{de} v_{ef} w_{df}
//     = sum_{r=1}^{R} (sum alpha_{de}(r) u_{de})
//                     (sum beta_{ef}(r) v_{ef})
//                     (sum gamma_{df}(r) w_{df}).
//
// Kronecker powers keep the base tables and expose coefficients as digit
// products, so nothing of size N^2 x R is ever materialized.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "camelot/yates.hpp"

namespace camelot {

struct TriDecomp {
    std::string tag;               // identifies the base for caching
    u32 n0 = 0, r0 = 0;            // base dimensions: <n0,n0,n0>, rank r0
    u32 power = 1;                 // Kronecker level
    std::vector<int> a0, b0, c0;   // n0^2 x r0, row index d*n0+e (etc.), col r

    u64 n() const { return upow(n0, power); }
    u64 rank() const { return upow(r0, power); }
    // Effective matrix-multiplication exponent of the base.
    double effective_exponent() const { return std::log2(double(r0)) / std::log2(double(n0)); }

    int base_coeff(const std::vector<int>& tab, u32 row, u32 r) const { return tab[row * r0 + r]; }

    // Coefficient of the Kronecker power: the product over matched base
    // digits of (d, e) and r. Base entries are in {-1, 0, 1}, so the product
    // is too.
    int coeff(const std::vector<int>& tab, u64 d, u64 e, u64 r) const {
        int prod = 1;
        for (u32 u = 0; u < power && prod != 0; u++) {
            const u32 dd = static_cast<u32>(d % n0), ee = static_cast<u32>(e % n0);
            const u32 rr = static_cast<u32>(r % r0);
            prod *= base_coeff(tab, dd * n0 + ee, rr);
            d /= n0;
            e /= n0;
            r /= r0;
        }
        return prod;
    }
    int alpha(u64 d, u64 e, u64 r) const { return coeff(a0, d, e, r); }
    int beta(u64 e, u64 f, u64 r) const { return coeff(b0, e, f, r); }
    int gamma(u64 d, u64 f, u64 r) const { return coeff(c0, d, f, r); }

    // Base matrix views for Yates runs: (n0^2) x r0 tables transposed to
    // r0 x n0^2 map a length-N^2 vector of pair indices to a length-R vector.
    BaseMatrix alpha_base() const { return BaseMatrix(n0 * n0, r0, a0); }
    BaseMatrix beta_base() const { return BaseMatrix(n0 * n0, r0, b0); }
    BaseMatrix gamma_base() const { return BaseMatrix(n0 * n0, r0, c0); }
};

// Kronecker digit interleaving: the row index of the pair (d, e) inside the
// power of an (n0^2 x r0) base, digits of d and e mixed positionwise.
inline u64 pair_index(const TriDecomp& dec, u64 d, u64 e) {
    u64 out = 0, mult = 1;
    for (u32 u = 0; u < dec.power; u++) {
        out += ((d % dec.n0) * dec.n0 + (e % dec.n0)) * mult;
        mult *= dec.n0 * dec.n0;
        d /= dec.n0;
        e /= dec.n0;
    }
    return out;
}

// Strassen's rank-7 decomposition of <2,2,2>, in the w_{df} orientation.
inline TriDecomp strassen_base() {
    TriDecomp d;
    d.tag = "strassen";
    d.n0 = 2;
    d.r0 = 7;
    d.power = 1;
    d.a0 = {1, 0, 1, 0, 1, -1, 0,
            0, 0, 0, 0, 1, 0, 1,
            0, 1, 0, 0, 0, 1, 0,
            1, 1, 0, 1, 0, 0, -1};
    d.b0 = {1, 1, 0, -1, 0, 1, 0,
            0, 0, 1, 0, 0, 1, 0,
            0, 0, 0, 1, 0, 0, 1,
            1, 0, -1, 0, 1, 0, 1};
    d.c0 = {1, 0, 0, 1, -1, 0, 1,
            0, 0, 1, 0, 1, 0, 0,
            0, 1, 0, 1, 0, 0, 0,
            1, -1, 1, 0, 0, 1, 0};
    return d;
}

// Reference rank-n0^3 decomposition: r = (i, j, k) picks out one product.
inline TriDecomp naive_base(u32 n0) {
    CAMELOT_CHECK(n0 >= 1);
    TriDecomp d;
    d.tag = "naive" + std::to_string(n0);
    d.n0 = n0;
    d.r0 = n0 * n0 * n0;
    d.power = 1;
    const u32 cells = n0 * n0;
    d.a0.assign(cells * d.r0, 0);
    d.b0.assign(cells * d.r0, 0);
    d.c0.assign(cells * d.r0, 0);
    for (u32 i = 0; i < n0; i++)
        for (u32 j = 0; j < n0; j++)
            for (u32 k = 0; k < n0; k++) {
                const u32 r = (i * n0 + j) * n0 + k;
                d.a0[(i * n0 + j) * d.r0 + r] = 1;
                d.b0[(j * n0 + k) * d.r0 + r] = 1;
                d.c0[(i * n0 + k) * d.r0 + r] = 1;
            }
    return d;
}

inline TriDecomp kronecker_power(const TriDecomp& base, u32 t) {
    CAMELOT_CHECK(t >= 1);
    TriDecomp d = base;
    d.power = base.power * t;
    for (u64 dim : {u64(d.n0), u64(d.r0)}) {
        u64 acc = 1;
        for (u32 u = 0; u < d.power; u++) {
            if (acc > (1ull << 62) / dim)
                throw std::out_of_range("kronecker_power: dimensions overflow");
            acc *= dim;
        }
    }
    return d;
}

// Brute-force validity check over all unit tensors; n = dec.n() must stay
// small (the check is n^6 R).
inline bool verify_decomposition(const TriDecomp& dec, u64 n) {
    CAMELOT_CHECK(n == dec.n());
    CAMELOT_CHECK(n <= 8);
    const u64 R = dec.rank();
    for (u64 d0 = 0; d0 < n; d0++)
        for (u64 e0 = 0; e0 < n; e0++)
            for (u64 e1 = 0; e1 < n; e1++)
                for (u64 f1 = 0; f1 < n; f1++)
                    for (u64 d2 = 0; d2 < n; d2++)
                        for (u64 f2 = 0; f2 < n; f2++) {
                            i64 sum = 0;
                            for (u64 r = 0; r < R; r++)
                                sum += i64(dec.alpha(d0, e0, r)) * dec.beta(e1, f1, r) *
                                       dec.gamma(d2, f2, r);
                            const i64 expect = (d0 == d2 && e0 == e1 && f1 == f2) ? 1 : 0;
                            if (sum != expect) return false;
                        }
    return true;
}

// N x N matrix product through the decomposition (test oracle).
inline std::vector<Fp> decomp_multiply(const TriDecomp& dec, const std::vector<Fp>& u,
                                       const std::vector<Fp>& v, const Modulus& m) {
    const u64 n = dec.n(), R = dec.rank();
    CAMELOT_CHECK(u.size() == n * n && v.size() == n * n);
    std::vector<Fp> w(n * n, fp_zero(m));
    for (u64 r = 0; r < R; r++) {
        Fp ar = fp_zero(m), br = fp_zero(m);
        for (u64 d = 0; d < n; d++)
            for (u64 e = 0; e < n; e++) {
                const int c = dec.alpha(d, e, r);
                if (c) ar += detail::scaled_entry(c, u[d * n + e]);
            }
        for (u64 e = 0; e < n; e++)
            for (u64 f = 0; f < n; f++) {
                const int c = dec.beta(e, f, r);
                if (c) br += detail::scaled_entry(c, v[e * n + f]);
            }
        const Fp p = ar * br;
        if (p.is_zero()) continue;
        for (u64 d = 0; d < n; d++)
            for (u64 f = 0; f < n; f++) {
                const int c = dec.gamma(d, f, r);
                if (c) w[d * n + f] += detail::scaled_entry(c, p);
            }
    }
    return w;
}

}  // namespace camelot
