#pragma once

// Yates-style multiplication by a Kronecker power A^(tensor k) of a small
// t x s base matrix: the classical k-level scheme, a split/sparse variant
// that emits the output in independent parts, and the polynomial extension
// of the outer loop used for proof polynomials.
//
// Index convention, used by every consumer of this header: an index
// j in [d^k] is the base-d numeral (j_1, ..., j_k) with j_1 the most
// significant digit. The split/sparse outer loop owns the trailing
// (least significant) k - l digits of the output index.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "camelot/poly.hpp"

namespace camelot {

struct BaseMatrix {
    u32 rows = 0, cols = 0;       // t x s
    std::vector<int> a;           // row-major small integer entries

    BaseMatrix() = default;
    BaseMatrix(u32 t, u32 s, std::vector<int> entries) : rows(t), cols(s), a(std::move(entries)) {
        CAMELOT_CHECK(rows >= 1 && cols >= 1);
        CAMELOT_CHECK(a.size() == static_cast<size_t>(rows) * cols);
    }
    int at(u32 i, u32 j) const { return a[i * cols + j]; }
    BaseMatrix transposed() const {
        std::vector<int> b(a.size());
        for (u32 i = 0; i < rows; i++)
            for (u32 j = 0; j < cols; j++) b[j * rows + i] = a[i * cols + j];
        return BaseMatrix(cols, rows, std::move(b));
    }
};

inline u64 upow(u64 base, u32 e) {
    u64 r = 1;
    while (e--) {
        CAMELOT_CHECK(r <= (1ull << 62) / base);
        r *= base;
    }
    return r;
}

// Nonzero pattern of a vector in [s^k], with values.
struct SparseVec {
    std::vector<u64> index;
    std::vector<Fp> value;

    size_t size() const { return index.size(); }
};

namespace detail {

inline Fp scaled_entry(int a, Fp x) {
    // Base entries are small integers; -1/0/+1 dominate in practice.
    if (a == 0) return Fp::raw(0, x.modulus());
    if (a == 1) return x;
    if (a == -1) return -x;
    Modulus m;
    m.q = x.modulus();
    if (a > 0) return Fp(static_cast<u64>(a), m) * x;
    return -(Fp(static_cast<u64>(-a), m) * x);
}

}  // namespace detail

// y = A^(tensor k) x, one digit position at a time.
inline std::vector<Fp> yates_classical(const BaseMatrix& A, const std::vector<Fp>& x, u32 k) {
    const u64 s = A.cols, t = A.rows;
    const u64 in_size = upow(s, k);
    if (x.size() != in_size) throw std::invalid_argument("yates_classical: size mismatch");
    if (k == 0) return x;
    const u64 q = x.empty() ? 0 : x[0].modulus();
    std::vector<Fp> cur(x), next;
    // Level l transforms digit l (1-based from the most significant end):
    // input layout (i_1..i_{l-1} | j_l | j_{l+1}..j_k).
    for (u32 l = 1; l <= k; l++) {
        const u64 hi = upow(t, l - 1);
        const u64 lo = upow(s, k - l);
        next.assign(hi * t * lo, Fp::raw(0, q));
        for (u64 h = 0; h < hi; h++) {
            for (u64 i = 0; i < t; i++) {
                const u64 out_base = (h * t + i) * lo;
                for (u64 j = 0; j < s; j++) {
                    const int a = A.at(i, j);
                    if (a == 0) continue;
                    const u64 in_base = (h * s + j) * lo;
                    if (a == 1) {
                        for (u64 v = 0; v < lo; v++) next[out_base + v] += cur[in_base + v];
                    } else if (a == -1) {
                        for (u64 v = 0; v < lo; v++) next[out_base + v] -= cur[in_base + v];
                    } else {
                        for (u64 v = 0; v < lo; v++)
                            next[out_base + v] += detail::scaled_entry(a, cur[in_base + v]);
                    }
                }
            }
        }
        cur.swap(next);
    }
    return cur;
}

inline u32 default_split_level(const BaseMatrix& A, size_t nnz) {
    CAMELOT_CHECK(nnz >= 1);
    u32 l = 0;
    u64 cap = 1;
    while (cap < nnz) {
        cap *= A.rows;
        l++;
    }
    return l;
}

// One part of y = A^(tensor k) x for sparse x: the t^l output entries whose
// trailing k-l digits equal `part`. Parts are independent of each other.
inline std::vector<Fp> yates_split_sparse(const BaseMatrix& A, const SparseVec& x, u32 k,
                                          u32 level, u64 part) {
    const u64 s = A.cols, t = A.rows;
    CAMELOT_CHECK(t >= s);
    if (x.size() == 0) throw std::invalid_argument("yates_split_sparse: empty input");
    CAMELOT_CHECK(level <= k);
    const u64 outer = upow(t, k - level);
    if (part >= outer) throw std::invalid_argument("yates_split_sparse: part out of range");
    const u64 q = x.value[0].modulus();
    const u64 in_lo = upow(s, k - level);

    //

    std::vector<Fp> base(upow(s, level), Fp::raw(0, q));
    for (size_t u = 0; u < x.size(); u++) {
        const u64 j = x.index[u];
        CAMELOT_CHECK(j < upow(s, k));
        const u64 j_hi = j / in_lo;    // leading `level` digits
        u64 j_lo = j % in_lo;          // trailing digits, consumed by `part`
        // Coefficient prod over trailing digits of A[part_digit][j_digit].
        u64 p = part;
        int coeff = 1;
        u64 jl = j_lo;
        for (u32 d = 0; d < k - level && coeff != 0; d++) {
            const u32 pd = static_cast<u32>(p % t);
            const u32 jd = static_cast<u32>(jl % s);
            coeff *= A.at(pd, jd);
            p /= t;
            jl /= s;
        }
        if (coeff != 0) base[j_hi] += detail::scaled_entry(coeff, x.value[u]);
    }
    return yates_classical(A, base, level);
}

// Lagrange basis over nodes 1..W evaluated at z0 (unit vector when z0 is a
// node). Outer part p corresponds to field value p+1.
inline std::vector<Fp> outer_basis_at(u64 W, Fp z0) { return lagrange_basis_at(W, z0); }

// Polynomial extension of the split/sparse algorithm: replaces the outer
// loop with an indeterminate and evaluates the t^level output polynomials at
// z0. At z0 = p+1 for part p the result equals yates_split_sparse(.., p);
// each output coordinate has degree <= t^(k-level) - 1 in z.
inline std::vector<Fp> yates_poly_extension_eval(const BaseMatrix& A, const SparseVec& x, u32 k,
                                                 u32 level, Fp z0) {
    const u64 s = A.cols, t = A.rows;
    CAMELOT_CHECK(t >= s);
    if (x.size() == 0) throw std::invalid_argument("yates_poly_extension_eval: empty input");
    CAMELOT_CHECK(level <= k);
    const u64 outer = upow(t, k - level);
    const u64 q = z0.modulus();
    if (q <= outer) throw std::invalid_argument("yates_poly_extension_eval: modulus too small");

    // Basis values at z0, then one classical Yates run with the transposed
    // base over the trailing digits gives the per-suffix coefficients.
    std::vector<Fp> basis = outer_basis_at(outer, z0);
    std::vector<Fp> coeff = yates_classical(A.transposed(), basis, k - level);

    const u64 in_lo = upow(s, k - level);
    std::vector<Fp> base(upow(s, level), Fp::raw(0, q));
    for (size_t u = 0; u < x.size(); u++) {
        const u64 j = x.index[u];
        CAMELOT_CHECK(j < upow(s, k));
        base[j / in_lo] += coeff[j % in_lo] * x.value[u];
    }
    return yates_classical(A, base, level);
}

// In-place subset-sum (zeta) transform over an n-bit cube: out[Y] =
// sum_{Z subseteq Y} in[Z]. This is yates_classical with base [[1,0],[1,1]]
// specialized to any value type supporting +=.
template <typename T>
void subset_zeta_inplace(std::vector<T>& table, u32 bits) {
    CAMELOT_CHECK(table.size() == (size_t{1} << bits));
    for (u32 b = 0; b < bits; b++) {
        const u64 bit = 1ull << b;
        for (u64 y = 0; y < table.size(); y++)
            if (y & bit) table[y] += table[y ^ bit];
    }
}

}  // namespace camelot
