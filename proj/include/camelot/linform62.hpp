#pragma once

// The 15-factor pairwise-interaction form over six index groups
//
//   X = sum_{a,b,c,d,e,f} prod_{pairs (s,t)} chi^{(s,t)}_{x_s x_t}
//
// with four evaluation routes: the direct six-fold sum (oracle scale), the
// two-level fast-matrix-multiplication route, a low-space circuit that
// splits the sum into R independent rank-one terms, and the latter's proof
// polynomial P(x) of degree <= 3R whose values at x = 1..R are the circuit
// terms. The single-matrix form is the family with all members aliased.

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "camelot/mm_decomp.hpp"

namespace camelot {

struct ChiMatrix {
    u64 n = 0;
    std::vector<Fp> a;            // n*n row-major
    std::vector<u64> mask;        // per-row bitmask when 0/1-valued and n <= 64

    ChiMatrix() = default;
    ChiMatrix(u64 n_, std::vector<Fp> entries) : n(n_), a(std::move(entries)) {
        CAMELOT_CHECK(a.size() == n * n);
        build_mask();
    }
    Fp at(u64 i, u64 j) const { return a[i * n + j]; }

    void build_mask() {
        mask.clear();
        if (n == 0 || n > 64) return;
        std::vector<u64> rows(n, 0);
        for (u64 i = 0; i < n; i++)
            for (u64 j = 0; j < n; j++) {
                const u64 v = a[i * n + j].value();
                if (v > 1) return;
                if (v) rows[i] |= 1ull << j;
            }
        mask = std::move(rows);
    }

    // Zero-pads to size m >= n; padded rows and columns contribute nothing.
    ChiMatrix padded(u64 m) const {
        CAMELOT_CHECK(m >= n);
        if (m == n) return *this;
        CAMELOT_CHECK(!a.empty());
        const u64 q = a[0].modulus();
        std::vector<Fp> b(m * m, Fp::raw(0, q));
        for (u64 i = 0; i < n; i++)
            for (u64 j = 0; j < n; j++) b[i * m + j] = a[i * n + j];
        return ChiMatrix(m, std::move(b));
    }
};

struct ChiFamily {
    u64 n = 0;
    std::array<ChiMatrix, 15> member;   // indexed by slot(s, t)

    // Unordered group pair (s, t), 1 <= s < t <= 6.
    static u32 slot(u32 s, u32 t) {
        CAMELOT_CHECK(1 <= s && s < t && t <= 6);
        return (s - 1) * (12 - s) / 2 + (t - s - 1);
    }
    const ChiMatrix& at(u32 s, u32 t) const { return member[slot(s, t)]; }

    static ChiFamily uniform(const ChiMatrix& chi) {
        ChiFamily f;
        f.n = chi.n;
        for (auto& m : f.member) m = chi;
        return f;
    }
    ChiFamily padded(u64 m) const {
        ChiFamily f;
        f.n = m;
        for (size_t i = 0; i < 15; i++) f.member[i] = member[i].padded(m);
        return f;
    }
    bool all_boolean() const {
        for (const auto& m : member)
            if (m.mask.empty()) return false;
        return true;
    }
    u64 field() const { return member[0].a.empty() ? 0 : member[0].a[0].modulus(); }
};

// Literal six-fold sum; oracle only.
inline Fp form62_direct(const ChiFamily& fam) {
    const u64 n = fam.n;
    if (n > 16) throw std::invalid_argument("form62_direct: oracle guard n <= 16");
    Modulus m;
    m.q = fam.field();
    const ChiMatrix &x12 = fam.at(1, 2), &x13 = fam.at(1, 3), &x14 = fam.at(1, 4),
                    &x15 = fam.at(1, 5), &x16 = fam.at(1, 6), &x23 = fam.at(2, 3),
                    &x24 = fam.at(2, 4), &x25 = fam.at(2, 5), &x26 = fam.at(2, 6),
                    &x34 = fam.at(3, 4), &x35 = fam.at(3, 5), &x36 = fam.at(3, 6),
                    &x45 = fam.at(4, 5), &x46 = fam.at(4, 6), &x56 = fam.at(5, 6);
    Fp total = fp_zero(m);
    for (u64 a = 0; a < n; a++)
        for (u64 b = 0; b < n; b++) {
            Fp pab = x12.at(a, b);
            if (pab.is_zero()) continue;
            for (u64 c = 0; c < n; c++) {
                Fp pabc = pab * x13.at(a, c) * x23.at(b, c);
                if (pabc.is_zero()) continue;
                for (u64 d = 0; d < n; d++) {
                    Fp pabcd = pabc * x14.at(a, d) * x24.at(b, d) * x34.at(c, d);
                    if (pabcd.is_zero()) continue;
                    for (u64 e = 0; e < n; e++) {
                        Fp p5 = pabcd * x15.at(a, e) * x25.at(b, e) * x35.at(c, e) * x45.at(d, e);
                        if (p5.is_zero()) continue;
                        for (u64 f = 0; f < n; f++) {
                            Fp p6 = p5 * x16.at(a, f) * x26.at(b, f) * x36.at(c, f) *
                                    x46.at(d, f) * x56.at(e, f);
                            total += p6;
                        }
                    }
                }
            }
        }
    return total;
}

// Two-level route: three N^2 x N^2 tables and one big product.
inline Fp form62_np(const ChiFamily& fam) {
    const u64 n = fam.n;
    Modulus m;
    m.q = fam.field();
    const u64 nn = n * n;
    std::vector<Fp> U(nn * nn, fp_zero(m)), S(nn * nn, fp_zero(m)), T(nn * nn, fp_zero(m));
    for (u64 a = 0; a < n; a++)
        for (u64 b = 0; b < n; b++)
            for (u64 c = 0; c < n; c++)
                for (u64 d = 0; d < n; d++) {
                    U[(a * n + b) * nn + (c * n + d)] = fam.at(1, 2).at(a, b) *
                                                        fam.at(1, 3).at(a, c) *
                                                        fam.at(1, 4).at(a, d) *
                                                        fam.at(2, 3).at(b, c) *
                                                        fam.at(2, 4).at(b, d);
                    S[(a * n + b) * nn + (c * n + d)] = fam.at(1, 5).at(a, c) *
                                                        fam.at(1, 6).at(a, d) *
                                                        fam.at(2, 5).at(b, c) *
                                                        fam.at(2, 6).at(b, d) *
                                                        fam.at(5, 6).at(c, d);
                    T[(a * n + b) * nn + (c * n + d)] = fam.at(3, 4).at(a, b) *
                                                        fam.at(3, 5).at(a, c) *
                                                        fam.at(3, 6).at(a, d) *
                                                        fam.at(4, 5).at(b, c) *
                                                        fam.at(4, 6).at(b, d);
                }
    Fp total = fp_zero(m);
    for (u64 ab = 0; ab < nn; ab++)
        for (u64 cd = 0; cd < nn; cd++) {
            Fp v = fp_zero(m);
            for (u64 ef = 0; ef < nn; ef++) v += S[ab * nn + ef] * T[cd * nn + ef];
            total += U[ab * nn + cd] * v;
        }
    return total;
}

namespace detail62 {

// One rank-one term: given the three coefficient matrices (alpha as
// coef_a[d*N+e], beta as coef_b[e*N+f], gamma as coef_c[d*N+f]), contracts
// the 15 interaction matrices in O(N^3) and O(N^2) space.
inline Fp stage(const ChiFamily& fam, const std::vector<Fp>& coef_a, const std::vector<Fp>& coef_b,
                const std::vector<Fp>& coef_c) {
    const u64 n = fam.n;
    Modulus m;
    m.q = fam.field();
    const ChiMatrix &x12 = fam.at(1, 2), &x13 = fam.at(1, 3), &x14 = fam.at(1, 4),
                    &x15 = fam.at(1, 5), &x16 = fam.at(1, 6), &x23 = fam.at(2, 3),
                    &x24 = fam.at(2, 4), &x25 = fam.at(2, 5), &x26 = fam.at(2, 6),
                    &x34 = fam.at(3, 4), &x35 = fam.at(3, 5), &x36 = fam.at(3, 6),
                    &x45 = fam.at(4, 5), &x46 = fam.at(4, 6), &x56 = fam.at(5, 6);
    const Fp zero = fp_zero(m);
    const bool masked = fam.all_boolean();

    std::vector<Fp> tmp(n * n, zero), Am(n * n, zero), Bm(n * n, zero), Cm(n * n, zero);
    std::vector<Fp> inner(n * n, zero);

    // A[a][b] = sum_d x14[a][d] x24[b][d] H[a][d],
    // H[a][d] = sum_e' alpha[d][e'] x15[a][e'] x45[d][e'].
    for (u64 d = 0; d < n; d++)
        for (u64 e = 0; e < n; e++)
            tmp[d * n + e] = x45.mask.empty() || (x45.mask[d] >> e & 1)
                                 ? coef_a[d * n + e] * (x45.mask.empty() ? x45.at(d, e) : fp_one(m))
                                 : zero;
    for (u64 a = 0; a < n; a++)
        for (u64 d = 0; d < n; d++) {
            Fp h = zero;
            if (masked) {
                u64 bits = x15.mask[a];
                while (bits) {
                    const u64 e = u64(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    h += tmp[d * n + e];
                }
            } else {
                for (u64 e = 0; e < n; e++) h += x15.at(a, e) * x45.at(d, e) * coef_a[d * n + e];
            }
            inner[a * n + d] = h;
        }
    for (u64 a = 0; a < n; a++)
        for (u64 b = 0; b < n; b++) {
            Fp acc = zero;
            if (masked) {
                u64 bits = x14.mask[a] & x24.mask[b];
                while (bits) {
                    const u64 d = u64(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    acc += inner[a * n + d];
                }
            } else {
                for (u64 d = 0; d < n; d++)
                    acc += x14.at(a, d) * x24.at(b, d) * inner[a * n + d];
            }
            Am[a * n + b] = acc;
        }

    // B[b][c] = sum_e x25[b][e] x35[c][e] K[b][e],
    // K[b][e] = sum_f' beta[e][f'] x26[b][f'] x56[e][f'].
    for (u64 e = 0; e < n; e++)
        for (u64 f = 0; f < n; f++)
            tmp[e * n + f] = x56.mask.empty() || (x56.mask[e] >> f & 1)
                                 ? coef_b[e * n + f] * (x56.mask.empty() ? x56.at(e, f) : fp_one(m))
                                 : zero;
    for (u64 b = 0; b < n; b++)
        for (u64 e = 0; e < n; e++) {
            Fp k = zero;
            if (masked) {
                u64 bits = x26.mask[b];
                while (bits) {
                    const u64 f = u64(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    k += tmp[e * n + f];
                }
            } else {
                for (u64 f = 0; f < n; f++) k += x26.at(b, f) * x56.at(e, f) * coef_b[e * n + f];
            }
            inner[b * n + e] = k;
        }
    for (u64 b = 0; b < n; b++)
        for (u64 c = 0; c < n; c++) {
            Fp acc = zero;
            if (masked) {
                u64 bits = x25.mask[b] & x35.mask[c];
                while (bits) {
                    const u64 e = u64(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    acc += inner[b * n + e];
                }
            } else {
                for (u64 e = 0; e < n; e++)
                    acc += x25.at(b, e) * x35.at(c, e) * inner[b * n + e];
            }
            Bm[b * n + c] = acc;
        }

    // C[a][c] = sum_f x16[a][f] x36[c][f] L[c][f],
    // L[c][f] = sum_d' gamma[d'][f] x34[c][d'] x46[d'][f].
    for (u64 d = 0; d < n; d++)
        for (u64 f = 0; f < n; f++)
            tmp[d * n + f] = x46.mask.empty() || (x46.mask[d] >> f & 1)
                                 ? coef_c[d * n + f] * (x46.mask.empty() ? x46.at(d, f) : fp_one(m))
                                 : zero;
    for (u64 c = 0; c < n; c++)
        for (u64 f = 0; f < n; f++) {
            Fp l = zero;
            if (masked) {
                u64 bits = x34.mask[c];
                while (bits) {
                    const u64 d = u64(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    l += tmp[d * n + f];
                }
            } else {
                for (u64 d = 0; d < n; d++) l += x34.at(c, d) * x46.at(d, f) * coef_c[d * n + f];
            }
            inner[c * n + f] = l;
        }
    for (u64 a = 0; a < n; a++)
        for (u64 c = 0; c < n; c++) {
            Fp acc = zero;
            if (masked) {
                u64 bits = x16.mask[a] & x36.mask[c];
                while (bits) {
                    const u64 f = u64(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    acc += inner[c * n + f];
                }
            } else {
                for (u64 f = 0; f < n; f++)
                    acc += x16.at(a, f) * x36.at(c, f) * inner[c * n + f];
            }
            Cm[a * n + c] = acc;
        }

    // P = sum_{a,b} x12[a][b] A[a][b] Q[a][b],
    // Q[a][b] = sum_c x13[a][c] x23[b][c] B[b][c] C[a][c].
    Fp total = fp_zero(m);
    for (u64 a = 0; a < n; a++)
        for (u64 b = 0; b < n; b++) {
            if (masked && !(x12.mask[a] >> b & 1)) continue;
            Fp qab = zero;
            if (masked) {
                u64 bits = x13.mask[a] & x23.mask[b];
                while (bits) {
                    const u64 c = u64(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    qab += Bm[b * n + c] * Cm[a * n + c];
                }
            } else {
                for (u64 c = 0; c < n; c++)
                    qab += x13.at(a, c) * x23.at(b, c) * Bm[b * n + c] * Cm[a * n + c];
            }
            Fp term = Am[a * n + b] * qab;
            if (!masked) term *= x12.at(a, b);
            total += term;
        }
    return total;
}

// Integer coefficient matrices of one rank-one term, mapped into the field.
inline void term_coeffs(const TriDecomp& dec, u64 r, const Modulus& m, std::vector<Fp>& ca,
                        std::vector<Fp>& cb, std::vector<Fp>& cc) {
    const u64 n = dec.n();
    const Fp one = fp_one(m), zero = fp_zero(m);
    ca.assign(n * n, zero);
    cb.assign(n * n, zero);
    cc.assign(n * n, zero);
    for (u64 d = 0; d < n; d++)
        for (u64 e = 0; e < n; e++) {
            if (int v = dec.alpha(d, e, r)) ca[d * n + e] = v > 0 ? one : -one;
            if (int v = dec.beta(d, e, r)) cb[d * n + e] = v > 0 ? one : -one;
            if (int v = dec.gamma(d, e, r)) cc[d * n + e] = v > 0 ? one : -one;
        }
}

struct CoeffTriple {
    std::vector<Fp> a, b, c;
};

// Coefficient polynomials of the proof, evaluated at x0: one Lagrange basis
// over the nodes 1..R followed by three Yates runs over the Kronecker
// structure. Values at small x0 (the standard evaluation window) are
// memoized per (decomposition, modulus); random verification points bypass
// the cache.
inline std::shared_ptr<const CoeffTriple> proof_coeffs_at(const TriDecomp& dec, const Modulus& m,
                                                          Fp x0) {
    const u64 R = dec.rank();
    const u64 n = dec.n();
    auto compute = [&]() {
        auto out = std::make_shared<CoeffTriple>();
        std::vector<Fp> basis = lagrange_basis_at(R, x0);
        const BaseMatrix ab = dec.alpha_base(), bb = dec.beta_base(), cb = dec.gamma_base();
        std::vector<Fp> ya = yates_classical(ab, basis, dec.power);
        std::vector<Fp> yb = yates_classical(bb, basis, dec.power);
        std::vector<Fp> yc = yates_classical(cb, basis, dec.power);
        out->a.resize(n * n);
        out->b.resize(n * n);
        out->c.resize(n * n);
        for (u64 d = 0; d < n; d++)
            for (u64 e = 0; e < n; e++) {
                const u64 mix = pair_index(dec, d, e);
                out->a[d * n + e] = ya[mix];
                out->b[d * n + e] = yb[mix];
                out->c[d * n + e] = yc[mix];
            }
        return out;
    };

    const u64 cache_limit = 12 * R + 24;
    if (x0.value() >= cache_limit) return compute();

    struct Key {
        std::string tag;
        u32 power;
        u64 q;
        bool operator<(const Key& o) const {
            return std::tie(tag, power, q) < std::tie(o.tag, o.power, o.q);
        }
    };
    struct Slot {
        std::mutex mu;
        std::map<u64, std::shared_ptr<const CoeffTriple>> pts;
    };
    static std::mutex registry_mu;
    static std::map<Key, std::shared_ptr<Slot>> registry;
    std::shared_ptr<Slot> slot;
    {
        std::lock_guard<std::mutex> lk(registry_mu);
        auto& s = registry[Key{dec.tag, dec.power, m.q}];
        if (!s) s = std::make_shared<Slot>();
        slot = s;
    }
    {
        std::lock_guard<std::mutex> lk(slot->mu);
        auto it = slot->pts.find(x0.value());
        if (it != slot->pts.end()) return it->second;
    }
    auto value = compute();
    {
        std::lock_guard<std::mutex> lk(slot->mu);
        slot->pts.emplace(x0.value(), value);
    }
    return value;
}

}  // namespace detail62

// Low-space circuit: X = sum over R rank-one terms. `term_count`, when
// given, reports how many terms were processed.
inline Fp form62_circuit(const ChiFamily& fam, const TriDecomp& dec, u64* term_count = nullptr) {
    Modulus m;
    m.q = fam.field();
    const u64 N = dec.n();
    CAMELOT_CHECK(N >= fam.n);
    const ChiFamily padded = fam.n == N ? fam : fam.padded(N);
    const u64 R = dec.rank();
    Fp total = fp_zero(m);
    std::vector<Fp> ca, cb, cc;
    for (u64 r = 0; r < R; r++) {
        detail62::term_coeffs(dec, r, m, ca, cb, cc);
        total += detail62::stage(padded, ca, cb, cc);
    }
    if (term_count) *term_count = R;
    return total;
}

// Proof polynomial value P(x0); P has degree <= 3R and P(r) for r = 1..R
// are the circuit terms.
inline Fp form62_proof_eval(const ChiFamily& fam, const TriDecomp& dec, Fp x0) {
    Modulus m;
    m.q = fam.field();
    const u64 R = dec.rank();
    if (m.q < 3 * R + 1) throw std::invalid_argument("form62_proof_eval: q < 3R+1");
    const u64 N = dec.n();
    CAMELOT_CHECK(N >= fam.n);
    const ChiFamily padded = fam.n == N ? fam : fam.padded(N);
    auto coeffs = detail62::proof_coeffs_at(dec, m, x0);
    return detail62::stage(padded, coeffs->a, coeffs->b, coeffs->c);
}

}  // namespace camelot
