#pragma once

// Nonsystematic Reed-Solomon code: the codeword is the evaluation of the
// message polynomial at distinct points, and decoding runs a partial
// extended Euclidean algorithm (Gao's decoder) that both recovers the
// message and pinpoints the corrupted evaluations.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "camelot/poly.hpp"

namespace camelot {

constexpr int kShareExternal = -1;

struct CodewordShare {
    Fp point;
    Fp value;
    int origin = kShareExternal;   // node id, or external
};

struct DecodeResult {
    Poly proof;
    std::set<u64> error_points;    // points whose received value disagreed
};

inline std::vector<CodewordShare> rs_encode(const Poly& p, const std::vector<Fp>& points) {
    std::set<u64> distinct;
    for (const auto& x : points)
        if (!distinct.insert(x.value()).second)
            throw std::invalid_argument("rs_encode: duplicate points");
    CAMELOT_CHECK(p.degree() < static_cast<i64>(points.size()));
    std::vector<CodewordShare> shares;
    shares.reserve(points.size());
    for (const auto& x : points) shares.push_back({x, poly_eval(p, x), kShareExternal});
    return shares;
}

// Decodes a received word with e shares against a degree bound d. Succeeds
// whenever at most (e-d-1)/2 values are corrupted; the error set is exact.
// Missing shares simply shrink e: the decoder works from whatever subset of
// correct entries it receives.
inline std::optional<DecodeResult> gao_decode(const std::vector<CodewordShare>& received, i64 d) {
    const i64 e = static_cast<i64>(received.size());
    if (e < d + 1) throw std::invalid_argument("gao_decode: need at least d+1 shares");
    CAMELOT_CHECK(d >= 0);
    const u64 q = received[0].point.modulus();
    Modulus m;
    m.q = q;

    std::vector<Fp> xs, ys;
    xs.reserve(e);
    ys.reserve(e);
    std::set<u64> distinct;
    for (const auto& s : received) {
        if (!distinct.insert(s.point.value()).second)
            throw std::invalid_argument("gao_decode: duplicate points in received word");
        xs.push_back(s.point);
        ys.push_back(s.value);
    }

    // g0 = prod (x - x_i) over the received points only.
    Poly g0;
    {
        std::vector<Fp> c{fp_one(m)};
        Poly acc(std::move(c));
        for (const auto& x : xs) {
            Poly lin(std::vector<Fp>{-x, fp_one(m)});
            acc = poly_mul(acc, lin);
        }
        g0 = std::move(acc);
    }
    Poly g1 = poly_interpolate(xs, ys);

    // Partial extended Euclid on (g0, g1), tracking the g1-multiplier. Stop
    // as soon as deg(remainder) < (e+d+1)/2, i.e. while 2*deg >= e+d+1.
    Poly r_prev = g0, r_cur = g1;
    Poly v_prev, v_cur(std::vector<Fp>{fp_one(m)});
    while (2 * r_cur.degree() >= e + d + 1) {
        auto [quo, rem] = poly_divrem(r_prev, r_cur);
        Poly v_next = poly_sub(v_prev, poly_mul(quo, v_cur));
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }

    if (v_cur.is_zero()) return std::nullopt;
    auto [proof, rem] = poly_divrem(r_cur, v_cur);
    if (!rem.is_zero() || proof.degree() > d) return std::nullopt;

    DecodeResult result;
    result.proof = std::move(proof);
    for (i64 i = 0; i < e; i++)
        if (poly_eval(result.proof, xs[i]) != ys[i]) result.error_points.insert(xs[i].value());
    return result;
}

}  // namespace camelot
