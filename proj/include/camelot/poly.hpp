#pragma once

// Univariate polynomials over a prime field. Quadratic-time algorithms
// throughout; the interfaces leave room for quasi-linear replacements.

#include <stdexcept>
#include <vector>

#include "camelot/field.hpp"

namespace camelot {

// Coefficient vector, index j holds the coefficient of x^j. Empty vector is
// the zero polynomial; otherwise the leading coefficient is nonzero.
struct Poly {
    std::vector<Fp> c;

    Poly() = default;
    explicit Poly(std::vector<Fp> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    i64 degree() const { return static_cast<i64>(c.size()) - 1; }

    bool operator==(const Poly& o) const {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); i++)
            if (c[i] != o.c[i]) return false;
        return true;
    }
};

inline Poly poly_from_u64(const std::vector<u64>& coeffs, const Modulus& m) {
    std::vector<Fp> c;
    c.reserve(coeffs.size());
    for (u64 v : coeffs) c.emplace_back(v, m);
    return Poly(std::move(c));
}

// Horner's rule.
inline Fp poly_eval(const Poly& p, Fp x0) {
    Fp acc = Fp::raw(0, x0.modulus());
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x0 + p.c[i];
    return acc;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Fp> c(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < c.size(); i++) {
        if (i < a.c.size() && i < b.c.size()) c[i] = a.c[i] + b.c[i];
        else if (i < a.c.size()) c[i] = a.c[i];
        else c[i] = b.c[i];
    }
    return Poly(std::move(c));
}

inline Poly poly_neg(const Poly& a) {
    std::vector<Fp> c(a.c);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_scale(const Poly& a, Fp s) {
    if (a.is_zero() || s.is_zero()) return Poly();
    std::vector<Fp> c(a.c);
    for (auto& x : c) x = x * s;
    return Poly(std::move(c));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    u64 q = a.c[0].modulus();
    std::vector<Fp> c(a.c.size() + b.c.size() - 1, Fp::raw(0, q));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); j++) c[i + j] += a.c[i] * b.c[j];
    }
    return Poly(std::move(c));
}

// Returns (quotient, remainder) with deg remainder < deg divisor.
inline std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    CAMELOT_CHECK(!b.is_zero());
    if (a.degree() < b.degree()) return {Poly(), a};
    const u64 q = b.c[0].modulus();
    const size_t db = b.c.size() - 1;
    std::vector<Fp> rem(a.c);
    std::vector<Fp> quo(a.c.size() - db, Fp::raw(0, q));
    const Fp lead_inv = b.c.back().inv();
    for (size_t k = quo.size(); k-- > 0;) {
        Fp f = rem[k + db] * lead_inv;
        if (!f.is_zero()) {
            quo[k] = f;
            for (size_t j = 0; j <= db; j++) rem[k + j] -= f * b.c[j];
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

namespace detail {

// Newton interpolation at consecutive integer points a, a+1, ..., a+n-1:
// forward differences need no per-cell inversions.
inline Poly interpolate_consecutive(u64 a, std::vector<Fp> y, const Modulus& m) {
    const size_t n = y.size();
    for (size_t k = 1; k < n; k++)
        for (size_t i = n - 1; i >= k; i--) y[i] = y[i] - y[i - 1];
    // Divide the k-th difference by k!.
    std::vector<Fp> fact(n);
    Fp f = fp_one(m);
    for (size_t k = 0; k < n; k++) {
        if (k > 0) f *= Fp(k, m);
        fact[k] = f;
    }
    batch_invert(fact);
    for (size_t k = 0; k < n; k++) y[k] *= fact[k];
    // Expand sum_k y_k * prod_{j<k} (x - (a+j)) to monomial form.
    std::vector<Fp> c(n, fp_zero(m));
    c[0] = y[n - 1];
    size_t len = 1;
    for (size_t k = n - 1; k-- > 0;) {
        Fp node = Fp(a + k, m);
        // c <- c*(x - node) + y_k
        for (size_t i = len; i-- > 0;) {
            Fp t = c[i];
            c[i + 1] += t;
            c[i] = -(t * node);
        }
        len++;
        c[0] += y[k];
    }
    return Poly(std::move(c));
}

inline Poly interpolate_general(const std::vector<Fp>& xs, std::vector<Fp> y) {
    const size_t n = xs.size();
    u64 q = xs[0].modulus();
    // Newton divided differences, batch-inverting each level's denominators.
    for (size_t k = 1; k < n; k++) {
        std::vector<Fp> den(n - k);
        for (size_t i = k; i < n; i++) {
            den[i - k] = xs[i] - xs[i - k];
            if (den[i - k].is_zero())
                throw std::invalid_argument("poly_interpolate: duplicate points");
        }
        batch_invert(den);
        for (size_t i = n - 1; i >= k; i--) y[i] = (y[i] - y[i - 1]) * den[i - k];
    }
    std::vector<Fp> c(n, Fp::raw(0, q));
    c[0] = y[n - 1];
    size_t len = 1;
    for (size_t k = n - 1; k-- > 0;) {
        for (size_t i = len; i-- > 0;) {
            Fp t = c[i];
            c[i + 1] += t;
            c[i] = -(t * xs[k]);
        }
        len++;
        c[0] += y[k];
    }
    return Poly(std::move(c));
}

}  // namespace detail

// Unique polynomial of degree < |points| through the given pairs.
inline Poly poly_interpolate(const std::vector<Fp>& points, const std::vector<Fp>& values) {
    CAMELOT_CHECK(points.size() == values.size());
    if (points.empty()) throw std::invalid_argument("poly_interpolate: no points");
    const u64 q = points[0].modulus();
    Modulus m;
    m.q = q;
    bool consecutive = true;
    for (size_t i = 0; i < points.size(); i++) {
        if (points[i].value() != points[0].value() + i) { consecutive = false; break; }
    }
    if (consecutive && points[0].value() + points.size() <= q)
        return detail::interpolate_consecutive(points[0].value(), values, m);
    // Duplicate points surface as a zero denominator inside the divided
    // difference loop: every index pair occurs at some level.
    return detail::interpolate_general(points, values);
}

// Values (L_1(x0), ..., L_R(x0)) of the Lagrange basis over nodes 1..R.
// Unit vector when x0 is itself a node; otherwise the factorial-table
// closed form, O(R) field operations.
inline std::vector<Fp> lagrange_basis_at(u64 R, Fp x0) {
    const u64 q = x0.modulus();
    Modulus m;
    m.q = q;
    CAMELOT_CHECK(R >= 1);
    if (q <= R) throw std::invalid_argument("lagrange_basis_at: modulus too small");
    std::vector<Fp> out(R, fp_zero(m));
    if (x0.value() >= 1 && x0.value() <= R) {
        out[x0.value() - 1] = fp_one(m);
        return out;
    }
    // Factorial table F_0..F_{R-1} and the node product Gamma(x0).
    std::vector<Fp> fact(R);
    Fp f = fp_one(m);
    for (u64 j = 0; j < R; j++) {
        if (j > 0) f *= Fp(j, m);
        fact[j] = f;
    }
    Fp gamma = fp_one(m);
    for (u64 j = 1; j <= R; j++) gamma *= x0 - Fp(j, m);
    // L_r(x0) = Gamma(x0) / ((-1)^(R-r) F_{r-1} F_{R-r} (x0 - r))
    std::vector<Fp> den(R);
    for (u64 r = 1; r <= R; r++) {
        Fp d = fact[r - 1] * fact[R - r] * (x0 - Fp(r, m));
        if ((R - r) & 1) d = -d;
        den[r - 1] = d;
    }
    batch_invert(den);
    for (u64 r = 1; r <= R; r++) out[r - 1] = gamma * den[r - 1];
    return out;
}

}  // namespace camelot
