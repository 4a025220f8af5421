#pragma once

// Bivariate polynomials truncated at fixed per-variable degree bounds.
// Used for the two weight-tracking indeterminates of the partitioning
// sum-product tasks; sizes stay tiny, so everything is dense.

#include <vector>

#include "camelot/field.hpp"

namespace camelot {

struct BiPoly {
    u32 de = 0, db = 0;        // degree bounds in the two variables
    std::vector<Fp> c;         // (de+1)*(db+1), index ie*(db+1)+ib

    BiPoly() = default;
    BiPoly(u32 de_, u32 db_, const Modulus& m)
        : de(de_), db(db_), c((de_ + 1) * (db_ + 1), fp_zero(m)) {}

    Fp at(u32 ie, u32 ib) const {
        CAMELOT_CHECK(ie <= de && ib <= db);
        return c[ie * (db + 1) + ib];
    }
    void add_at(u32 ie, u32 ib, Fp v) {
        CAMELOT_CHECK(ie <= de && ib <= db);
        c[ie * (db + 1) + ib] += v;
    }
    void set_at(u32 ie, u32 ib, Fp v) {
        CAMELOT_CHECK(ie <= de && ib <= db);
        c[ie * (db + 1) + ib] = v;
    }

    BiPoly& operator+=(const BiPoly& o) {
        CAMELOT_CHECK(de == o.de && db == o.db);
        for (size_t i = 0; i < c.size(); i++) c[i] += o.c[i];
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        CAMELOT_CHECK(de == o.de && db == o.db);
        for (size_t i = 0; i < c.size(); i++) c[i] -= o.c[i];
        return *this;
    }
    bool operator==(const BiPoly& o) const { return de == o.de && db == o.db && c == o.c; }
};

// Product with every term of degree > bounds discarded.
inline BiPoly bipoly_mul_trunc(const BiPoly& a, const BiPoly& b, u32 de, u32 db) {
    CAMELOT_CHECK(!a.c.empty() && !b.c.empty());
    CAMELOT_CHECK(a.c[0].modulus() == b.c[0].modulus());
    Modulus m;
    m.q = a.c[0].modulus();
    BiPoly out(de, db, m);
    for (u32 ie = 0; ie <= a.de; ie++) {
        u32 je_max = de >= ie ? de - ie : 0;
        if (de < ie) break;
        for (u32 ib = 0; ib <= a.db; ib++) {
            if (ib > db) break;
            Fp av = a.c[ie * (a.db + 1) + ib];
            if (av.is_zero()) continue;
            u32 jb_max = db - ib;
            for (u32 je = 0; je <= b.de && je <= je_max; je++) {
                for (u32 jb = 0; jb <= b.db && jb <= jb_max; jb++) {
                    Fp bv = b.c[je * (b.db + 1) + jb];
                    if (bv.is_zero()) continue;
                    out.c[(ie + je) * (db + 1) + (ib + jb)] += av * bv;
                }
            }
        }
    }
    return out;
}

// a^t truncated at (de, db), by binary powering.
inline BiPoly bipoly_pow_trunc(const BiPoly& a, u64 t, u32 de, u32 db) {
    CAMELOT_CHECK(!a.c.empty());
    Modulus m;
    m.q = a.c[0].modulus();
    BiPoly result(de, db, m);
    result.set_at(0, 0, fp_one(m));
    if (t == 0) return result;
    BiPoly base = bipoly_mul_trunc(a, [&] {
        BiPoly one(0, 0, m);
        one.set_at(0, 0, fp_one(m));
        return one;
    }(), de, db);
    while (t) {
        if (t & 1) result = bipoly_mul_trunc(result, base, de, db);
        t >>= 1;
        if (t) base = bipoly_mul_trunc(base, base, de, db);
    }
    return result;
}

}  // namespace camelot
