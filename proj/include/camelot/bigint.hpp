#pragma once

// Exact integer and rational arithmetic (GMP-backed) plus Chinese-Remainder
// reconstruction of integers from residues modulo distinct primes.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "camelot/field.hpp"

namespace camelot {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline u64 bigint_mod_u64(const BigInt& x, u64 q) {
    BigInt m = x % BigInt(q);
    if (m < 0) m += q;
    return m.get_ui();
}

struct Residue {
    u64 value;
    Modulus mod;
};

// Unique representative in [0, prod q). Consistent duplicated moduli are
// collapsed; inconsistent ones are an input error.
inline BigInt crt_combine(const std::vector<Residue>& residues) {
    if (residues.empty()) throw std::invalid_argument("crt_combine: empty input");
    std::map<u64, u64> seen;
    BigInt x = 0, m = 1;
    for (const auto& r : residues) {
        CAMELOT_CHECK(r.value < r.mod.q);
        auto it = seen.find(r.mod.q);
        if (it != seen.end()) {
            if (it->second != r.value)
                throw std::invalid_argument("crt_combine: inconsistent duplicated modulus");
            continue;
        }
        seen.emplace(r.mod.q, r.value);
        // x' = x + m * ((r - x) / m mod q)
        u64 q = r.mod.q;
        u64 xq = bigint_mod_u64(x, q);
        u64 mq = bigint_mod_u64(m, q);
        CAMELOT_CHECK(mq != 0);   // moduli are distinct primes
        u64 diff = submod_u64(r.value, xq, q);
        u64 t = mulmod_u64(diff, powmod_u64(mq, q - 2, q), q);
        x += m * BigInt(static_cast<unsigned long>(t));
        m *= q;
    }
    return x;
}

inline BigInt crt_modulus(const std::vector<Residue>& residues) {
    BigInt m = 1;
    std::map<u64, bool> seen;
    for (const auto& r : residues)
        if (!seen.count(r.mod.q)) {
            seen[r.mod.q] = true;
            m *= r.mod.q;
        }
    return m;
}

// Recenters a CRT representative to (-M/2, M/2] for tasks whose answer may
// be negative.
inline BigInt crt_recenter_signed(const BigInt& x, const BigInt& product) {
    if (2 * x > product) return x - product;
    return x;
}

}  // namespace camelot
