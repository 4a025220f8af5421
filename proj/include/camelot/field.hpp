#pragma once

// Prime-field arithmetic on 64-bit residues with 128-bit intermediate
// products. Elements carry their modulus; mixing moduli is a programming
// error and aborts.

#include <stdexcept>
#include <vector>

#include "camelot/common.hpp"

namespace camelot {

inline u64 addmod_u64(u64 a, u64 b, u64 q) {
    u64 s = a + b;            // q < 2^62, no overflow
    if (s >= q) s -= q;
    return s;
}

inline u64 submod_u64(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + (q - b); }

inline u64 mulmod_u64(u64 a, u64 b, u64 q) { return static_cast<u64>((u128)a * b % q); }

inline u64 powmod_u64(u64 a, u64 e, u64 q) {
    u64 r = 1 % q, x = a % q;
    while (e) {
        if (e & 1) r = mulmod_u64(r, x, q);
        x = mulmod_u64(x, x, q);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit integers with this
// witness set (Sorenson & Webster).
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; s++; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; i++) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

constexpr u64 kModulusLimit = 1ull << 62;

struct Modulus {
    u64 q = 0;

    Modulus() = default;
    explicit Modulus(u64 prime) : q(prime) {
        CAMELOT_CHECK(q >= 2 && q < kModulusLimit);
        CAMELOT_CHECK(is_prime_u64(q));
    }
    bool operator==(const Modulus& o) const { return q == o.q; }
};

// Smallest prime >= lower_bound.
inline Modulus find_prime(u64 lower_bound) {
    if (lower_bound < 2 || lower_bound >= kModulusLimit)
        throw std::out_of_range("find_prime: lower_bound outside [2, 2^62)");
    u64 n = lower_bound;
    if (n <= 2) return Modulus(2);
    if ((n & 1) == 0) n++;
    while (!is_prime_u64(n)) {
        n += 2;
        if (n >= kModulusLimit) throw std::out_of_range("find_prime: no prime below 2^62");
    }
    return Modulus(n);
}

class Fp {
  public:
    Fp() = default;
    Fp(u64 value, const Modulus& m) : v_(value % m.q), q_(m.q) {}

    static Fp raw(u64 value, u64 q) {
        Fp x;
        x.v_ = value;
        x.q_ = q;
        return x;
    }

    u64 value() const { return v_; }
    u64 modulus() const { return q_; }

    Fp operator+(Fp o) const {
        CAMELOT_CHECK(q_ == o.q_ && q_ != 0);
        return raw(addmod_u64(v_, o.v_, q_), q_);
    }
    Fp operator-(Fp o) const {
        CAMELOT_CHECK(q_ == o.q_ && q_ != 0);
        return raw(submod_u64(v_, o.v_, q_), q_);
    }
    Fp operator*(Fp o) const {
        CAMELOT_CHECK(q_ == o.q_ && q_ != 0);
        return raw(mulmod_u64(v_, o.v_, q_), q_);
    }
    Fp operator-() const {
        CAMELOT_CHECK(q_ != 0);
        return raw(v_ == 0 ? 0 : q_ - v_, q_);
    }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    bool operator==(Fp o) const { return v_ == o.v_ && q_ == o.q_; }
    bool operator!=(Fp o) const { return !(*this == o); }

    bool is_zero() const { return v_ == 0; }

    Fp pow(u64 e) const {
        CAMELOT_CHECK(q_ != 0);
        return raw(powmod_u64(v_, e, q_), q_);
    }
    Fp inv() const {
        CAMELOT_CHECK(q_ != 0);
        CAMELOT_CHECK(v_ != 0);   // division by zero aborts
        return pow(q_ - 2);
    }
    Fp operator/(Fp o) const { return *this * o.inv(); }

  private:
    u64 v_ = 0;
    u64 q_ = 0;
};

inline Fp fp_zero(const Modulus& m) { return Fp(0, m); }
inline Fp fp_one(const Modulus& m) { return Fp(1, m); }

// Montgomery's trick: inverts every element with 3n multiplications and a
// single exponentiation. All inputs must be nonzero and share a modulus.
inline void batch_invert(std::vector<Fp>& xs) {
    if (xs.empty()) return;
    std::vector<Fp> prefix(xs.size());
    Fp acc = xs[0];
    prefix[0] = acc;
    for (size_t i = 1; i < xs.size(); i++) {
        acc *= xs[i];
        prefix[i] = acc;
    }
    Fp inv = acc.inv();
    for (size_t i = xs.size(); i-- > 1;) {
        Fp save = xs[i];
        xs[i] = inv * prefix[i - 1];
        inv *= save;
    }
    xs[0] = inv;
}

}  // namespace camelot
