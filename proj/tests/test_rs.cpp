#include <gtest/gtest.h>

#include <random>
#include <set>

#include "camelot/rs.hpp"

using namespace camelot;

namespace {

std::vector<Fp> range_points(u64 count, const Modulus& m) {
    std::vector<Fp> pts;
    for (u64 i = 0; i < count; i++) pts.emplace_back(i, m);
    return pts;
}

Poly random_poly(std::mt19937_64& rng, i64 deg, const Modulus& m) {
    std::vector<Fp> c;
    for (i64 i = 0; i <= deg; i++) c.emplace_back(uniform_u64(rng, m.q), m);
    if (!c.empty() && c.back().is_zero()) c.back() = fp_one(m);
    return Poly(std::move(c));
}

}  // namespace

TEST(RsEncode, Examples) {
    Modulus m(13);
    Poly p = poly_from_u64({3, 5}, m);
    auto shares = rs_encode(p, range_points(7, m));
    // Independent evaluation oracle: direct power sums.
    const u64 expect[] = {3, 8, 0, 5, 10, 2, 7};
    ASSERT_EQ(shares.size(), 7u);
    for (int i = 0; i < 7; i++) {
        u64 direct = (3 + 5 * u64(i)) % 13;
        EXPECT_EQ(direct, expect[i]);
        EXPECT_EQ(shares[i].value.value(), expect[i]);
    }

    auto zero_shares = rs_encode(Poly(), range_points(5, m));
    for (auto& s : zero_shares) EXPECT_TRUE(s.value.is_zero());

    auto const_shares = rs_encode(poly_from_u64({9}, m), range_points(5, m));
    for (auto& s : const_shares) EXPECT_EQ(s.value.value(), 9u);

    std::vector<Fp> dup = {Fp(1, m), Fp(1, m)};
    EXPECT_THROW(rs_encode(poly_from_u64({1}, m), dup), std::invalid_argument);
}

TEST(GaoDecode, SpecExample) {
    Modulus m(13);
    Poly p = poly_from_u64({3, 5}, m);
    auto shares = rs_encode(p, range_points(7, m));
    shares[1].value = Fp(1, m);
    shares[4].value = Fp(1, m);
    auto res = gao_decode(shares, 1);
    ASSERT_TRUE(res.has_value());
    EXPECT_EQ(res->proof, p);
    EXPECT_EQ(res->error_points, (std::set<u64>{1, 4}));
}

TEST(GaoDecode, UncorruptedRoundTrip) {
    Modulus m(13);
    Poly p = poly_from_u64({3, 5}, m);
    auto res = gao_decode(rs_encode(p, range_points(7, m)), 1);
    ASSERT_TRUE(res.has_value());
    EXPECT_EQ(res->proof, p);
    EXPECT_TRUE(res->error_points.empty());
}

TEST(GaoDecode, ZeroPolynomial) {
    Modulus m(101);
    auto res = gao_decode(rs_encode(Poly(), range_points(9, m)), 2);
    ASSERT_TRUE(res.has_value());
    EXPECT_TRUE(res->proof.is_zero());
    EXPECT_TRUE(res->error_points.empty());
}

TEST(GaoDecode, RandomRoundTrip) {
    Modulus m(1000003);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; trial++) {
        const i64 d = i64(uniform_u64(rng, 12));
        const u64 e = u64(d) + 2 + uniform_u64(rng, 20);
        Poly p = random_poly(rng, d, m);
        auto res = gao_decode(rs_encode(p, range_points(e, m)), d);
        ASSERT_TRUE(res.has_value());
        EXPECT_EQ(res->proof, p);
        EXPECT_TRUE(res->error_points.empty());
    }
}

TEST(GaoDecode, AboveThresholdIsNeverSilentlyWrong) {
    // e = 7, d = 1, 3 corruptions exceed the threshold floor((7-1-1)/2) = 2.
    // The decoder may fail or may return some polynomial, but a returned
    // polynomial is never the original while claiming <= 2 errors would
    // also have been possible; the pipeline treats both outcomes as failure.
    Modulus m(13);
    Poly p = poly_from_u64({3, 5}, m);
    auto clean = rs_encode(p, range_points(7, m));
    int positions[3];
    for (positions[0] = 0; positions[0] < 7; positions[0]++)
        for (positions[1] = positions[0] + 1; positions[1] < 7; positions[1]++)
            for (positions[2] = positions[1] + 1; positions[2] < 7; positions[2]++) {
                for (u64 delta = 1; delta < 13; delta += 5) {
                    auto shares = clean;
                    for (int k = 0; k < 3; k++) {
                        auto& s = shares[positions[k]];
                        s.value = s.value + Fp(delta, m);
                    }
                    auto res = gao_decode(shares, 1);
                    if (res.has_value()) {
                        EXPECT_NE(res->proof, p)
                            << "3 corruptions must not decode back to the original";
                    }
                }
            }
}

TEST(GaoDecode, ExhaustiveErrorPatternsSmall) {
    // Every position pattern up to the threshold over q = 101, with a few
    // corruption values per pattern; culprit identification must be exact.
    Modulus m(101);
    std::mt19937_64 rng(9);
    struct Cfg { u64 e; i64 d; };
    for (Cfg cfg : {Cfg{7, 1}, Cfg{9, 2}, Cfg{11, 3}}) {
        const i64 threshold = (i64(cfg.e) - cfg.d - 1) / 2;
        Poly p = random_poly(rng, cfg.d, m);
        auto clean = rs_encode(p, range_points(cfg.e, m));
        const u64 full = 1ull << cfg.e;
        for (u64 mask = 0; mask < full; mask++) {
            if (__builtin_popcountll(mask) > threshold) continue;
            auto shares = clean;
            std::set<u64> expected;
            for (u64 i = 0; i < cfg.e; i++) {
                if (!(mask >> i & 1)) continue;
                expected.insert(i);
                shares[i].value += Fp(1 + uniform_u64(rng, m.q - 1), m);
            }
            auto res = gao_decode(shares, cfg.d);
            ASSERT_TRUE(res.has_value()) << "e=" << cfg.e << " mask=" << mask;
            EXPECT_EQ(res->proof, p);
            EXPECT_EQ(res->error_points, expected);
        }
    }
}

TEST(GaoDecode, SubsetDecodingSemantics) {
    // Removing uncorrupted shares keeps recovery intact as long as the
    // remaining share count keeps the corruption weight within threshold.
    Modulus m(1009);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; trial++) {
        const i64 d = 2 + i64(uniform_u64(rng, 4));
        const u64 e = u64(d) + 9 + uniform_u64(rng, 10);
        Poly p = random_poly(rng, d, m);
        auto shares = rs_encode(p, range_points(e, m));
        const i64 w = i64(uniform_u64(rng, 3));
        std::set<u64> corrupted;
        while (i64(corrupted.size()) < w) corrupted.insert(uniform_u64(rng, e));
        for (u64 i : corrupted) shares[i].value += Fp(1 + uniform_u64(rng, m.q - 1), m);
        // Drop uncorrupted shares while e_recv >= d + 1 + 2w.
        std::vector<CodewordShare> kept;
        u64 dropped_budget = e - u64(d + 1 + 2 * w);
        u64 dropped = 0;
        for (auto& s : shares) {
            if (!corrupted.count(s.point.value()) && dropped < dropped_budget &&
                uniform_u64(rng, 2) == 0) {
                dropped++;
                continue;
            }
            kept.push_back(s);
        }
        auto res = gao_decode(kept, d);
        ASSERT_TRUE(res.has_value());
        EXPECT_EQ(res->proof, p);
        EXPECT_EQ(res->error_points, corrupted);
    }
}

TEST(GaoDecode, MalformedDuplicatePointsRejected) {
    Modulus m(101);
    Poly p = poly_from_u64({1, 2, 3}, m);
    auto shares = rs_encode(p, range_points(8, m));
    shares[3].point = shares[5].point;
    EXPECT_THROW(gao_decode(shares, 2), std::invalid_argument);
}
