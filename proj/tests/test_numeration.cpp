#include <doctest.h>

#include <stdexcept>

#include "digitsum/digits.hpp"
#include "digitsum/exact_dist.hpp"
#include "digitsum/numeration.hpp"

using namespace digitsum;

namespace {
const int kGamma64[64] = {
    1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 3, 2, 1, 2,
    3, 4, 3, 4, 5, 4, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2,
    3, 4, 3, 4, 5, 4, 3, 4, 5, 6, 5, 4, 5, 4, 3, 2,
    3, 4, 3, 4, 5, 4, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2};
}

TEST_CASE("Gray weight: published values and three routes") {
    for (int n = 1; n <= 64; ++n) {
        CHECK(gray_weight(Int(n)) == kGamma64[n - 1]);
    }
    CHECK(gray_weight(Int(0)) == 0);
    CHECK(gray_weight(Int(19)) == 3);
    for (long n = 0; n <= 4096; ++n) {
        long a = gray_weight(Int(n));
        REQUIRE(a == gray_weight_halving(Int(n)));
        REQUIRE(a == gray_weight_popcount(Int(n)));
    }
}

TEST_CASE("translate-complement weight") {
    CHECK(transcomplement_weight(Int(0)) == 0);
    CHECK(transcomplement_weight(Int(3)) == 1);
    CHECK(transcomplement_weight(Int(4)) == 3);
    CHECK(transcomplement_weight(Int(6)) == 1);
    // defining recurrence mu(2^k + j) = k + 1 - mu(j)
    for (long k = 0; k <= 11; ++k) {
        for (long j = 0; j < (1L << k); ++j) {
            REQUIRE(transcomplement_weight(Int((1L << k) + j)) ==
                    k + 1 - transcomplement_weight(Int(j)));
        }
    }
}

TEST_CASE("halving condition certifies the shipped systems") {
    CodingSystem bin = binary_system();
    CodingSystem gray = gray_system();
    CodingSystem tc = transcomplement_system();
    CHECK(bin.certified);
    CHECK(gray.certified);
    CHECK(tc.certified);
    CHECK(verify_halving(bin, 4000).ok);
    CHECK(verify_halving(gray, 4000).ok);
    CHECK(verify_halving(tc, 4000).ok);
}

TEST_CASE("halving condition rejects a non-conforming weight") {
    // w(0) = 0, w(n) = (2-adic valuation of n) + 1 for n >= 1
    CodingSystem sys{"valuation",
                     [](const Int& n) {
                         if (n == 0) return 0L;
                         long v = 0;
                         Int m = n;
                         while (m % 2 == 0) {
                             ++v;
                             m /= 2;
                         }
                         return v + 1;
                     },
                     false};
    HalvingResult res = verify_halving(sys, 1000);
    CHECK_FALSE(res.ok);
    CHECK(res.counterexample > 0);
    CHECK_FALSE(sys.certified);
    CHECK_THROWS_AS(code_pmf(sys, Int(12)), std::domain_error);
}

TEST_CASE("weight distributions: closed form equals enumeration") {
    CodingSystem bin = binary_system();
    CodingSystem gray = gray_system();
    CodingSystem tc = transcomplement_system();
    for (CodingSystem* sys : {&bin, &gray, &tc}) {
        for (long n = 1; n <= 300; ++n) {
            ExactPMF a = code_pmf(*sys, Int(n), true);
            ExactPMF b = code_pmf(*sys, Int(n), false);
            REQUIRE(a.masses == b.masses);
            REQUIRE(a.offset == b.offset);
        }
    }
    ExactPMF g6 = code_pmf(gray, Int(6));
    CHECK(g6.masses == std::vector<Rat>{Rat(1, 6), Rat(2, 6), Rat(2, 6),
                                        Rat(1, 6)});
}

TEST_CASE("binary system reproduces the digit-sum law") {
    CodingSystem bin = binary_system();
    for (long n : {1L, 12L, 100L, 999L}) {
        ExactPMF a = code_pmf(bin, Int(n));
        ExactPMF b = pmf_mixture(Int(n)).first;
        REQUIRE(a.masses == b.masses);
        REQUIRE(a.offset == b.offset);
    }
}

TEST_CASE("mean fluctuation of the Gray weight law") {
    CodingSystem gray = gray_system();
    CHECK(gbar1(gray, Int(12)) == Rat(1, 2));
    CHECK(gbar1_via_coeffs(gray, Int(12)) == Rat(1, 2));
    for (long n = 1; n <= 2000; ++n)
        REQUIRE(gbar1(gray, Int(n)) == gbar1_via_coeffs(gray, Int(n)));
}

TEST_CASE("mean and variance identities for certified systems") {
    CodingSystem gray = gray_system();
    CodingSystem tc = transcomplement_system();
    for (CodingSystem* sys : {&gray, &tc}) {
        for (long n = 2; n <= 400; ++n) {
            long lambda = digit_expansion(Int(n), 2).lambda;
            ExactPMF p = code_pmf(*sys, Int(n));
            Rat m1 = 0, m2 = 0;
            for (long k = p.support_min(); k <= p.support_max(); ++k) {
                m1 += k * p.at(k);
                m2 += Rat(k) * k * p.at(k);
            }
            G1G2 g = g1_g2(*sys, Int(n));
            REQUIRE(m1 == Rat(lambda, 2) + g.g1_const);
            REQUIRE(m2 - m1 * m1 == Rat(lambda, 4) + g.g2_const);
        }
    }
}

TEST_CASE("distance between the binary and Gray weight laws") {
    auto [exact, main_term] = dtv_codes(Int(6));
    CHECK(exact == Rat(1, 6));
    CHECK(to_double(main_term) >= 0);
    // full blocks: both laws are exactly Bi(k, 1/2), so everything vanishes
    auto [e2, t2] = dtv_codes(Int(1 << 14));
    CHECK(e2 == 0);
    CHECK(to_double(t2) == doctest::Approx(0.0));
}

TEST_CASE("local limit behavior of a certified weight law") {
    CodingSystem gray = gray_system();
    auto rows = llt_check(gray, Int(1) << 16, {0.0, 0.5, -1.0});
    for (const auto& row : rows) {
        REQUIRE(to_double(row.ratio) > 0.8);
        REQUIRE(to_double(row.ratio) < 1.25);
    }
}
