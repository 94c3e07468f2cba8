#include <doctest.h>

#include <random>
#include <stdexcept>

#include "digitsum/exact_dist.hpp"
#include "digitsum/digits.hpp"
#include "digitsum/krawtchouk.hpp"

using namespace digitsum;

TEST_CASE("table for N = 1, p = 1/2") {
    KrawtchoukFamily fam = krawtchouk_table(1, Rat(1, 2));
    // row t: (1+qw)^t (1-pw)^{1-t}
    CHECK(fam.table[0][0] == 1);
    CHECK(fam.table[0][1] == Rat(-1, 2));
    CHECK(fam.table[1][0] == 1);
    CHECK(fam.table[1][1] == Rat(1, 2));
    CHECK(fam.B(0) == Rat(1, 2));
    CHECK(fam.B(1) == Rat(1, 2));
}

TEST_CASE("generating-function consistency") {
    // K_0(t) = 1 and K_1(t) = qt - p(N-t) for every t
    for (long N : {2L, 5L, 9L}) {
        Rat p(2, 7), q = 1 - p;
        KrawtchoukFamily fam = krawtchouk_table(N, p);
        for (long t = 0; t <= N; ++t) {
            CHECK(fam.table[static_cast<size_t>(t)][0] == 1);
            CHECK(fam.table[static_cast<size_t>(t)][1] ==
                  q * t - p * (N - t));
        }
    }
}

TEST_CASE("orthogonality with binomial weights") {
    for (const Rat& p : {Rat(1, 2), Rat(1, 3), Rat(3, 4)}) {
        Rat q = 1 - p;
        for (long N = 1; N <= 12; ++N) {
            KrawtchoukFamily fam = krawtchouk_table(N, p);
            for (long a = 0; a <= N; ++a) {
                for (long b = a; b <= N; ++b) {
                    Rat s = 0;
                    for (long t = 0; t <= N; ++t)
                        s += fam.table[static_cast<size_t>(t)]
                                      [static_cast<size_t>(a)] *
                             fam.table[static_cast<size_t>(t)]
                                      [static_cast<size_t>(b)] *
                             fam.B(t);
                    if (a == b) {
                        Rat want = Rat(binom(N, a));
                        for (long i = 0; i < a; ++i) want *= p * q;
                        REQUIRE(s == want);
                    } else {
                        REQUIRE(s == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("Parseval identity for random coefficient vectors") {
    std::mt19937_64 rng(99);
    for (const Rat& p : {Rat(1, 2), Rat(1, 3), Rat(3, 4)}) {
        for (int i = 0; i < 30; ++i) {
            long N = 1 + static_cast<long>(rng() % 20);
            std::vector<Rat> f(static_cast<size_t>(N) + 1);
            for (auto& v : f)
                v = Rat(static_cast<long>(rng() % 19) - 9,
                        1 + static_cast<long>(rng() % 9));
            auto [lhs, rhs] = parseval_check(f, N, p);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("expansion coefficients recover simple functions") {
    // f_t = B(N,t): c_j = sum_t B(t) K_j(t) = delta_{j0} by orthogonality
    // against the constant polynomial K_0.
    long N = 6;
    Rat p(1, 3);
    KrawtchoukFamily fam = krawtchouk_table(N, p);
    std::vector<Rat> weights(static_cast<size_t>(N) + 1);
    for (long t = 0; t <= N; ++t)
        weights[static_cast<size_t>(t)] = fam.B(t);
    std::vector<Rat> c = expansion_coeffs(weights, N, p);
    CHECK(c[0] == 1);
    for (size_t j = 1; j < c.size(); ++j) CHECK(c[j] == 0);
    CHECK_THROWS_AS(
        expansion_coeffs(std::vector<Rat>(10, Rat(1)), 3, Rat(1, 2)),
        std::invalid_argument);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(krawtchouk_table(3, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(krawtchouk_table(3, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(krawtchouk_table(600, Rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(chi2_upper_bound(Int(1)), std::domain_error);
}

TEST_CASE("spectral chi2 upper bound") {
    CHECK(to_double(chi2_upper_bound(Int(12))) ==
          doctest::Approx(1.0 / 12).epsilon(1e-12));
    CHECK(to_double(chi2_upper_bound(Int(16))) == doctest::Approx(0.0));
    for (long n = 2; n <= 4096; ++n) {
        DigitExpansion e = digit_expansion(Int(n), 2);
        Rat chi2 = chi2_exact(pmf_mixture(Int(n)).first,
                              binomial_pmf(e.lambda));
        REQUIRE(to_double(chi2) <=
                to_double(chi2_upper_bound(Int(n))) + 1e-12);
    }
}
