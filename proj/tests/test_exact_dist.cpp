#include <doctest.h>

#include <stdexcept>

#include "digitsum/digits.hpp"
#include "digitsum/exact_dist.hpp"

using namespace digitsum;

TEST_CASE("pmf of X_12 via all three routes") {
    std::vector<Rat> want{Rat(1, 12), Rat(4, 12), Rat(5, 12), Rat(2, 12)};
    ExactPMF b = pmf_bruteforce(Int(12));
    CHECK(b.offset == 0);
    CHECK(b.masses == want);
    ExactPMF m = pmf_mixture(Int(12)).first;
    CHECK(m.offset == 0);
    CHECK(m.masses == want);
    CHECK(pgf_closed_form(Int(12), 2) == want);
}

TEST_CASE("three routes agree exhaustively for small n") {
    for (long n = 1; n <= 2000; ++n) {
        ExactPMF b = pmf_bruteforce(Int(n));
        ExactPMF m = pmf_mixture(Int(n)).first;
        REQUIRE(b.masses == m.masses);
        REQUIRE(b.offset == m.offset);
        ExactPMF p;
        p.masses = pgf_closed_form(Int(n), 2);
        p.trim();
        REQUIRE(p.masses == b.masses);
        REQUIRE(p.offset == b.offset);
    }
}

TEST_CASE("base-q closed-form pgf against enumeration") {
    for (int q : {3, 10}) {
        std::vector<Int> counts;
        for (long n = 1; n <= 500; ++n) {
            long w = nu(Int(n - 1), q).convert_to<long>();
            if (static_cast<size_t>(w) >= counts.size())
                counts.resize(static_cast<size_t>(w) + 1, Int(0));
            ++counts[static_cast<size_t>(w)];
            std::vector<Rat> p = pgf_closed_form(Int(n), q);
            REQUIRE(static_cast<long>(p.size()) >=
                    static_cast<long>(counts.size()));
            for (size_t k = 0; k < p.size(); ++k)
                REQUIRE(p[k] ==
                        (k < counts.size() ? Rat(counts[k], n) : Rat(0)));
        }
    }
}

TEST_CASE("mixture decomposition bookkeeping") {
    auto [pmf, mixture] = pmf_mixture(Int(12));
    CHECK(mixture.terms.size() == 2);  // 12 = 2^3 + 2^2
    Rat total = 0;
    for (const Rat& w : pmf.masses) total += w;
    CHECK(total == 1);
}

TEST_CASE("exact moments") {
    CHECK(moment_exact(Int(12), 1) == Rat(5, 3));
    CHECK(moment_exact(Int(12), 2) == Rat(7, 2));
    // variance of the full block n = 2^k is k/4
    CHECK(moment_exact(Int(16), 2) - moment_exact(Int(16), 1) *
                                         moment_exact(Int(16), 1) ==
          Rat(4, 4));
}

TEST_CASE("distances to the binomial law") {
    ExactPMF p = pmf_mixture(Int(12)).first;
    ExactPMF b = binomial_pmf(3);
    CHECK(dtv_exact(p, b) == Rat(1, 12));
    CHECK(kolmogorov_exact(p, b) == Rat(1, 12));
    CHECK(chi2_exact(p, b) == Rat(1, 27));
    CHECK(kolmogorov_exact(p, b) <= dtv_exact(p, b));
    Real kl = kl_divergence(p, b);
    CHECK(kl > 0);
    CHECK(to_double(kl) <= to_double(chi2_exact(p, b)));
}

TEST_CASE("distance inequalities over a sweep") {
    for (long n = 2; n <= 600; ++n) {
        DigitExpansion e = digit_expansion(Int(n), 2);
        ExactPMF p = pmf_mixture(Int(n)).first;
        ExactPMF b = binomial_pmf(e.lambda);
        Rat dtv = dtv_exact(p, b);
        Rat chi2 = chi2_exact(p, b);
        // dtv <= sqrt(chi2)/2, squared to stay rational
        REQUIRE(4 * dtv * dtv <= chi2);
        REQUIRE(kolmogorov_exact(p, b) <= dtv);
        if (n > 2) REQUIRE(to_double(kl_divergence(p, b)) <=
                           to_double(chi2) + 1e-30);
    }
}

TEST_CASE("tail domination by the one-larger binomial") {
    // P(|X_n - (lambda+1)/2| > C) <= 2 P(|Y_{lambda+1} - (lambda+1)/2| > C)
    for (long n = 2; n <= 1000; ++n) {
        DigitExpansion e = digit_expansion(Int(n), 2);
        long l1 = e.lambda + 1;
        ExactPMF p = pmf_mixture(Int(n)).first;
        ExactPMF b = binomial_pmf(l1);
        for (int twice_c : {1, 3, 5, 7}) {
            Rat c = Rat(twice_c, 2);
            Rat px = 0, py = 0;
            for (long k = 0; k <= l1; ++k) {
                Rat dev = abs(Rat(2 * k - l1, 2));
                if (dev > c) {
                    px += p.at(k);
                    py += b.at(k);
                }
            }
            REQUIRE(px <= 2 * py);
        }
    }
}

TEST_CASE("error handling") {
    CHECK_THROWS_AS(pmf_bruteforce(Int("2000000")), std::range_error);
    CHECK_THROWS_AS(pmf_mixture(Int(0)), std::domain_error);
    // chi2 against a narrower support must be rejected
    ExactPMF wide = pmf_mixture(Int(12)).first;
    ExactPMF narrow = binomial_pmf(1);
    CHECK_THROWS_AS(chi2_exact(wide, narrow), std::domain_error);
    CHECK_THROWS_AS(kl_divergence(wide, narrow), std::domain_error);
}
