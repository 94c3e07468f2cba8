#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "digitsum/approx.hpp"
#include "digitsum/digits.hpp"
#include "digitsum/exact_dist.hpp"

using namespace digitsum;

TEST_CASE("expansion coefficients of n = 12") {
    ExpansionCoeffs c = a_coeffs(Int(12), 2);
    REQUIRE(c.coeffs.size() == 3);
    CHECK(c.coeffs[0] == 1);
    CHECK(c.coeffs[1] == Rat(1, 6));
    CHECK(c.coeffs[2] == Rat(-1, 12));
    ExpansionCoeffs e = a_coeffs_explicit(Int(12), 2);
    CHECK(e.coeffs == c.coeffs);
}

TEST_CASE("coefficient routes, scale invariance, and size bound") {
    for (long n = 1; n <= 10000; ++n) {
        ExpansionCoeffs a = a_coeffs(Int(n), 6);
        ExpansionCoeffs b = a_coeffs_explicit(Int(n), 6);
        REQUIRE(a.coeffs == b.coeffs);
        ExpansionCoeffs dbl = a_coeffs(Int(2 * n), 6);
        REQUIRE(a.coeffs == dbl.coeffs);
        long lambda = digit_expansion(Int(n), 2).lambda;
        for (int r = 1; r <= 6; ++r) {
            // n |a_r| / 2^lambda <= 3 * 2^{r-1}
            Rat lhs = Int(n) * abs(a.coeffs[static_cast<size_t>(r)]);
            Rat cap = Rat(3 * (Int(1) << static_cast<unsigned>(r)),  2) *
                      (Int(1) << static_cast<unsigned>(lambda));
            REQUIRE(lhs <= cap);
        }
    }
    CHECK(a_coeffs(Int(1), 4).coeffs[1] == 0);  // powers of two: a_r = 0, r>0
    CHECK(a_coeffs(Int(64), 4).coeffs[3] == 0);
}

TEST_CASE("a_1 equals the mean shift") {
    for (long n = 2; n <= 3000; ++n) {
        long lambda = digit_expansion(Int(n), 2).lambda;
        REQUIRE(a_coeffs(Int(n), 1).coeffs[1] ==
                mean_exact(Int(n), 2) - Rat(lambda, 2));
    }
}

TEST_CASE("binomial difference operator") {
    // Delta^1 C(4,k) = C(4,k) - C(4,k-1)
    CHECK(delta_binomial(4, 1, 0) == 1);
    CHECK(delta_binomial(4, 1, 2) == 2);
    CHECK(delta_binomial(4, 1, 3) == -2);
    CHECK(delta_binomial(4, 0, 2) == 6);
    CHECK(delta_binomial(4, 2, 5) == 2);  // boundary: C(4,5)-2C(4,4)+C(4,3)
    // closed form sum_{0<=k<=lambda} |Delta C| = 2 C(lambda, floor(lambda/2)) - 1
    for (long lambda = 1; lambda <= 60; ++lambda) {
        Int s = 0;
        for (long k = 0; k <= lambda; ++k)
            s += abs(delta_binomial(lambda, 1, k));
        REQUIRE(s == 2 * binom(lambda, lambda / 2) - 1);
    }
}

TEST_CASE("scaled difference sums approach the Hermite constants") {
    // 2^{-lambda} lambda^{r/2} sum_k |Delta^r C| tends to 2^{r/2} h_r.
    const long lambda = 4096;
    std::vector<Int> row = binom_row(lambda);
    for (int r = 1; r <= 3; ++r) {
        // forward-difference the padded row r times, then sum |.|
        std::vector<Int> d(row.size() + static_cast<size_t>(r), 0);
        std::copy(row.begin(), row.end(), d.begin());
        for (int it = 0; it < r; ++it)
            for (size_t k = d.size(); k-- > 1;) d[k] -= d[k - 1];
        Int s = 0;
        for (const Int& v : d) s += abs(v);
        // spot-check the differenced row against the direct definition
        REQUIRE(d[5] == delta_binomial(lambda, r, 5));
        Real scaled = to_real(Rat(s, Int(1) << lambda)) *
                      pow(Real(lambda), Real(r) / 2);
        Real limit = pow(Real(2), Real(r) / 2) * hermite_constant(r);
        CHECK(to_double(abs(scaled - limit) / limit) <= 0.05);
    }
}

TEST_CASE("approximant and L1 residual") {
    CHECK(l1_residual(Int(12), 1, ResidualRange::theorem) == Rat(1, 6));
    CHECK(l1_residual(Int(12), 2, ResidualRange::theorem) == Rat(1, 16));
    CHECK(l1_residual(Int(64), 3, ResidualRange::theorem) == 0);
    CHECK(l1_residual(Int(64), 3, ResidualRange::full) == 0);
    // m = 1 approximant is the plain binomial: residual = 2 dtv
    for (long n : {12L, 100L, 1000L, 5000L}) {
        long lambda = digit_expansion(Int(n), 2).lambda;
        Rat dtv = dtv_exact(pmf_mixture(Int(n)).first, binomial_pmf(lambda));
        REQUIRE(l1_residual(Int(n), 1, ResidualRange::theorem) == 2 * dtv);
    }
    // full-range residual sees the leaked mass as well
    CHECK(l1_residual(Int(12), 2, ResidualRange::full) >=
          l1_residual(Int(12), 2, ResidualRange::theorem));
    SignedMeasure m = approximant_pmf(Int(12), 2);
    Rat tot = 0;
    for (long k = m.support_min(); k <= m.support_max(); ++k) tot += m.at(k);
    CHECK(tot == 1);  // signed approximant still has unit total mass
}

TEST_CASE("Hermite machinery") {
    CHECK(to_double(hermite_constant(0)) == doctest::Approx(1.0).epsilon(1e-9));
    // printed-definition values: 2/sqrt(pi) and 8/sqrt(2 pi e)
    CHECK(to_double(hermite_constant(1)) ==
          doctest::Approx(1.1283791670955126).epsilon(1e-9));
    CHECK(to_double(hermite_constant(2)) ==
          doctest::Approx(8.0 / std::sqrt(2 * M_PI * std::exp(1.0)))
              .epsilon(1e-9));
    // m = 3: closed form (2^{3/2}/sqrt(2 pi)) (2 + 8 e^{-3/2})
    double want3 = std::pow(2.0, 1.5) / std::sqrt(2 * M_PI) *
                   (2 + 8 * std::exp(-1.5));
    CHECK(to_double(hermite_constant(3)) ==
          doctest::Approx(want3).epsilon(1e-9));
    auto r2 = hermite_roots(2);
    REQUIRE(r2.size() == 2);
    CHECK(to_double(r2[0]) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(to_double(r2[1]) == doctest::Approx(1.0).epsilon(1e-10));
    auto r5 = hermite_roots(5);
    REQUIRE(r5.size() == 5);
    CHECK(to_double(r5[2]) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("dtv asymptotics and the two-sided comparator") {
    CHECK(to_double(dtv_asymptotic(Int(12))) ==
          doctest::Approx(std::sqrt(2.0) / 6 / std::sqrt(3 * M_PI))
              .epsilon(1e-12));
    CHECK(to_double(dtv_asymptotic(Int(1024))) == doctest::Approx(0.0));
    CHECK(to_double(spec_seq_ratio(Int(12))) ==
          doctest::Approx(std::sqrt(3.0) / 6).epsilon(1e-9));
    CHECK_THROWS_AS(spec_seq_ratio(Int(64)), std::domain_error);
}
