#include <doctest.h>

#include <stdexcept>

#include "digitsum/digits.hpp"

using namespace digitsum;

TEST_CASE("digit sums in several bases") {
    CHECK(nu(Int(19), 2) == 3);          // 10011
    CHECK(nu(Int(12), 2) == 2);          // 1100
    CHECK(nu(Int(0), 2) == 0);
    CHECK(nu(Int(255), 2) == 8);
    CHECK(nu(Int(19), 10) == 10);        // 1 + 9
    CHECK(nu(Int(26), 3) == 6);          // 222
    CHECK(nu(Int("123456789123456789"), 10) == 90);
}

TEST_CASE("digit expansion structure") {
    DigitExpansion e = digit_expansion(Int(12), 2);
    CHECK(e.lambda == 3);
    CHECK(e.s() == 2);
    CHECK(e.powers == std::vector<long>{3, 2});
    CHECK(digit_expansion(Int(1), 2).lambda == 0);
    CHECK(digit_expansion(Int(0), 2).lambda == -1);
    CHECK(digit_expansion(Int(80), 10).lambda == 1);
}

TEST_CASE("total digit sum matches direct enumeration") {
    for (int q : {2, 3, 10}) {
        Int direct = 0;
        for (long n = 1; n <= 2000; ++n) {
            direct += nu(Int(n - 1), q);
            CHECK(digit_sum_total(Int(n), q) == direct);
        }
    }
    CHECK(digit_sum_total(Int(12), 2) == 20);
}

TEST_CASE("exact mean") {
    CHECK(mean_exact(Int(12), 2) == Rat(5, 3));
    CHECK(mean_exact(Int(1), 2) == 0);
    CHECK(mean_exact(Int(16), 2) == 2);  // lambda/2 at powers of two
    CHECK_THROWS_AS(mean_exact(Int(0), 2), std::domain_error);
}

TEST_CASE("factorial valuation via digit sums") {
    // v_q(n!) = (n - nu_q(n)) / (q - 1) for prime q.
    CHECK(legendre_valuation(Int(10), 2) == 8);
    CHECK(legendre_valuation(Int(100), 2) == 97);
    CHECK(legendre_valuation(Int(100), 5) == 24);
    // cross-check against direct summation of floor(n/q^i)
    for (long n : {1L, 7L, 31L, 100L, 1000L}) {
        for (int q : {2, 3, 5}) {
            Int direct = 0;
            for (Int p = q; p <= n; p *= q) direct += Int(n) / p;
            CHECK(legendre_valuation(Int(n), q) == direct);
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(nu(Int(5), 1), std::invalid_argument);
    CHECK_THROWS_AS(nu(Int(-1), 2), std::invalid_argument);
    CHECK_THROWS_AS(digit_expansion(Int(3), 0), std::invalid_argument);
}
