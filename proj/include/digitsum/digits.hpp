#pragma once

#include <vector>

#include "digitsum/numeric.hpp"

namespace digitsum {

// Base-q expansion of a nonnegative integer together with the data used
// throughout the library: digits (least-significant first), lambda =
// floor(log_q n), and for q = 2 the exponents lambda_1 > ... > lambda_s with
// n = sum 2^{lambda_j}.
struct DigitExpansion {
    Int n;
    int q = 2;
    std::vector<int> digits;  // empty for n == 0
    long lambda = -1;         // -1 marks "undefined" (n == 0)
    std::vector<long> powers; // q == 2 only; strictly decreasing
    long s() const { return static_cast<long>(powers.size()); }
};

// Throws std::invalid_argument if q < 2.
DigitExpansion digit_expansion(const Int& n, int q);

// Sum of base-q digits of n.
Int nu(const Int& n, int q);

// S_q(n) = sum_{0 <= j < n} nu_q(j), computed in O(log^2 n) arithmetic.
Int digit_sum_total(const Int& n, int q);

// E(X_n) = S_q(n)/n in lowest terms; throws std::domain_error for n == 0.
Rat mean_exact(const Int& n, int q);

// sum_{j >= 1} floor(n / q^j); nu_q(n) = n - (q-1) * legendre_valuation(n,q).
Int legendre_valuation(const Int& n, int q);

}  // namespace digitsum
