#pragma once

#include <utility>
#include <vector>

#include "digitsum/numeric.hpp"

namespace digitsum {

// Krawtchouk polynomial values K_j(t) for 0 <= j, t <= N, exact rationals,
// orthogonal with respect to B(N,t) = C(N,t) p^t q^{N-t}.
struct KrawtchoukFamily {
    long N = 0;
    Rat p, q;
    std::vector<std::vector<Rat>> table;  // table[t][j] = K_j(t)
    Rat B(long t) const;                  // binomial weight at t
};

// K_j(t) = coefficient of w^j in (1+qw)^t (1-pw)^{N-t}; requires 0 < p < 1.
// N is capped at 512 (table memory).
KrawtchoukFamily krawtchouk_table(long N, const Rat& p);

// c_j from (1-pw)^N f((1+qw)/(1-pw)) = sum_j c_j w^j, for deg f <= N.
std::vector<Rat> expansion_coeffs(const std::vector<Rat>& f, long N,
                                  const Rat& p);

// Both sides of the finite Parseval identity, computed independently:
// lhs = sum_t (f_t/B)^2 B, rhs = sum_j c_j^2 / (C(N,j) (pq)^j).
std::pair<Rat, Rat> parseval_check(const std::vector<Rat>& f, long N,
                                   const Rat& p);

// Square of the explicit proof majorant
// sum_{2<=j<=s} (lambda-lambda_j) 2^{-(lambda-lambda_j+1)/2}
//              sqrt((lambda+1)/((lambda_j+2)(lambda_j+1))).
Real chi2_upper_bound(const Int& n);

}  // namespace digitsum
