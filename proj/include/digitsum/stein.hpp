#pragma once

#include <vector>

#include "digitsum/numeric.hpp"

namespace digitsum {

// Exact solution of the Stein recurrence for Bi(lambda, 1/2):
//   (lambda - m) g(m) - m g(m-1) = h(m) - E h(Y_lambda),  m = 1..lambda-1.
struct SteinSolution {
    long lambda = 0;
    std::vector<Rat> h;   // values on 0..lambda
    std::vector<Rat> g;   // values on 0..lambda-1
    Rat Eh;
};

// g(m) = [sum_{r<=m} C(lambda,r)(h(r)-Eh)] / [(lambda-m) C(lambda,m)].
// Throws std::domain_error for lambda = 0.
SteinSolution stein_solve(long lambda, const std::vector<Rat>& h);

// Max residual of the recurrence in the orientation the closed form solves;
// exactly zero for stein_solve output.
Rat stein_residual(const SteinSolution& sol);
// Residual under the opposite printed orientation
// (m - lambda) g(m) + m g(m-1) = h(m) - Eh; diagnostic only.
Rat stein_residual_flipped(const SteinSolution& sol);

// Explicit uniform majorant 2^lambda / (floor(lambda/2) C(lambda,
// floor(lambda/2))); for lambda = 1 the exact enumerated bound 1/2.
Rat g_uniform_bound(long lambda);

// lhs = E h(X_n) - E h(Y_lambda) exactly; rhs = 4 a_1(n) E(h(Y_lambda)
// (lambda/2 - Y_lambda)/lambda) exactly; diff = lhs - rhs.
struct MeanCorrection {
    Rat lhs;
    Rat rhs_leading;
    Rat diff;
};
// h must take values in [0,1] on 0..lambda (contract error otherwise).
MeanCorrection stein_mean_correction(const Int& n, const std::vector<Rat>& h);

// |a_1(n)| E|Y_lambda - lambda/2| / (lambda/2), the corollary's main term.
Rat dtv_via_stein(const Int& n);

}  // namespace digitsum
