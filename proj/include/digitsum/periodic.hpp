#pragma once

#include <vector>

#include "digitsum/numeric.hpp"

namespace digitsum {

// A point 2^x in (1, 2] written as sum_j 2^{-d_j} with 0 = d_0 < d_1 < ...
// Exact kind: x = {log2 n}, so 2^x = n/2^lambda and the expansion terminates.
// Real kind: arbitrary x, expansion truncated after J terms.
struct DyadicPoint {
    bool exact = true;
    Int n;              // exact kind
    long lambda = 0;    // exact kind
    std::vector<long> d;  // the exponents d_0 = 0 < d_1 < ...
    Real x_frac;        // real kind only: {x}
};

DyadicPoint dyadic_from_n(const Int& n);
DyadicPoint dyadic_from_real(const Real& x, long J);

// A real value together with a bound on the truncation error.
struct RealWithBound {
    Real value;
    Real bound;
};

// F at log2 n, exact: equals E(X_n) - lambda/2.  F(log2 2^lambda) := 0.
Rat F_eval(const Int& n);
// F at an arbitrary real point, J expansion terms, with tail bound.
RealWithBound F_eval_real(const Real& x, long J);

// log2(sum_{0<=j<=k} 4^{-j}), the k-th zero location of |F|.
Real F_zeros(int k);

// Integral of (q{t} - {qt} - (q-1)/2) over [0, x mod 1]; piecewise linear.
Rat takagi_h(const Rat& x, int q);
Real takagi_h_real(const Real& x, int q);

// Takagi function sum_{j<J} q^{-j} h(q^j x), with reported truncation bound.
RealWithBound takagi_g(const Real& x, int q, int J);

// Delange's F1(x) = (q-1)/2 (1-{x}) + q^{1-{x}} g(q^{-1+{x}}).
RealWithBound F1_eval(const Real& x, int q, int J);

// Literal second-order periodic function of the printed formula, at log2 n.
// Known to disagree with the a2-derived route; both are reported by callers.
Rat F2corr_eval(const Int& n);
RealWithBound F2corr_eval_real(const Real& x, long J);

// V(X_n) - lambda/4 exactly (the empirical variance fluctuation).
Rat variance_fluctuation(const Int& n);

}  // namespace digitsum
