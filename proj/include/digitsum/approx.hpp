#pragma once

#include <vector>

#include "digitsum/numeric.hpp"

namespace digitsum {

// The rational coefficients a_0(n), ..., a_m(n) of the expansion
// E(y^{X_n}) ((1+y)/2)^{-lambda} = sum_r a_r(n) (y-1)^r.
struct ExpansionCoeffs {
    Int n;
    std::vector<Rat> coeffs;
};

// Taylor route: exact polynomial division of the closed-form PGF ratio,
// re-centered at y = 1.
ExpansionCoeffs a_coeffs(const Int& n, int m);

// Independent explicit double-sum route; must agree with a_coeffs exactly.
ExpansionCoeffs a_coeffs_explicit(const Int& n, int m);

// Delta^r C(lambda, k) with C(lambda, j) = 0 outside 0 <= j <= lambda.
Int delta_binomial(long lambda, int r, long k);

// Finitely supported signed measure with rational weights.
struct SignedMeasure {
    long offset = 0;
    std::vector<Rat> weights;
    Rat at(long k) const {
        long i = k - offset;
        if (i < 0 || i >= static_cast<long>(weights.size())) return Rat(0);
        return weights[static_cast<size_t>(i)];
    }
    long support_min() const { return offset; }
    long support_max() const {
        return offset + static_cast<long>(weights.size()) - 1;
    }
};

// Weight at k: sum_{r<m} (-1)^r a_r(n) 2^{-lambda} Delta^r C(lambda, k).
SignedMeasure approximant_pmf(const Int& n, int m);

enum class ResidualRange { theorem, full };

// L1 distance between the exact pmf and the order-m approximant; 'theorem'
// sums over k in [0, lambda], 'full' over the union support.
Rat l1_residual(const Int& n, int m, ResidualRange range);

// h_m = 2^{m/2}/sqrt(2 pi) * integral |H_m(x)| exp(-x^2/2) dx, by adaptive
// quadrature split at the roots of the Hermite polynomial H_m.
Real hermite_constant(int m);

// Roots of the (probabilists') Hermite polynomial H_m, ascending.
std::vector<Real> hermite_roots(int m);

// Leading term sqrt(2) |a_1(n)| / sqrt(pi lambda) of the dtv asymptotic.
Real dtv_asymptotic(const Int& n);

// dtv_exact(pmf(n), Bi(lambda)) / [2^{-(lambda-lambda_2)}
// min{1, (lambda-lambda_2)/sqrt(lambda)}]; error if n is a power of two.
Real spec_seq_ratio(const Int& n);

}  // namespace digitsum
