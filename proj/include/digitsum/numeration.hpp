#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "digitsum/exact_dist.hpp"
#include "digitsum/numeric.hpp"

namespace digitsum {

// A binary coding system: a weight function w(n) (number of 1s in the code
// of n) whose weight distribution is required to satisfy the halving
// condition Z_{2n} =_d Z_n + Bernoulli(1/2); w(0) = 0 by convention.
struct CodingSystem {
    std::string name;
    std::function<long(const Int&)> weight;
    bool certified = false;  // set by verify_halving
};

// The three shipped systems, certified at construction (halving verified up
// to n = 1024).
CodingSystem binary_system();
CodingSystem gray_system();
CodingSystem transcomplement_system();

// Reflected-Gray weight; three independent routes are cross-checked in tests.
long gray_weight(const Int& n);           // mirror recurrence
long gray_weight_halving(const Int& n);   // gamma(n) = gamma(n/2) + parity
long gray_weight_popcount(const Int& n);  // popcount(n ^ (n >> 1))

// Translate-complement weight: mu(2^k + j) = k + 1 - mu(j), mu(0) = 0.
long transcomplement_weight(const Int& n);

// Checks the polynomial identity sum_{j<2n} y^{w(j)} = (1+y) sum_{j<n}
// y^{w(j)} for all n <= n_max; certifies the system on success.
struct HalvingResult {
    bool ok = true;
    long counterexample = 0;  // first failing n when !ok
};
HalvingResult verify_halving(CodingSystem& sys, long n_max);

// Exact weight distribution of the first n integers.  The closed-form route
// (1/n) sum_j y^{mu(floor(n/2^{lambda_j})-1)} (1+y)^{lambda_j} requires a
// certified system (std::domain_error otherwise); brute force does not.
ExactPMF code_pmf(const CodingSystem& sys, const Int& n, bool brute = false);

// E(Z_n) - lambda/2 exactly (= b_1(n) of the general expansion).
Rat gbar1(const CodingSystem& sys, const Int& n);
// Same value via coefficient extraction from the closed-form PGF ratio.
Rat gbar1_via_coeffs(const CodingSystem& sys, const Int& n);

// G1(log2 n) and G2(log2 n) carried symbolically in f = {log2 n}:
// G1 = g1_const - f/2, G2 = g2_const - f/4; the defining identities reduce
// to exact rational statements E(Z_n) = lambda/2 + g1_const and
// V(Z_n) = lambda/4 + g2_const.
struct G1G2 {
    Rat g1_const, g2_const;
    Real g1_value(const Real& frac) const { return to_real(g1_const) - frac / 2; }
    Real g2_value(const Real& frac) const { return to_real(g2_const) - frac / 4; }
};
G1G2 g1_g2(const CodingSystem& sys, const Int& n);

// Exact dtv between binary and Gray weight laws, plus the asymptotic main
// term sqrt(2)|a_1(n) - gbar1(gray,n)|/sqrt(pi lambda).
std::pair<Rat, Real> dtv_codes(const Int& n);

// Local limit theorem check rows.
struct LLTRow {
    double x;
    long k;         // evaluated point floor(lambda/2 + x sqrt(lambda)/2)
    Rat exact;      // P(Z_n = k)
    Real gaussian;  // sqrt(2) e^{-x^2/2} / sqrt(pi lambda)
    Real ratio;     // exact / gaussian
};
std::vector<LLTRow> llt_check(const CodingSystem& sys, const Int& n,
                              const std::vector<double>& xs);

}  // namespace digitsum
