#pragma once

#include <utility>
#include <vector>

#include "digitsum/numeric.hpp"

namespace digitsum {

// Finitely supported probability mass function with exact rational masses.
// Masses are trimmed so the first and last entries are nonzero (except for
// the degenerate single-point case).
struct ExactPMF {
    long offset = 0;          // support starts at this integer
    std::vector<Rat> masses;  // masses[i] is the mass at offset + i

    long support_min() const { return offset; }
    long support_max() const {
        return offset + static_cast<long>(masses.size()) - 1;
    }
    Rat at(long k) const {
        long i = k - offset;
        if (i < 0 || i >= static_cast<long>(masses.size())) return Rat(0);
        return masses[static_cast<size_t>(i)];
    }
    void trim();
    Rat total() const;
};

// One shifted binomial term of the Katai-Mogyorodi decomposition:
// weight * L(Y_size + shift) with weight = 2^{lambda_j}/n, shift = j-1.
struct MixtureTerm {
    Rat weight;
    long size;
    long shift;
};
struct BinomialMixture {
    std::vector<MixtureTerm> terms;
};

// Enumeration oracle; throws std::range_error above the cap (default 10^6).
ExactPMF pmf_bruteforce(const Int& n, const Int& cap = Int(1000000));

// Exact mixture-of-binomials route (q = 2).
std::pair<ExactPMF, BinomialMixture> pmf_mixture(const Int& n);

// Coefficient k of the returned polynomial equals P(X_n = k) in base q.
std::vector<Rat> pgf_closed_form(const Int& n, int q);

ExactPMF binomial_pmf(long lambda);

// Probability distances, exact except KL.
Rat dtv_exact(const ExactPMF& P, const ExactPMF& Q);
Rat kolmogorov_exact(const ExactPMF& P, const ExactPMF& Q);
// chi2/KL require support(P) subseteq support(Q); otherwise std::domain_error.
Rat chi2_exact(const ExactPMF& P, const ExactPMF& Q);
Real kl_divergence(const ExactPMF& P, const ExactPMF& Q);

// E(X_n^m) for base 2, from the closed-form PGF.
Rat moment_exact(const Int& n, int m);

}  // namespace digitsum
