#include "digitsum/stein.hpp"

#include <algorithm>
#include <stdexcept>

#include "digitsum/digits.hpp"
#include "digitsum/exact_dist.hpp"

namespace digitsum {

SteinSolution stein_solve(long lambda, const std::vector<Rat>& h) {
    if (lambda < 1) throw std::domain_error("degenerate: lambda must be >= 1");
    if (static_cast<long>(h.size()) != lambda + 1)
        throw std::invalid_argument("h must be tabulated on 0..lambda");
    SteinSolution sol;
    sol.lambda = lambda;
    sol.h = h;
    std::vector<Int> row = binom_row(lambda);
    Int denom = Int(1) << static_cast<unsigned>(lambda);
    Rat Eh = 0;
    for (long r = 0; r <= lambda; ++r)
        Eh += Rat(row[static_cast<size_t>(r)], denom) *
              h[static_cast<size_t>(r)];
    sol.Eh = Eh;
    Rat prefix = 0;
    for (long m = 0; m < lambda; ++m) {
        prefix += Rat(row[static_cast<size_t>(m)]) *
                  (h[static_cast<size_t>(m)] - Eh);
        sol.g.push_back(prefix /
                        (Rat(lambda - m) * Rat(row[static_cast<size_t>(m)])));
    }
    return sol;
}

Rat stein_residual(const SteinSolution& sol) {
    Rat best = 0;
    for (long m = 1; m < sol.lambda; ++m) {
        Rat r = Rat(sol.lambda - m) * sol.g[static_cast<size_t>(m)] -
                Rat(m) * sol.g[static_cast<size_t>(m - 1)] -
                (sol.h[static_cast<size_t>(m)] - sol.Eh);
        { Rat ar = abs(r); if (ar > best) best = ar; }
    }
    return best;
}

Rat stein_residual_flipped(const SteinSolution& sol) {
    Rat best = 0;
    for (long m = 1; m < sol.lambda; ++m) {
        Rat r = Rat(m - sol.lambda) * sol.g[static_cast<size_t>(m)] +
                Rat(m) * sol.g[static_cast<size_t>(m - 1)] -
                (sol.h[static_cast<size_t>(m)] - sol.Eh);
        { Rat ar = abs(r); if (ar > best) best = ar; }
    }
    return best;
}

Rat g_uniform_bound(long lambda) {
    if (lambda < 1) throw std::domain_error("lambda must be >= 1");
    if (lambda == 1) return Rat(1, 2);  // enumerated: |g(0)| = |h(0)-Eh| <= 1/2
    long half = lambda / 2;
    return Rat(Int(1) << static_cast<unsigned>(lambda),
               Int(half) * binom(lambda, half));
}

MeanCorrection stein_mean_correction(const Int& n, const std::vector<Rat>& h) {
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    if (static_cast<long>(h.size()) != lambda + 1)
        throw std::invalid_argument("h must be tabulated on 0..lambda");
    for (const Rat& v : h)
        if (v < 0 || v > 1)
            throw std::invalid_argument("h must take values in [0,1]");
    ExactPMF pmf = pmf_mixture(n).first;
    ExactPMF bin = binomial_pmf(lambda);
    MeanCorrection out;
    out.lhs = 0;
    for (long k = pmf.support_min(); k <= pmf.support_max(); ++k) {
        // h is extended by zero beyond lambda (its stated domain)
        Rat hk = (k >= 0 && k <= lambda) ? h[static_cast<size_t>(k)] : Rat(0);
        out.lhs += pmf.at(k) * hk;
    }
    for (long k = 0; k <= lambda; ++k)
        out.lhs -= bin.at(k) * h[static_cast<size_t>(k)];
    Rat a1 = mean_exact(n, 2) - Rat(lambda, 2);
    Rat expectation = 0;
    for (long k = 0; k <= lambda; ++k)
        expectation += bin.at(k) * h[static_cast<size_t>(k)] *
                       (Rat(lambda, 2) - k) / lambda;
    out.rhs_leading = 4 * a1 * expectation;
    out.diff = out.lhs - out.rhs_leading;
    return out;
}

Rat dtv_via_stein(const Int& n) {
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    Rat a1 = mean_exact(n, 2) - Rat(lambda, 2);
    if (lambda == 0) return 0;
    ExactPMF bin = binomial_pmf(lambda);
    Rat mean_abs = 0;
    for (long k = 0; k <= lambda; ++k)
        mean_abs += bin.at(k) * abs(Rat(k) - Rat(lambda, 2));
    return abs(a1) * mean_abs / Rat(lambda, 2);
}

}  // namespace digitsum
