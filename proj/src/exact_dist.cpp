#include "digitsum/exact_dist.hpp"

#include <algorithm>
#include <stdexcept>

#include "digitsum/digits.hpp"

namespace digitsum {

void ExactPMF::trim() {
    size_t lo = 0, hi = masses.size();
    while (lo < hi && masses[lo] == 0) ++lo;
    while (hi > lo && masses[hi - 1] == 0) --hi;
    if (lo > 0 || hi < masses.size()) {
        masses = std::vector<Rat>(masses.begin() + static_cast<long>(lo),
                                  masses.begin() + static_cast<long>(hi));
        offset += static_cast<long>(lo);
    }
}

Rat ExactPMF::total() const {
    Rat t = 0;
    for (const Rat& m : masses) t += m;
    return t;
}

ExactPMF pmf_bruteforce(const Int& n, const Int& cap) {
    if (n < 1) throw std::domain_error("pmf of an empty distribution");
    if (n > cap) throw std::range_error("n exceeds the brute-force oracle cap");
    unsigned long long un = n.convert_to<unsigned long long>();
    std::vector<unsigned long long> counts(65, 0);
    for (unsigned long long j = 0; j < un; ++j)
        ++counts[static_cast<size_t>(__builtin_popcountll(j))];
    ExactPMF p;
    for (unsigned long long c : counts) p.masses.push_back(Rat(Int(c), n));
    p.trim();
    return p;
}

std::pair<ExactPMF, BinomialMixture> pmf_mixture(const Int& n) {
    if (n < 1) throw std::domain_error("pmf of an empty distribution");
    DigitExpansion e = digit_expansion(n, 2);
    BinomialMixture mix;
    long kmax = 0;
    for (long j = 1; j <= e.s(); ++j) {
        long lj = e.powers[static_cast<size_t>(j - 1)];
        mix.terms.push_back({Rat(Int(1) << static_cast<unsigned>(lj), n), lj,
                             j - 1});
        kmax = std::max(kmax, lj + j - 1);
    }
    // P(X_n = k) = (1/n) sum_j 2^{lambda_j} P(Y_{lambda_j} = k - j + 1)
    //            = (1/n) sum_j C(lambda_j, k - j + 1).
    std::vector<Int> num(static_cast<size_t>(kmax) + 1, Int(0));
    for (long j = 1; j <= e.s(); ++j) {
        long lj = e.powers[static_cast<size_t>(j - 1)];
        std::vector<Int> row = binom_row(lj);
        for (long i = 0; i <= lj; ++i)
            num[static_cast<size_t>(i + j - 1)] += row[static_cast<size_t>(i)];
    }
    ExactPMF p;
    for (const Int& c : num) p.masses.push_back(Rat(c, n));
    p.trim();
    return {p, mix};
}

std::vector<Rat> pgf_closed_form(const Int& n, int q) {
    if (q < 2) throw std::invalid_argument("base must be >= 2");
    if (n < 1) throw std::domain_error("pmf of an empty distribution");
    DigitExpansion e = digit_expansion(n, q);
    // E(y^{X_n}) = (1/n) sum_j y^{c_1+...+c_{j-1}} (1+...+y^{c_j-1})
    //              (1+y+...+y^{q-1})^{lambda_j}.
    // Precompute powers of the block polynomial 1 + y + ... + y^{q-1}.
    std::vector<std::vector<Int>> blockpow(static_cast<size_t>(e.lambda) + 2);
    blockpow[0] = {Int(1)};
    for (long t = 1; t <= e.lambda; ++t) {
        const std::vector<Int>& prev = blockpow[static_cast<size_t>(t - 1)];
        std::vector<Int> next(prev.size() + static_cast<size_t>(q) - 1, Int(0));
        for (size_t i = 0; i < prev.size(); ++i)
            for (int d = 0; d < q; ++d)
                next[i + static_cast<size_t>(d)] += prev[i];
        blockpow[static_cast<size_t>(t)] = std::move(next);
    }
    std::vector<Int> acc(1, Int(0));  // numerator polynomial, n * PGF
    long prefix = 0;                  // c_1 + ... + c_{j-1}
    for (long pos = e.lambda; pos >= 0; --pos) {
        int c = e.digits[static_cast<size_t>(pos)];
        if (c == 0) continue;
        const std::vector<Int>& bp = blockpow[static_cast<size_t>(pos)];
        // add y^{prefix} (1 + ... + y^{c-1}) * block^{pos}
        size_t need = static_cast<size_t>(prefix + c - 1) + bp.size();
        if (acc.size() < need) acc.resize(need, Int(0));
        for (int d = 0; d < c; ++d)
            for (size_t i = 0; i < bp.size(); ++i)
                acc[static_cast<size_t>(prefix + d) + i] += bp[i];
        prefix += c;
    }
    std::vector<Rat> out;
    out.reserve(acc.size());
    for (const Int& c : acc) out.push_back(Rat(c, n));
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

ExactPMF binomial_pmf(long lambda) {
    if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
    std::vector<Int> row = binom_row(lambda);
    Int denom = Int(1) << static_cast<unsigned>(lambda);
    ExactPMF p;
    for (const Int& c : row) p.masses.push_back(Rat(c, denom));
    return p;
}

Rat dtv_exact(const ExactPMF& P, const ExactPMF& Q) {
    long lo = std::min(P.support_min(), Q.support_min());
    long hi = std::max(P.support_max(), Q.support_max());
    Rat sum = 0;
    for (long k = lo; k <= hi; ++k) sum += abs(P.at(k) - Q.at(k));
    return sum / 2;
}

Rat kolmogorov_exact(const ExactPMF& P, const ExactPMF& Q) {
    long lo = std::min(P.support_min(), Q.support_min());
    long hi = std::max(P.support_max(), Q.support_max());
    Rat cdf_gap = 0, best = 0;
    for (long k = lo; k <= hi; ++k) {
        cdf_gap += P.at(k) - Q.at(k);
        Rat gap = abs(cdf_gap);
        if (gap > best) best = gap;
    }
    return best;
}

static void check_support(const ExactPMF& P, const ExactPMF& Q) {
    long lo = std::min(P.support_min(), Q.support_min());
    long hi = std::max(P.support_max(), Q.support_max());
    for (long k = lo; k <= hi; ++k)
        if (P.at(k) != 0 && Q.at(k) == 0)
            throw std::domain_error(
                "support violation: P has mass where Q does not");
}

Rat chi2_exact(const ExactPMF& P, const ExactPMF& Q) {
    check_support(P, Q);
    Rat sum = 0;
    for (long k = Q.support_min(); k <= Q.support_max(); ++k) {
        Rat qk = Q.at(k);
        if (qk == 0) continue;
        Rat d = P.at(k) - qk;
        sum += d * d / qk;
    }
    return sum;
}

Real kl_divergence(const ExactPMF& P, const ExactPMF& Q) {
    check_support(P, Q);
    Real sum = 0;
    for (long k = P.support_min(); k <= P.support_max(); ++k) {
        Rat pk = P.at(k);
        if (pk == 0) continue;  // 0 log 0 = 0
        sum += to_real(pk) * log(to_real(pk) / to_real(Q.at(k)));
    }
    return sum;
}

Rat moment_exact(const Int& n, int m) {
    if (m < 0) throw std::invalid_argument("moment order must be >= 0");
    std::vector<Rat> pgf = pgf_closed_form(n, 2);
    Rat sum = 0;
    for (size_t k = 0; k < pgf.size(); ++k) {
        Int kp = 1;
        for (int i = 0; i < m; ++i) kp *= static_cast<long>(k);
        sum += kp * pgf[k];
    }
    return sum;
}

}  // namespace digitsum
