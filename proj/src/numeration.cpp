#include "digitsum/numeration.hpp"

#include <boost/math/constants/constants.hpp>

#include <stdexcept>

#include "digitsum/digits.hpp"

namespace digitsum {

long gray_weight(const Int& n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    // gamma(2^k + j) = 1 + gamma(2^k - 1 - j)
    Int m = n;
    long w = 0;
    while (m > 0) {
        long k = static_cast<long>(msb(m));
        Int j = m - (Int(1) << static_cast<unsigned>(k));
        ++w;
        m = (Int(1) << static_cast<unsigned>(k)) - 1 - j;
    }
    return w;
}

long gray_weight_halving(const Int& n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    // gamma(n) = gamma(floor(n/2)) + [ceil(n/2) is odd]
    Int m = n;
    long w = 0;
    while (m > 0) {
        Int half_up = (m + 1) / 2;
        if (half_up % 2 == 1) ++w;
        m /= 2;
    }
    return w;
}

long gray_weight_popcount(const Int& n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n == 0) return 0;
    Int g = n ^ (n >> 1);
    return static_cast<long>(mpz_popcount(g.backend().data()));
}

long transcomplement_weight(const Int& n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    // mu(2^k + j) = k + 1 - mu(j), mu(0) = 0
    Int m = n;
    long w = 0;
    int sign = 1;
    while (m > 0) {
        long k = static_cast<long>(msb(m));
        w += sign * (k + 1);
        sign = -sign;
        m -= Int(1) << static_cast<unsigned>(k);
    }
    return w;  // loop ends at m == 0 with mu(0) = 0
}

CodingSystem binary_system() {
    CodingSystem sys{"binary",
                     [](const Int& n) {
                         return n == 0 ? 0L
                                       : static_cast<long>(mpz_popcount(
                                             n.backend().data()));
                     },
                     false};
    verify_halving(sys, 1024);
    return sys;
}

CodingSystem gray_system() {
    CodingSystem sys{"gray", [](const Int& n) { return gray_weight(n); },
                     false};
    verify_halving(sys, 1024);
    return sys;
}

CodingSystem transcomplement_system() {
    CodingSystem sys{"transcomplement",
                     [](const Int& n) { return transcomplement_weight(n); },
                     false};
    verify_halving(sys, 1024);
    return sys;
}

HalvingResult verify_halving(CodingSystem& sys, long n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    // Running histogram of w(j) for j < m; snapshots kept for m <= n_max so
    // that R_{2n} can be compared against (1+y) R_n when m = 2n is reached.
    std::vector<std::vector<long>> snaps(static_cast<size_t>(n_max) + 1);
    std::vector<long> hist;
    if (sys.weight(0) != 0) return {false, 1};  // w(0) != 0 breaks n = 1
    for (long m = 1; m <= 2 * n_max; ++m) {
        long w = sys.weight(Int(m - 1));
        if (w < 0) return {false, m};
        if (static_cast<size_t>(w) >= hist.size())
            hist.resize(static_cast<size_t>(w) + 1, 0);
        ++hist[static_cast<size_t>(w)];
        if (m <= n_max) snaps[static_cast<size_t>(m)] = hist;
        if (m % 2 == 0 && m / 2 <= n_max) {
            const std::vector<long>& rn = snaps[static_cast<size_t>(m / 2)];
            // R_{2n}[k] must equal R_n[k] + R_n[k-1]
            size_t width = rn.size() + 1;
            for (size_t k = 0; k < width; ++k) {
                long expect = (k < rn.size() ? rn[k] : 0) +
                              (k >= 1 && k - 1 < rn.size() ? rn[k - 1] : 0);
                long got = (k < hist.size() ? hist[k] : 0);
                if (expect != got) return {false, m / 2};
            }
        }
    }
    sys.certified = true;
    return {true, 0};
}

ExactPMF code_pmf(const CodingSystem& sys, const Int& n, bool brute) {
    if (n < 1) throw std::domain_error("pmf of an empty distribution");
    ExactPMF p;
    if (brute) {
        if (n > 10000000)
            throw std::range_error("brute-force route capped at 10^7");
        unsigned long long un = n.convert_to<unsigned long long>();
        std::vector<Int> counts;
        for (unsigned long long j = 0; j < un; ++j) {
            long w = sys.weight(Int(j));
            if (static_cast<size_t>(w) >= counts.size())
                counts.resize(static_cast<size_t>(w) + 1, Int(0));
            ++counts[static_cast<size_t>(w)];
        }
        for (const Int& c : counts) p.masses.push_back(Rat(c, n));
    } else {
        if (!sys.certified)
            throw std::domain_error(
                "closed-form route requires a certified coding system");
        DigitExpansion e = digit_expansion(n, 2);
        std::vector<Int> num(1, Int(0));
        for (long j = 1; j <= e.s(); ++j) {
            long lj = e.powers[static_cast<size_t>(j - 1)];
            long shift = sys.weight((n >> static_cast<unsigned>(lj)) - 1);
            std::vector<Int> row = binom_row(lj);
            size_t need = static_cast<size_t>(shift + lj) + 1;
            if (num.size() < need) num.resize(need, Int(0));
            for (long i = 0; i <= lj; ++i)
                num[static_cast<size_t>(shift + i)] +=
                    row[static_cast<size_t>(i)];
        }
        for (const Int& c : num) p.masses.push_back(Rat(c, n));
    }
    p.trim();
    return p;
}

Rat gbar1(const CodingSystem& sys, const Int& n) {
    DigitExpansion e = digit_expansion(n, 2);
    ExactPMF p = code_pmf(sys, n);
    Rat mean = 0;
    for (long k = p.support_min(); k <= p.support_max(); ++k)
        mean += Rat(k) * p.at(k);
    return mean - Rat(e.lambda, 2);
}

Rat gbar1_via_coeffs(const CodingSystem& sys, const Int& n) {
    if (!sys.certified)
        throw std::domain_error("coefficient route requires certification");
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    // b_1 = coefficient of (y-1) in E(y^{Z_n}) ((1+y)/2)^{-lambda}:
    // with A(y) = n E(y^{Z_n}), b_1 = (2^lambda/n)(A'(1)/2^lambda
    //             - lambda A(1)/2^{lambda+1}) = A'(1)/n - lambda/2.
    Rat a_prime = 0;
    for (long j = 1; j <= e.s(); ++j) {
        long lj = e.powers[static_cast<size_t>(j - 1)];
        long mu = sys.weight((n >> static_cast<unsigned>(lj)) - 1);
        // d/dy [y^mu (1+y)^lj] at y=1 : mu 2^lj + lj 2^{lj-1}
        a_prime += Rat(Int(mu) << static_cast<unsigned>(lj)) +
                   (lj > 0 ? Rat(Int(lj) << static_cast<unsigned>(lj - 1))
                           : Rat(0));
    }
    return a_prime / n - Rat(lambda, 2);
}

G1G2 g1_g2(const CodingSystem& sys, const Int& n) {
    if (!sys.certified)
        throw std::domain_error("closed-form route requires certification");
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    Rat scale = Rat(Int(1) << static_cast<unsigned>(lambda), n);
    Rat A = 0, C2 = 0;
    for (long j = 1; j <= e.s(); ++j) {
        long lj = e.powers[static_cast<size_t>(j - 1)];
        long gap = lambda - lj;
        long mu = sys.weight((n >> static_cast<unsigned>(lj)) - 1);
        Rat w = Rat(1, Int(1) << static_cast<unsigned>(gap));
        A += w * (Rat(mu) - Rat(gap, 2));
        C2 += w * (Rat(mu) * mu - Rat(mu) * gap + Rat(gap * (gap - 1), 4));
    }
    A *= scale;
    C2 *= scale;
    G1G2 out;
    out.g1_const = A;
    out.g2_const = C2 - A * A;
    return out;
}

std::pair<Rat, Real> dtv_codes(const Int& n) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    static thread_local CodingSystem bin = binary_system();
    static thread_local CodingSystem gray = gray_system();
    DigitExpansion e = digit_expansion(n, 2);
    ExactPMF pb = code_pmf(bin, n);
    ExactPMF pg = code_pmf(gray, n);
    Rat exact = dtv_exact(pb, pg);
    Rat a1 = mean_exact(n, 2) - Rat(e.lambda, 2);
    Rat diff = a1 - gbar1(gray, n);
    Real pi = boost::math::constants::pi<Real>();
    Real main_term =
        sqrt(Real(2)) * abs(to_real(diff)) / sqrt(pi * e.lambda);
    return {exact, main_term};
}

std::vector<LLTRow> llt_check(const CodingSystem& sys, const Int& n,
                              const std::vector<double>& xs) {
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    ExactPMF p = code_pmf(sys, n);
    Real pi = boost::math::constants::pi<Real>();
    std::vector<LLTRow> rows;
    for (double x : xs) {
        Real kx = Real(lambda) / 2 + Real(x) * sqrt(Real(lambda)) / 2;
        long k = static_cast<long>(floor(kx).convert_to<double>());
        Real gauss = sqrt(Real(2)) * exp(-Real(x) * Real(x) / 2) /
                     sqrt(pi * lambda);
        Rat exact = p.at(k);
        rows.push_back({x, k, exact, gauss, to_real(exact) / gauss});
    }
    return rows;
}

}  // namespace digitsum
