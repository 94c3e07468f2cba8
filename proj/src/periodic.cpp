#include "digitsum/periodic.hpp"

#include <stdexcept>

#include "digitsum/digits.hpp"
#include "digitsum/exact_dist.hpp"

namespace digitsum {

DyadicPoint dyadic_from_n(const Int& n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    DigitExpansion e = digit_expansion(n, 2);
    DyadicPoint p;
    p.exact = true;
    p.n = n;
    p.lambda = e.lambda;
    for (long j = 0; j < e.s(); ++j)
        p.d.push_back(e.lambda - e.powers[static_cast<size_t>(j)]);
    return p;
}

DyadicPoint dyadic_from_real(const Real& x, long J) {
    if (J < 1) throw std::invalid_argument("J must be >= 1");
    DyadicPoint p;
    p.exact = false;
    Real fr = x - floor(x);
    p.x_frac = fr;
    // Bits of 2^fr in [1, 2): scale by 2^J and truncate, which resolves
    // exact dyadic hits to the terminating expansion.
    Real v = exp2(fr);
    Int scaled = Int(floor(v * pow(Real(2), static_cast<unsigned>(J))));
    for (long i = J; i >= 0 && static_cast<long>(p.d.size()) < J; --i)
        if (bit_test(scaled, static_cast<unsigned>(i))) p.d.push_back(J - i);
    if (p.d.empty() || p.d[0] != 0)
        throw std::runtime_error("dyadic expansion failed");
    return p;
}

Rat F_eval(const Int& n) {
    DyadicPoint p = dyadic_from_n(n);
    // F(log2 n) = (2^lambda/n) sum_j 2^{-d_j} (j - d_j/2), terms indexed from
    // j = 0 at d_0 = 0; the j = 0 term vanishes, so F(log2 2^lambda) = 0.
    Rat sum = 0;
    for (size_t j = 0; j < p.d.size(); ++j) {
        Rat coeff = Rat(static_cast<long>(j)) - Rat(p.d[j], 2);
        sum += coeff / (Int(1) << static_cast<unsigned>(p.d[j]));
    }
    return sum * Rat(Int(1) << static_cast<unsigned>(p.lambda), n);
}

// Tail bound for truncating the F series after J terms with last exponent D:
// remaining terms have exponents > D and indices > J.
static Real f_tail_bound(long J, long D) {
    Real bound = 0;
    for (long t = 1; t <= 200; ++t) {
        Real mag = Real(J + t) + Real(D + t) / 2 + 1;
        bound += mag / pow(Real(2), static_cast<unsigned>(D + t));
    }
    return bound;
}

RealWithBound F_eval_real(const Real& x, long J) {
    DyadicPoint p = dyadic_from_real(x, J);
    Real sum = 0;
    for (size_t j = 0; j < p.d.size(); ++j)
        sum += (Real(static_cast<long>(j)) - Real(p.d[j]) / 2) /
               pow(Real(2), static_cast<unsigned>(p.d[j]));
    Real v = exp2(p.x_frac);
    // If fewer than J terms were extracted, every bit up to exponent J is
    // known to be zero past the last term, so the next exponent exceeds J.
    long D = static_cast<long>(p.d.size()) < J ? J : p.d.back();
    return {sum / v, f_tail_bound(static_cast<long>(p.d.size()), D) / v};
}

Real F_zeros(int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    Rat sum = 0;
    for (int j = 0; j <= k; ++j)
        sum += Rat(1, Int(1) << static_cast<unsigned>(2 * j));
    return log2(to_real(sum));
}

Rat takagi_h(const Rat& x, int q) {
    if (q < 2) throw std::invalid_argument("base must be >= 2");
    // exact floor via integer division
    Int fl = numerator(x) / denominator(x);
    if (x < 0 && fl * denominator(x) != numerator(x)) fl -= 1;
    Rat xr = x - Rat(fl);
    Rat xq = xr * q;
    Int k = numerator(xq) / denominator(xq);
    // h(x) = k(k-q)/(2q) + (x - k/q)(k - (q-1)/2) on [k/q, (k+1)/q)
    return Rat(k * (k - q), 2 * q) +
           (xr - Rat(k, q)) * (Rat(k) - Rat(q - 1, 2));
}

Real takagi_h_real(const Real& x, int q) {
    if (q < 2) throw std::invalid_argument("base must be >= 2");
    Real xr = x - floor(x);
    Real k = floor(q * xr);
    return k * (k - q) / (2 * q) + (xr - k / q) * (k - Real(q - 1) / 2);
}

static Rat h_sup(int q) {
    // max_k |h(k/q)| is attained near k = q/2
    long k = q / 2;
    return Rat(k * (q - k), 2 * q);
}

RealWithBound takagi_g(const Real& x, int q, int J) {
    if (J < 1) throw std::invalid_argument("J must be >= 1");
    Real sum = 0;
    Real scale = 1, arg = x;
    for (int j = 0; j < J; ++j) {
        sum += scale * takagi_h_real(arg, q);
        scale /= q;
        arg *= q;
        arg -= floor(arg);  // keep the argument small; h is 1-periodic
    }
    Real bound = to_real(h_sup(q)) * pow(Real(q), 1 - J) / (q - 1);
    return {sum, bound};
}

RealWithBound F1_eval(const Real& x, int q, int J) {
    Real fr = x - floor(x);
    RealWithBound g = takagi_g(pow(Real(q), fr - 1), q, J);
    Real scale = pow(Real(q), 1 - fr);
    return {Real(q - 1) / 2 * (1 - fr) + scale * g.value, scale * g.bound};
}

static Rat f2_term(long j, long d) {
    return Rat(d * (d + 5), 8) - Rat(j * d, 2) + Rat(j * (j - 3), 2) + 1;
}

Rat F2corr_eval(const Int& n) {
    DyadicPoint p = dyadic_from_n(n);
    Rat sum = 0;
    for (size_t j = 0; j < p.d.size(); ++j)
        sum += f2_term(static_cast<long>(j), p.d[j]) /
               (Int(1) << static_cast<unsigned>(p.d[j]));
    return sum * Rat(Int(1) << static_cast<unsigned>(p.lambda), n);
}

RealWithBound F2corr_eval_real(const Real& x, long J) {
    DyadicPoint p = dyadic_from_real(x, J);
    Real sum = 0;
    for (size_t j = 0; j < p.d.size(); ++j)
        sum += to_real(f2_term(static_cast<long>(j), p.d[j])) /
               pow(Real(2), static_cast<unsigned>(p.d[j]));
    Real v = exp2(p.x_frac);
    // crude quadratic-coefficient tail bound, same shape as for F
    long J0 = static_cast<long>(p.d.size());
    long D = J0 < J ? J : p.d.back();
    Real bound = 0;
    for (long t = 1; t <= 200; ++t) {
        long j = J0 + t, d = D + t;
        bound += abs(to_real(f2_term(j, d))) /
                 pow(Real(2), static_cast<unsigned>(d));
    }
    return {sum / v, bound / v};
}

Rat variance_fluctuation(const Int& n) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    DigitExpansion e = digit_expansion(n, 2);
    Rat mean = mean_exact(n, 2);
    return moment_exact(n, 2) - mean * mean - Rat(e.lambda, 4);
}

}  // namespace digitsum
