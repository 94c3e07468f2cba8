#include "digitsum/approx.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <stdexcept>

#include "digitsum/digits.hpp"
#include "digitsum/exact_dist.hpp"

namespace digitsum {

ExpansionCoeffs a_coeffs(const Int& n, int m) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    // Numerator polynomial A(y) = sum_j y^{j-1} (1+y)^{lambda_j}, so that
    // E(y^{X_n}) = A(y)/n and the ratio is (2^lambda/n) A(y)/(1+y)^lambda.
    std::vector<Int> A(1, Int(0));
    for (long j = 1; j <= e.s(); ++j) {
        long lj = e.powers[static_cast<size_t>(j - 1)];
        std::vector<Int> row = binom_row(lj);
        size_t need = static_cast<size_t>(j - 1 + lj) + 1;
        if (A.size() < need) A.resize(need, Int(0));
        for (long i = 0; i <= lj; ++i)
            A[static_cast<size_t>(j - 1 + i)] += row[static_cast<size_t>(i)];
    }
    // Re-center at y = 1 + t: coeff of t^u in A(1+t) is sum_i A_i C(i, u).
    std::vector<Int> At(static_cast<size_t>(m) + 1, Int(0));
    for (size_t i = 0; i < A.size(); ++i) {
        if (A[i] == 0) continue;
        Int c = 1;  // C(i, u), updated incrementally
        for (long u = 0; u <= m && u <= static_cast<long>(i); ++u) {
            At[static_cast<size_t>(u)] += A[i] * c;
            c = c * (static_cast<long>(i) - u) / (u + 1);
        }
    }
    // Series (2+t)^{-lambda} = 2^{-lambda} sum_r C(lambda+r-1, r)(-t/2)^r.
    std::vector<Rat> inv(static_cast<size_t>(m) + 1);
    Int num = 1;  // C(lambda + r - 1, r)
    Int den = Int(1) << static_cast<unsigned>(lambda);
    for (int r = 0; r <= m; ++r) {
        inv[static_cast<size_t>(r)] = Rat((r % 2 ? -num : num), den);
        num = num * (lambda + r) / (r + 1);
        den <<= 1;
    }
    ExpansionCoeffs out;
    out.n = n;
    Rat scale = Rat(Int(1) << static_cast<unsigned>(lambda), n);
    for (int r = 0; r <= m; ++r) {
        Rat c = 0;
        for (int u = 0; u <= r; ++u)
            c += Rat(At[static_cast<size_t>(u)]) *
                 inv[static_cast<size_t>(r - u)];
        out.coeffs.push_back(scale * c);
    }
    return out;
}

ExpansionCoeffs a_coeffs_explicit(const Int& n, int m) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    ExpansionCoeffs out;
    out.n = n;
    Rat scale = Rat(Int(1) << static_cast<unsigned>(lambda), n);
    for (int r = 0; r <= m; ++r) {
        Rat sum = 0;
        for (long j = 1; j <= e.s(); ++j) {
            long gap = lambda - e.powers[static_cast<size_t>(j - 1)];
            Rat inner = 0;
            for (int l = 0; l <= r; ++l) {
                Int b1 = binom(gap + l - 1, l);  // C(-1, 0) = 1 when gap=l=0
                if (gap == 0) b1 = (l == 0) ? 1 : 0;
                Int b2 = binom(j - 1, r - l);
                if (b1 == 0 || b2 == 0) continue;
                Rat term = Rat(b1 * b2, Int(1) << static_cast<unsigned>(l));
                inner += (l % 2 ? -term : term);
            }
            sum += inner / (Int(1) << static_cast<unsigned>(gap));
        }
        out.coeffs.push_back(scale * sum);
    }
    return out;
}

Int delta_binomial(long lambda, int r, long k) {
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    Int sum = 0;
    for (int l = 0; l <= r; ++l) {
        Int t = binom(r, l) * binom(lambda, k - l);
        sum += (l % 2 ? -t : t);
    }
    return sum;
}

SignedMeasure approximant_pmf(const Int& n, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    ExpansionCoeffs a = a_coeffs(n, m - 1);
    Rat pow2 = Rat(1, Int(1) << static_cast<unsigned>(lambda));
    SignedMeasure out;
    out.offset = 0;
    long kmax = lambda + m - 1;
    for (long k = 0; k <= kmax; ++k) {
        Rat w = 0;
        for (int r = 0; r < m; ++r) {
            Rat term = a.coeffs[static_cast<size_t>(r)] *
                       Rat(delta_binomial(lambda, r, k));
            w += (r % 2 ? -term : term);
        }
        out.weights.push_back(pow2 * w);
    }
    while (out.weights.size() > 1 && out.weights.back() == 0)
        out.weights.pop_back();
    return out;
}

Rat l1_residual(const Int& n, int m, ResidualRange range) {
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    ExactPMF pmf = pmf_mixture(n).first;
    SignedMeasure approx = approximant_pmf(n, m);
    long lo = 0, hi = lambda;
    if (range == ResidualRange::full) {
        lo = std::min(pmf.support_min(), approx.support_min());
        hi = std::max(pmf.support_max(), approx.support_max());
    }
    Rat sum = 0;
    for (long k = lo; k <= hi; ++k) sum += abs(pmf.at(k) - approx.at(k));
    return sum;
}

// ---------------------------------------------------------------------------
// Hermite machinery

// Integer coefficients of the probabilists' Hermite polynomial H_m.
static std::vector<Int> hermite_poly(int m) {
    std::vector<Int> hm1 = {Int(1)};  // H_0
    if (m == 0) return hm1;
    std::vector<Int> hm = {Int(0), Int(1)};  // H_1
    for (int k = 1; k < m; ++k) {
        // H_{k+1} = x H_k - k H_{k-1}
        std::vector<Int> next(hm.size() + 1, Int(0));
        for (size_t i = 0; i < hm.size(); ++i) next[i + 1] = hm[i];
        for (size_t i = 0; i < hm1.size(); ++i)
            next[i] -= k * hm1[i];
        hm1.swap(hm);
        hm.swap(next);
    }
    return hm;
}

static Real horner(const std::vector<Int>& c, const Real& x) {
    Real v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + Real(c[i]);
    return v;
}

std::vector<Real> hermite_roots(int m) {
    std::vector<Int> poly = hermite_poly(m);
    std::vector<Real> roots;
    if (m == 0) return roots;
    // All roots lie in (-R, R) with R = sqrt(4m+2); scan for sign changes on
    // a fine grid and bisect each bracket down to 1e-12.
    Real R = sqrt(Real(4 * m + 2));
    const int grid = 400 * m;
    Real prev_x = -R, prev_v = horner(poly, prev_x);
    for (int i = 1; i <= grid; ++i) {
        Real x = -R + (2 * R * i) / grid;
        Real v = horner(poly, x);
        if (v == 0) {
            roots.push_back(x);
        } else if (prev_v != 0 && ((prev_v < 0) != (v < 0))) {
            Real lo = prev_x, hi = x;
            Real flo = prev_v;
            while (hi - lo > Real(1e-12)) {
                Real mid = (lo + hi) / 2;
                Real fm = horner(poly, mid);
                if (fm == 0) { lo = hi = mid; break; }
                if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; }
                else hi = mid;
            }
            roots.push_back((lo + hi) / 2);
        }
        prev_x = x;
        prev_v = v;
    }
    if (static_cast<int>(roots.size()) != m)
        throw std::runtime_error("hermite root isolation failed");
    return roots;
}

// Adaptive Simpson on [a,b] for f(x) = |H_m(x)| e^{-x^2/2}.
static Real simpson(const std::vector<Int>& poly, const Real& a,
                    const Real& b) {
    auto f = [&](const Real& x) -> Real {
        return abs(horner(poly, x)) * exp(-x * x / 2);
    };
    struct Frame { Real a, b, fa, fm, fb, whole; int depth; };
    Real m0 = (a + b) / 2;
    Real fa = f(a), fm = f(m0), fb = f(b);
    Real whole = (b - a) / 6 * (fa + 4 * fm + fb);
    std::vector<Frame> stack{{a, b, fa, fm, fb, whole, 0}};
    Real total = 0;
    const Real tol = Real(1e-14);
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        Real mid = (fr.a + fr.b) / 2;
        Real lm = (fr.a + mid) / 2, rm = (mid + fr.b) / 2;
        Real flm = f(lm), frm = f(rm);
        Real left = (mid - fr.a) / 6 * (fr.fa + 4 * flm + fr.fm);
        Real right = (fr.b - mid) / 6 * (fr.fm + 4 * frm + fr.fb);
        Real err = left + right - fr.whole;
        if (fr.depth > 40)
            throw std::runtime_error("quadrature failed to converge");
        if (abs(err) < tol * (1 + abs(left + right)) || fr.depth > 30) {
            total += left + right + err / 15;
        } else {
            stack.push_back({fr.a, mid, fr.fa, flm, fr.fm, left,
                             fr.depth + 1});
            stack.push_back({mid, fr.b, fr.fm, frm, fr.fb, right,
                             fr.depth + 1});
        }
    }
    return total;
}

Real hermite_constant(int m) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    std::vector<Int> poly = hermite_poly(m);
    std::vector<Real> roots = hermite_roots(m);
    // |H_m| is even, so integrate over [0, inf) and double.  Split at the
    // nonnegative roots so the integrand is smooth on each piece.
    std::vector<Real> cuts{Real(0)};
    for (const Real& r : roots)
        if (r > 0) cuts.push_back(r);
    Real top = (roots.empty() ? Real(0) : roots.back()) + 15;
    cuts.push_back(top);
    Real integral = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        integral += simpson(poly, cuts[i], cuts[i + 1]);
    integral *= 2;
    Real pi = boost::math::constants::pi<Real>();
    return pow(Real(2), Real(m) / 2) / sqrt(2 * pi) * integral;
}

Real dtv_asymptotic(const Int& n) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    DigitExpansion e = digit_expansion(n, 2);
    Rat a1 = mean_exact(n, 2) - Rat(e.lambda, 2);
    Real pi = boost::math::constants::pi<Real>();
    return sqrt(Real(2)) * abs(to_real(a1)) / sqrt(pi * e.lambda);
}

Real spec_seq_ratio(const Int& n) {
    DigitExpansion e = digit_expansion(n, 2);
    if (e.s() < 2)
        throw std::domain_error(
            "comparator undefined: n is a power of two (lambda_2 missing)");
    long lambda = e.lambda, gap = lambda - e.powers[1];
    Rat dtv = dtv_exact(pmf_mixture(n).first, binomial_pmf(lambda));
    Real comparator = Real(1) / (Int(1) << static_cast<unsigned>(gap));
    Real ratio_part = Real(gap) / sqrt(Real(lambda));
    comparator *= (ratio_part < 1 ? ratio_part : Real(1));
    return to_real(dtv) / comparator;
}

}  // namespace digitsum
