#include "digitsum/krawtchouk.hpp"

#include <stdexcept>

#include "digitsum/digits.hpp"

namespace digitsum {

static std::vector<Rat> poly_mul(const std::vector<Rat>& a,
                                 const std::vector<Rat>& b, size_t cap) {
    std::vector<Rat> out(std::min(a.size() + b.size() - 1, cap), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Rat KrawtchoukFamily::B(long t) const {
    Rat r = Rat(binom(N, t));
    for (long i = 0; i < t; ++i) r *= p;
    for (long i = 0; i < N - t; ++i) r *= q;
    return r;
}

KrawtchoukFamily krawtchouk_table(long N, const Rat& p) {
    if (p <= 0 || p >= 1) throw std::invalid_argument("p must lie in (0,1)");
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    if (N > 512) throw std::invalid_argument("N exceeds the table cap of 512");
    KrawtchoukFamily fam;
    fam.N = N;
    fam.p = p;
    fam.q = 1 - p;
    size_t cap = static_cast<size_t>(N) + 1;
    // Row t of the table is (1+qw)^t (1-pw)^{N-t}, truncated to degree N.
    // Start with (1-pw)^N and trade one factor per step.
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> cur(cap, Rat(0));
    cur[0] = 1;
    for (long i = 0; i < N; ++i) cur = poly_mul(cur, {Rat(1), -p}, cap);
    rows.push_back(cur);
    for (long t = 1; t <= N; ++t) {
        // divide by (1-pw): synthetic division (exact)
        std::vector<Rat> div(cap, Rat(0));
        Rat carry = 0;
        for (size_t i = 0; i < cap; ++i) {
            div[i] = rows.back()[i] + p * carry;
            carry = div[i];
        }
        cur = poly_mul(div, {Rat(1), fam.q}, cap);
        rows.push_back(cur);
    }
    fam.table = std::move(rows);
    return fam;
}

std::vector<Rat> expansion_coeffs(const std::vector<Rat>& f, long N,
                                  const Rat& p) {
    if (static_cast<long>(f.size()) - 1 > N)
        throw std::invalid_argument("deg f exceeds N");
    KrawtchoukFamily fam = krawtchouk_table(N, p);
    // (1-pw)^N f((1+qw)/(1-pw)) = sum_t f_t (1+qw)^t (1-pw)^{N-t}
    std::vector<Rat> c(static_cast<size_t>(N) + 1, Rat(0));
    for (size_t t = 0; t < f.size(); ++t) {
        if (f[t] == 0) continue;
        for (size_t j = 0; j < c.size(); ++j) c[j] += f[t] * fam.table[t][j];
    }
    return c;
}

std::pair<Rat, Rat> parseval_check(const std::vector<Rat>& f, long N,
                                   const Rat& p) {
    if (static_cast<long>(f.size()) - 1 > N)
        throw std::invalid_argument("deg f exceeds N");
    Rat q = 1 - p;
    // lhs = sum_t f_t^2 / B(N,t)
    Rat lhs = 0;
    {
        KrawtchoukFamily fam;  // only for B(t)
        fam.N = N;
        fam.p = p;
        fam.q = q;
        for (size_t t = 0; t < f.size(); ++t)
            if (f[t] != 0)
                lhs += f[t] * f[t] / fam.B(static_cast<long>(t));
    }
    // rhs = sum_j c_j^2 / (C(N,j) (pq)^j)
    std::vector<Rat> c = expansion_coeffs(f, N, p);
    Rat rhs = 0, pqj = 1;
    for (long j = 0; j <= N; ++j) {
        if (c[static_cast<size_t>(j)] != 0)
            rhs += c[static_cast<size_t>(j)] * c[static_cast<size_t>(j)] /
                   (Rat(binom(N, j)) * pqj);
        pqj *= p * q;
    }
    return {lhs, rhs};
}

Real chi2_upper_bound(const Int& n) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    DigitExpansion e = digit_expansion(n, 2);
    long lambda = e.lambda;
    Real sum = 0;
    for (long j = 2; j <= e.s(); ++j) {
        long lj = e.powers[static_cast<size_t>(j - 1)];
        long gap = lambda - lj;
        Real term = Real(gap) /
                    pow(Real(2), Real(gap + 1) / 2) *
                    sqrt(Real(lambda + 1) / (Real(lj + 2) * Real(lj + 1)));
        sum += term;
    }
    return sum * sum;
}

}  // namespace digitsum
