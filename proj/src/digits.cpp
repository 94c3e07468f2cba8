#include "digitsum/digits.hpp"

#include <stdexcept>

namespace digitsum {

static void check_base(int q) {
    if (q < 2) throw std::invalid_argument("base must be >= 2");
}

DigitExpansion digit_expansion(const Int& n, int q) {
    check_base(q);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    DigitExpansion e;
    e.n = n;
    e.q = q;
    Int m = n;
    while (m > 0) {
        e.digits.push_back(static_cast<int>(m % q));
        m /= q;
    }
    if (!e.digits.empty()) e.lambda = static_cast<long>(e.digits.size()) - 1;
    if (q == 2) {
        for (long j = e.lambda; j >= 0; --j)
            if (e.digits[static_cast<size_t>(j)]) e.powers.push_back(j);
    }
    return e;
}

Int nu(const Int& n, int q) {
    check_base(q);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    Int total = 0, m = n;
    while (m > 0) {
        total += m % q;
        m /= q;
    }
    return total;
}

Int digit_sum_total(const Int& n, int q) {
    check_base(q);
    if (n <= 1) return 0;
    DigitExpansion e = digit_expansion(n, q);
    // d'Ocagne: S_q(n) = sum_j e_j q^j ((e_j - 1 + (q-1) j)/2 + sum_{l>j} e_l).
    // Accumulate twice the sum to stay in integers, then halve.
    Int twice = 0;
    Int qpow = 1;
    Int suffix = 0;  // sum_{l > j} e_l, built from the top down
    std::vector<Int> qpows(e.digits.size());
    for (size_t j = 0; j < e.digits.size(); ++j) {
        qpows[j] = qpow;
        qpow *= q;
    }
    for (long j = e.lambda; j >= 0; --j) {
        int ej = e.digits[static_cast<size_t>(j)];
        if (ej) {
            Int inner = Int(ej - 1) + Int(q - 1) * j + 2 * suffix;
            twice += ej * qpows[static_cast<size_t>(j)] * inner;
        }
        suffix += ej;
    }
    return twice / 2;
}

Rat mean_exact(const Int& n, int q) {
    check_base(q);
    if (n == 0) throw std::domain_error("mean of an empty distribution");
    return Rat(digit_sum_total(n, q), n);
}

Int legendre_valuation(const Int& n, int q) {
    check_base(q);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    Int total = 0, m = n / q;
    while (m > 0) {
        total += m;
        m /= q;
    }
    return total;
}

}  // namespace digitsum
