#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdlib>
#include <string>
#include <vector>

namespace digitsum {

// Arbitrary-precision integer / rational backed by GMP.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// High-precision float backed by MPFR.  Mantissa defaults to 128 bits and can
// be overridden through the DIGITSUM_PRECISION environment variable (bits).
using Real = boost::multiprecision::mpfr_float;

inline unsigned precision_bits() {
    static const unsigned bits = [] {
        if (const char* env = std::getenv("DIGITSUM_PRECISION")) {
            long v = std::atol(env);
            if (v >= 64) return static_cast<unsigned>(v);
        }
        return 128u;
    }();
    return bits;
}

// Installs the configured default precision for Real in the calling thread.
// Call once near the top of main() and at the start of worker threads.
inline void install_real_precision() {
    // mpfr_float's default_precision is expressed in decimal digits.
    const unsigned digits10 =
        static_cast<unsigned>(precision_bits() * 0.30103) + 1;
    Real::default_precision(digits10);
}

// Exact binomial coefficient; zero outside 0 <= k <= n.
inline Int binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Row {C(n,0),...,C(n,n)} of Pascal's triangle.
inline std::vector<Int> binom_row(long n) {
    std::vector<Int> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (long k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

inline double to_double(const Rat& x) { return x.convert_to<double>(); }
inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline Real to_real(const Rat& x) {
    return Real(numerator(x)) / Real(denominator(x));
}

}  // namespace digitsum
