#include "digitsum/figures.hpp"

#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "digitsum/approx.hpp"
#include "digitsum/digits.hpp"
#include "digitsum/exact_dist.hpp"
#include "digitsum/format.hpp"
#include "digitsum/numeration.hpp"
#include "digitsum/periodic.hpp"

namespace digitsum {

namespace {

// Evaluates row(i) for i in [0, count) across `jobs` threads and writes the
// rows to `os` in index order.
void emit_rows(std::ostream& os, long count, int jobs,
               const std::function<std::string(long)>& row) {
    if (jobs < 1) jobs = 1;
    std::vector<std::string> rows(static_cast<size_t>(count));
    if (jobs == 1) {
        for (long i = 0; i < count; ++i)
            rows[static_cast<size_t>(i)] = row(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                install_real_precision();
                for (long i = t; i < count; i += jobs)
                    rows[static_cast<size_t>(i)] = row(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (const std::string& r : rows) os << r << '\n';
}

Real log2n(const Int& n) { return log2(to_real(Rat(n))); }

long pick(long requested, long fallback) {
    return requested > 0 ? requested : fallback;
}

}  // namespace

bool figure_supported(int figure) {
    switch (figure) {
        case 2: case 4: case 5: case 8: case 10: case 11:
        case 13: case 14: case 15:
            return true;
        default:
            return false;
    }
}

void write_figure_csv(int figure, std::ostream& os, const FigureOptions& opt) {
    switch (figure) {
        case 2: {
            // Residual of the leading dtv approximation over a dense dyadic
            // sweep: dtv(X_n, Y_lambda) - sqrt(2)|F(log2 n)|/sqrt(pi lambda).
            long ml = pick(opt.max_lambda, 10);
            if (ml < 5) throw std::invalid_argument("max_lambda must be >= 5");
            os << "figure2_log2n,figure2_dtv_minus_main_term\n";
            Int start = Int(1) << 5;
            Int stop = Int(1) << static_cast<unsigned>(ml + 1);
            long count = (stop - start).convert_to<long>();
            emit_rows(os, count, opt.jobs, [&](long i) {
                Int n = start + i;
                DigitExpansion e = digit_expansion(n, 2);
                Rat dtv = dtv_exact(pmf_mixture(n).first,
                                    binomial_pmf(e.lambda));
                Real resid = to_real(dtv) - dtv_asymptotic(n);
                return fmt_real(log2n(n)) + "," + fmt_real(resid);
            });
            break;
        }
        case 4: {
            // Mean sawtooth lambda/2 - E(X_n), exact rational.
            long ml = pick(opt.max_lambda, 9);
            if (ml < 1) throw std::invalid_argument("max_lambda must be >= 1");
            os << "figure4_log2n,figure4_half_lambda_minus_mean\n";
            Int start = 2;
            Int stop = Int(1) << static_cast<unsigned>(ml);
            long count = (stop - start + 1).convert_to<long>();
            emit_rows(os, count, opt.jobs, [&](long i) {
                Int n = start + i;
                DigitExpansion e = digit_expansion(n, 2);
                Rat v = Rat(e.lambda, 2) - mean_exact(n, 2);
                return fmt_real(log2n(n)) + "," + fmt_rat(v);
            });
            break;
        }
        case 5: {
            // -F1(x) on [0,1]: the periodic fluctuation of the mean in base 2.
            long res = pick(opt.resolution, 512);
            if (res < 2) throw std::invalid_argument("resolution must be >= 2");
            os << "figure5_x,figure5_minus_F1\n";
            emit_rows(os, res + 1, opt.jobs, [&](long i) {
                Real x = Real(i) / res;
                RealWithBound v = F1_eval(x, 2, 40);
                return fmt_real(x) + "," + fmt_real(-v.value);
            });
            break;
        }
        case 8: {
            // Variance fluctuation V(X_n) - log2(n)/4, the bounded periodic
            // quantity: rational part minus the fractional quarter.
            long ml = pick(opt.max_lambda, 9);
            if (ml < 1) throw std::invalid_argument("max_lambda must be >= 1");
            os << "figure8_log2n,figure8_variance_fluctuation\n";
            Int start = 2;
            Int stop = Int(1) << static_cast<unsigned>(ml);
            long count = (stop - start + 1).convert_to<long>();
            emit_rows(os, count, opt.jobs, [&](long i) {
                Int n = start + i;
                long lambda = digit_expansion(n, 2).lambda;
                Real f = to_real(variance_fluctuation(n)) -
                         (log2n(n) - Real(lambda)) / 4;
                return fmt_real(log2n(n)) + "," + fmt_real(f);
            });
            break;
        }
        case 10: {
            // |F| over one period, sampled at x = {log2 n} for a dyadic block.
            long ml = pick(opt.max_lambda, 10);
            if (ml < 1) throw std::invalid_argument("max_lambda must be >= 1");
            os << "figure10_frac_log2n,figure10_abs_F\n";
            Int start = Int(1) << static_cast<unsigned>(ml);
            long count = start.convert_to<long>();
            emit_rows(os, count, opt.jobs, [&](long i) {
                Int n = start + i;
                Real frac = log2n(n) - Real(ml);
                Rat F = F_eval(n);
                return fmt_real(frac) + "," + fmt_rat_decimal(abs(F));
            });
            break;
        }
        case 11: {
            // Second-order fluctuation: 2|F2(log2 n)| against |a_2(n)|.
            long ml = pick(opt.max_lambda, 10);
            if (ml < 1) throw std::invalid_argument("max_lambda must be >= 1");
            os << "figure11_frac_log2n,figure11_two_abs_F2,figure11_abs_a2\n";
            Int start = Int(1) << static_cast<unsigned>(ml);
            long count = start.convert_to<long>();
            emit_rows(os, count, opt.jobs, [&](long i) {
                Int n = start + i;
                Real frac = log2n(n) - Real(ml);
                Rat f2 = F2corr_eval(n);
                Rat a2 = a_coeffs(n, 3).coeffs[2];
                return fmt_real(frac) + "," + fmt_rat_decimal(2 * abs(f2)) +
                       "," + fmt_rat_decimal(abs(a2));
            });
            break;
        }
        case 13: {
            // Reflected-Gray weight gamma(n) for n = 1..64.
            os << "figure13_n,figure13_gamma\n";
            emit_rows(os, 64, opt.jobs, [&](long i) {
                return std::to_string(i + 1) + "," +
                       std::to_string(gray_weight(Int(i + 1)));
            });
            break;
        }
        case 14: {
            // Gray-code mean fluctuation E(Z_n) - lambda/2, exact rational.
            long ml = pick(opt.max_lambda, 9);
            if (ml < 1) throw std::invalid_argument("max_lambda must be >= 1");
            os << "figure14_log2n,figure14_gray_mean_fluctuation\n";
            CodingSystem gray = gray_system();
            Int start = 2;
            Int stop = Int(1) << static_cast<unsigned>(ml);
            long count = (stop - start + 1).convert_to<long>();
            emit_rows(os, count, opt.jobs, [&](long i) {
                Int n = start + i;
                return fmt_real(log2n(n)) + "," + fmt_rat(gbar1(gray, n));
            });
            break;
        }
        case 15: {
            // Gray-code variance fluctuation V(Z_n) - lambda/4.
            long ml = pick(opt.max_lambda, 9);
            if (ml < 1) throw std::invalid_argument("max_lambda must be >= 1");
            os << "figure15_log2n,figure15_gray_variance_fluctuation\n";
            CodingSystem gray = gray_system();
            Int start = 2;
            Int stop = Int(1) << static_cast<unsigned>(ml);
            long count = (stop - start + 1).convert_to<long>();
            emit_rows(os, count, opt.jobs, [&](long i) {
                Int n = start + i;
                return fmt_real(log2n(n)) + "," +
                       fmt_rat(g1_g2(gray, n).g2_const);
            });
            break;
        }
        default:
            throw std::invalid_argument("unknown figure number");
    }
}

}  // namespace digitsum
