// digitsum: exact and asymptotic computations for the distribution of the
// binary (and general base-q) sum-of-digits function of a random integer.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "digitsum/accept.hpp"
#include "digitsum/approx.hpp"
#include "digitsum/digits.hpp"
#include "digitsum/exact_dist.hpp"
#include "digitsum/figures.hpp"
#include "digitsum/format.hpp"
#include "digitsum/krawtchouk.hpp"
#include "digitsum/numeration.hpp"
#include "digitsum/periodic.hpp"
#include "digitsum/stein.hpp"

using namespace digitsum;

namespace {

Int parse_int(const std::string& s) { return Int(s); }

Rat parse_rat(const std::string& s) { return Rat(s); }

std::string rat_line(const Rat& v) {
    return fmt_rat(v) + " (" + fmt_rat_decimal(v) + ")";
}

void print_pmf(const ExactPMF& p) {
    std::cout << "k,mass\n";
    for (long k = p.support_min(); k <= p.support_max(); ++k)
        std::cout << k << "," << fmt_rat(p.at(k)) << "\n";
}

CodingSystem custom_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--weights", "cannot open " + path);
    std::vector<long> w;
    long v;
    while (in >> v) w.push_back(v);
    if (w.empty())
        throw CLI::ValidationError("--weights", "no weights in " + path);
    CodingSystem sys{"custom",
                     [w](const Int& n) {
                         long i = n.convert_to<long>();
                         if (i < 0 || static_cast<size_t>(i) >= w.size())
                             throw std::domain_error(
                                 "weight table too short for n");
                         return w[static_cast<size_t>(i)];
                     },
                     false};
    verify_halving(sys, static_cast<long>(w.size()) / 2);
    return sys;
}

}  // namespace

int main(int argc, char** argv) {
    install_real_precision();
    CLI::App app{"Exact distribution of the sum-of-digits function of a "
                 "random integer, its binomial approximations, and related "
                 "coding-system weight laws."};
    app.require_subcommand(1);

    std::string n_str, x_str, metric, p_str = "1/2", system_name, weights_path,
                output_path, range_name = "theorem";
    int base = 2, order = 3, J = 40, fig = 0, jobs = 1, hline = -1;
    long max_lambda = 0, resolution = 0;
    bool brute = false;
    std::string fixtures = "fixtures";

    auto* nu_cmd = app.add_subcommand("nu", "sum of base-q digits of n");
    nu_cmd->add_option("n", n_str)->required();
    nu_cmd->add_option("--base", base);

    auto* sum_cmd =
        app.add_subcommand("sum", "sum of nu over 0..n-1 (d'Ocagne)");
    sum_cmd->add_option("n", n_str)->required();
    sum_cmd->add_option("--base", base);

    auto* mean_cmd = app.add_subcommand("mean", "exact mean of X_n");
    mean_cmd->add_option("n", n_str)->required();
    mean_cmd->add_option("--base", base);

    auto* pmf_cmd = app.add_subcommand("pmf", "exact pmf of X_n as CSV");
    pmf_cmd->add_option("n", n_str)->required();
    pmf_cmd->add_option("--base", base);
    std::string route = "mixture";
    pmf_cmd->add_option("--route", route)
        ->check(CLI::IsMember({"brute", "mixture", "pgf"}));

    auto* dist_cmd = app.add_subcommand(
        "dist", "distance between X_n and Bi(lambda, 1/2)");
    dist_cmd->add_option("metric", metric)
        ->required()
        ->check(CLI::IsMember({"dtv", "kolmogorov", "chi2", "kl"}));
    dist_cmd->add_option("n", n_str)->required();

    auto* coeffs_cmd =
        app.add_subcommand("coeffs", "expansion coefficients a_r(n)");
    coeffs_cmd->add_option("n", n_str)->required();
    coeffs_cmd->add_option("-m,--order", order);

    auto* approx_cmd = app.add_subcommand(
        "approx", "order-m approximant and its L1 residual");
    approx_cmd->add_option("n", n_str)->required();
    approx_cmd->add_option("-m,--order", order);
    approx_cmd->add_option("--range", range_name)
        ->check(CLI::IsMember({"theorem", "full"}));

    auto* per_cmd =
        app.add_subcommand("periodic", "periodic fluctuation functions");
    std::string which;
    per_cmd->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"F", "F1", "F2corr", "varfluct"}));
    auto* per_n = per_cmd->add_option("--n", n_str, "evaluate at x = log2 n");
    auto* per_x = per_cmd->add_option("--x", x_str, "evaluate at real x");
    per_cmd->add_option("--base", base);
    per_cmd->add_option("-J,--terms", J);
    per_n->excludes(per_x);

    auto* stein_cmd = app.add_subcommand(
        "stein", "Stein solver diagnostics and mean correction for X_n");
    stein_cmd->add_option("n", n_str)->required();
    stein_cmd->add_option("--half-line", hline,
                          "indicator cut (default floor(lambda/2))");

    auto* kraw_cmd = app.add_subcommand(
        "krawtchouk", "Krawtchouk polynomial table K_j(t) as CSV");
    std::string N_str;
    kraw_cmd->add_option("N", N_str)->required();
    kraw_cmd->add_option("--p", p_str, "success probability p/q");

    auto* code_cmd =
        app.add_subcommand("code", "weight distribution of a coding system");
    code_cmd->add_option("system", system_name)
        ->required()
        ->check(CLI::IsMember({"binary", "gray", "transcomplement",
                               "custom"}));
    code_cmd->add_option("n", n_str)->required();
    code_cmd->add_flag("--brute", brute);
    code_cmd->add_option("--weights", weights_path,
                         "weight table file for the custom system");

    auto* fig_cmd = app.add_subcommand("figure", "emit figure data as CSV");
    fig_cmd->add_option("K", fig)->required();
    fig_cmd->add_option("--max-lambda", max_lambda);
    fig_cmd->add_option("--resolution", resolution);
    fig_cmd->add_option("-o,--output", output_path);
    fig_cmd->add_option("--jobs", jobs);

    auto* acc_cmd = app.add_subcommand("accept", "run the acceptance suite");
    acc_cmd->add_option("--fixtures", fixtures);
    acc_cmd->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*nu_cmd) {
            std::cout << nu(parse_int(n_str), base) << "\n";
        } else if (*sum_cmd) {
            std::cout << digit_sum_total(parse_int(n_str), base) << "\n";
        } else if (*mean_cmd) {
            std::cout << rat_line(mean_exact(parse_int(n_str), base)) << "\n";
        } else if (*pmf_cmd) {
            Int n = parse_int(n_str);
            if (route == "brute") {
                if (base != 2)
                    throw std::invalid_argument(
                        "brute route is specific to base 2");
                print_pmf(pmf_bruteforce(n));
            } else if (route == "mixture") {
                if (base != 2)
                    throw std::invalid_argument(
                        "mixture route is specific to base 2");
                print_pmf(pmf_mixture(n).first);
            } else {
                ExactPMF p;
                p.masses = pgf_closed_form(n, base);
                p.trim();
                print_pmf(p);
            }
        } else if (*dist_cmd) {
            Int n = parse_int(n_str);
            DigitExpansion e = digit_expansion(n, 2);
            ExactPMF p = pmf_mixture(n).first;
            ExactPMF b = binomial_pmf(e.lambda);
            if (metric == "dtv")
                std::cout << rat_line(dtv_exact(p, b)) << "\n";
            else if (metric == "kolmogorov")
                std::cout << rat_line(kolmogorov_exact(p, b)) << "\n";
            else if (metric == "chi2")
                std::cout << rat_line(chi2_exact(p, b)) << "\n";
            else
                std::cout << fmt_real(kl_divergence(p, b)) << "\n";
        } else if (*coeffs_cmd) {
            ExpansionCoeffs c = a_coeffs(parse_int(n_str), order);
            std::cout << "r,a_r\n";
            for (size_t r = 0; r < c.coeffs.size(); ++r)
                std::cout << r << "," << fmt_rat(c.coeffs[r]) << "\n";
        } else if (*approx_cmd) {
            Int n = parse_int(n_str);
            ResidualRange rr = range_name == "full" ? ResidualRange::full
                                                    : ResidualRange::theorem;
            Rat l1 = l1_residual(n, order, rr);
            std::cout << "l1_residual " << rat_line(l1) << "\n";
            SignedMeasure m = approximant_pmf(n, order);
            std::cout << "k,weight\n";
            for (long k = m.support_min(); k <= m.support_max(); ++k)
                std::cout << k << "," << fmt_rat(m.at(k)) << "\n";
        } else if (*per_cmd) {
            if (which == "varfluct") {
                if (n_str.empty())
                    throw std::invalid_argument("varfluct requires --n");
                std::cout << rat_line(
                                 variance_fluctuation(parse_int(n_str)))
                          << "\n";
            } else if (which == "F") {
                if (!n_str.empty()) {
                    std::cout << rat_line(F_eval(parse_int(n_str))) << "\n";
                } else if (!x_str.empty()) {
                    RealWithBound v = F_eval_real(Real(x_str), J);
                    std::cout << fmt_real(v.value)
                              << " (truncation <= " << fmt_real(v.bound, 3)
                              << ")\n";
                } else {
                    throw std::invalid_argument("F requires --n or --x");
                }
            } else if (which == "F1") {
                Real x = !n_str.empty()
                             ? Real(log(to_real(Rat(parse_int(n_str)))) /
                                    log(Real(base)))
                             : Real(x_str);
                if (n_str.empty() && x_str.empty())
                    throw std::invalid_argument("F1 requires --n or --x");
                RealWithBound v = F1_eval(x, base, J);
                std::cout << fmt_real(v.value)
                          << " (truncation <= " << fmt_real(v.bound, 3)
                          << ")\n";
            } else {  // F2corr
                if (!n_str.empty()) {
                    std::cout << rat_line(F2corr_eval(parse_int(n_str)))
                              << "\n";
                } else if (!x_str.empty()) {
                    RealWithBound v = F2corr_eval_real(Real(x_str), J);
                    std::cout << fmt_real(v.value)
                              << " (truncation <= " << fmt_real(v.bound, 3)
                              << ")\n";
                } else {
                    throw std::invalid_argument("F2corr requires --n or --x");
                }
            }
        } else if (*stein_cmd) {
            Int n = parse_int(n_str);
            DigitExpansion e = digit_expansion(n, 2);
            long lambda = e.lambda;
            if (lambda < 1)
                throw std::domain_error("stein diagnostics require n >= 2");
            long cut = hline >= 0 ? hline : lambda / 2;
            std::vector<Rat> h(static_cast<size_t>(lambda) + 1, Rat(0));
            for (long m = 0; m <= std::min(cut, lambda); ++m)
                h[static_cast<size_t>(m)] = 1;
            SteinSolution sol = stein_solve(std::max(lambda, 1L), h);
            std::cout << "half-line cut " << cut << "\n";
            std::cout << "residual " << fmt_rat(stein_residual(sol)) << "\n";
            std::cout << "residual_flipped "
                      << fmt_rat(stein_residual_flipped(sol)) << "\n";
            std::cout << "g_uniform_bound "
                      << rat_line(g_uniform_bound(std::max(lambda, 1L)))
                      << "\n";
            MeanCorrection mc = stein_mean_correction(n, h);
            std::cout << "mean_correction_lhs " << rat_line(mc.lhs) << "\n";
            std::cout << "mean_correction_rhs " << rat_line(mc.rhs_leading)
                      << "\n";
            std::cout << "mean_correction_diff " << rat_line(mc.diff) << "\n";
            std::cout << "dtv_via_stein " << rat_line(dtv_via_stein(n))
                      << "\n";
        } else if (*kraw_cmd) {
            long N = std::stol(N_str);
            KrawtchoukFamily fam = krawtchouk_table(N, parse_rat(p_str));
            std::cout << "t,j,K_j_of_t\n";
            for (long t = 0; t <= N; ++t)
                for (long j = 0; j <= N; ++j)
                    std::cout << t << "," << j << ","
                              << fmt_rat(fam.table[static_cast<size_t>(t)]
                                                  [static_cast<size_t>(j)])
                              << "\n";
        } else if (*code_cmd) {
            CodingSystem sys =
                system_name == "binary"          ? binary_system()
                : system_name == "gray"          ? gray_system()
                : system_name == "transcomplement" ? transcomplement_system()
                                                 : custom_system(weights_path);
            Int n = parse_int(n_str);
            print_pmf(code_pmf(sys, n, brute));
            if (sys.certified) {
                G1G2 g = g1_g2(sys, n);
                std::cout << "mean_fluctuation "
                          << rat_line(gbar1(sys, n)) << "\n";
                std::cout << "variance_fluctuation "
                          << rat_line(g.g2_const) << "\n";
            }
        } else if (*fig_cmd) {
            if (!figure_supported(fig))
                throw CLI::ValidationError("K", "unsupported figure number");
            FigureOptions opt;
            opt.max_lambda = max_lambda;
            opt.resolution = resolution;
            opt.jobs = jobs;
            if (output_path.empty()) {
                write_figure_csv(fig, std::cout, opt);
            } else {
                std::ofstream out(output_path, std::ios::binary);
                if (!out)
                    throw std::runtime_error("cannot open " + output_path);
                write_figure_csv(fig, out, opt);
            }
        } else if (*acc_cmd) {
            auto results = run_acceptance(fixtures, jobs);
            for (const auto& r : results)
                std::cout << (r.pass ? "PASS" : "FAIL") << " criterion "
                          << r.id << " [" << r.name << "] " << r.detail
                          << " (" << fmt_real(Real(r.seconds), 3) << "s)\n";
            return all_passed(results) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
