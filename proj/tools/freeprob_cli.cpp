// Copyright 2026 The freeprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// Command-line front end: transforms, convolutions, limit experiments,
// densities, Lambert W, and the invariant verification battery.
// Exit codes: 0 success, 1 internal failure, 2 usage/domain error.

#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freeprob/io.hpp"
#include "freeprob/limits.hpp"
#include "freeprob/special.hpp"
#include "freeprob/verify.hpp"

namespace {

using freeprob::Cell;
using freeprob::LawSpec;
using freeprob::MomentSeq;
using freeprob::OutputTable;
using freeprob::Rat;
using freeprob::TruncSeries;

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

void emit(const OutputTable &t, const std::string &format) {
    std::cout << freeprob::render(t, format);
}

/// One row per coefficient: index, exact value, float rendering.
OutputTable coefficient_table(const std::vector<Rat> &values, int first_index) {
    OutputTable t;
    t.columns = {"k", "coefficient", "coefficient_f64"};
    for (size_t i = 0; i < values.size(); ++i)
        t.add_row({static_cast<long long>(first_index + static_cast<int>(i)), values[i],
                   freeprob::to_double(values[i])});
    return t;
}

int cmd_transform(const std::string &law_expr, const std::string &which, int order,
                  const std::string &format) {
    const LawSpec law = LawSpec::parse(law_expr);
    const MomentSeq<Rat> m = law.moments(order);
    std::vector<Rat> values;
    int first = 0;
    if (which == "psi") {
        const TruncSeries<Rat> s = freeprob::psi_from_moments(m);
        values.assign(s.coeffs().begin(), s.coeffs().end());
    } else if (which == "psi-inv") {
        const TruncSeries<Rat> s = freeprob::psi_inverse(m);
        values.assign(s.coeffs().begin(), s.coeffs().end());
    } else if (which == "S") {
        const TruncSeries<Rat> s = freeprob::s_from_moments(m);
        values.assign(s.coeffs().begin(), s.coeffs().end());
    } else if (which == "Sigma") {
        const TruncSeries<Rat> s = freeprob::sigma_from_moments(m);
        values.assign(s.coeffs().begin(), s.coeffs().end());
    } else if (which == "R") {
        const TruncSeries<Rat> s = freeprob::r_from_moments(m);
        values.assign(s.coeffs().begin(), s.coeffs().end());
    } else if (which == "eta") {
        const TruncSeries<Rat> s = freeprob::boolean_eta(m);
        values.assign(s.coeffs().begin(), s.coeffs().end());
    } else if (which == "cumulants") {
        values = freeprob::free_cumulants(m).values;
        first = 1; // cumulants are indexed from 1
    } else {
        throw std::invalid_argument("transform: unknown --which '" + which + "'");
    }
    OutputTable t = coefficient_table(values, first);
    t.add_meta("law", law.to_string());
    t.add_meta("which", which);
    t.add_meta("order", std::to_string(order));
    emit(t, format);
    return 0;
}

int cmd_convolve(const std::string &op, const std::string &a_expr, const std::string &b_expr,
                 int order, const std::string &format) {
    const MomentSeq<Rat> a = LawSpec::parse(a_expr).moments(order);
    const MomentSeq<Rat> b = LawSpec::parse(b_expr).moments(order);
    MomentSeq<Rat> c = [&] {
        if (op == "boxplus") return freeprob::box_plus(a, b);
        if (op == "boxtimes") return freeprob::box_times(a, b);
        if (op == "uplus") return freeprob::uplus(a, b);
        throw std::invalid_argument("convolve: unknown --op '" + op + "'");
    }();
    OutputTable t;
    t.columns = {"k", "moment", "moment_f64"};
    t.add_meta("op", op);
    t.add_meta("a", a_expr);
    t.add_meta("b", b_expr);
    t.add_meta("order", std::to_string(order));
    for (int k = 0; k <= c.order(); ++k)
        t.add_row({static_cast<long long>(k), c[k], freeprob::to_double(c[k])});
    emit(t, format);
    return 0;
}

int cmd_limit(const std::string &mode, const std::string &law_expr, std::vector<long> ns,
              int order, const std::string &format) {
    freeprob::ExperimentMode m;
    if (mode == "free") m = freeprob::ExperimentMode::free_order;
    else if (mode == "boolean") m = freeprob::ExperimentMode::boolean_order;
    else if (mode == "exchanged-free") m = freeprob::ExperimentMode::exchanged_free;
    else if (mode == "exchanged-boolean") m = freeprob::ExperimentMode::exchanged_boolean;
    else throw std::invalid_argument("limit: unknown --mode '" + mode + "'");
    if (ns.empty()) ns = {4, 8, 16, 32, 64};
    const auto rep = freeprob::limit_experiment(m, LawSpec::parse(law_expr), ns, order);
    OutputTable t;
    t.columns = {"n", "k", "moment", "limit", "abs_error", "rel_error"};
    t.add_meta("mode", freeprob::mode_name(rep.mode));
    t.add_meta("law", rep.law);
    t.add_meta("alpha", freeprob::rat_str(rep.alpha));
    t.add_meta("s0", freeprob::rat_str(rep.s0));
    t.add_meta("order", std::to_string(rep.order));
    if (!rep.note.empty()) t.add_meta("note", rep.note);
    for (const auto &row : rep.rows)
        t.add_row({static_cast<long long>(row.n), static_cast<long long>(row.k), row.moment,
                   row.limit, row.abs_err, row.rel_err});
    emit(t, format);
    return 0;
}

int cmd_density(const std::string &which, double alpha, double tparam, int grid,
                const std::string &format) {
    if (grid < 2) throw std::invalid_argument("density: --grid must be >= 2");
    OutputTable t;
    t.columns = {"x", "density"};
    t.add_meta("which", which);
    t.add_meta("grid", std::to_string(grid));
    if (which == "s-limit") {
        // Parameter-uniform in v over (0, pi); abscissa x(v) emitted per row.
        t.add_meta("sampling", "uniform in the v-parameter on (0, pi)");
        for (int i = 0; i < grid; ++i) {
            const double v = kPi * (i + 1) / (grid + 1);
            const freeprob::DensityPoint p = freeprob::s_density(v);
            t.add_row({p.x, p.phi});
        }
    } else if (which == "y-levy") {
        if (!(alpha > 0)) throw std::invalid_argument("density: y-levy needs --alpha > 0");
        t.add_meta("alpha", freeprob::fmt_f64(alpha));
        t.add_meta("sampling", "uniform in the u-parameter on [0, pi)");
        for (int i = 0; i < grid; ++i) {
            const double u = kPi * i / grid;
            const double x = (i == 0) ? alpha * kE : alpha / freeprob::f_aux(u);
            t.add_row({x, freeprob::levy_density_y(alpha, x)});
        }
    } else if (which == "free-poisson") {
        if (!(tparam > 0)) throw std::invalid_argument("density: free-poisson needs --t > 0");
        t.add_meta("t", freeprob::fmt_f64(tparam));
        const double lo = (1 - std::sqrt(tparam)) * (1 - std::sqrt(tparam));
        const double hi = (1 + std::sqrt(tparam)) * (1 + std::sqrt(tparam));
        t.add_meta("atom_at_zero", freeprob::fmt_f64(freeprob::free_poisson_atom(tparam)));
        for (int i = 0; i < grid; ++i) {
            const double x = lo + (hi - lo) * i / (grid - 1);
            t.add_row({x, freeprob::free_poisson_density(tparam, x)});
        }
    } else {
        throw std::invalid_argument("density: unknown --which '" + which + "'");
    }
    emit(t, format);
    return 0;
}

int cmd_lambertw(double x, bool have_x, std::vector<double> zparts, bool check_integral,
                 const std::string &format) {
    OutputTable t;
    if (have_x) {
        const double w = freeprob::lambert_w0(x); // throws below -1/e
        t.columns = {"x", "w", "residual"};
        std::vector<Cell> row{x, w, std::abs(w * std::exp(w) - x)};
        if (check_integral) {
            t.columns.push_back("integral_w_over_z");
            t.columns.push_back("discrepancy");
            const std::complex<double> q = freeprob::w0_integral_repr({x, 0.0});
            row.push_back(q.real());
            row.push_back(x == 0.0 ? std::abs(q.real() - 1.0) : std::abs(q.real() - w / x));
        }
        t.add_row(std::move(row));
    } else {
        const std::complex<double> z(zparts[0], zparts[1]);
        const std::complex<double> w = freeprob::lambert_w0(z);
        t.columns = {"re_z", "im_z", "re_w", "im_w", "residual"};
        std::vector<Cell> row{z.real(), z.imag(), w.real(), w.imag(),
                              std::abs(w * std::exp(w) - z)};
        if (check_integral) {
            t.columns.push_back("integral_discrepancy");
            row.push_back(std::abs(freeprob::w0_integral_repr(z) - w / z));
        }
        t.add_row(std::move(row));
    }
    emit(t, format);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact and numeric toolkit for free and boolean convolution limit laws"};
    app.fallthrough(true);
    app.require_subcommand(1);

    std::string format = "csv";
    int order = 8;
    unsigned long long seed = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--order", order, "Truncation order");
    app.add_option("--seed", seed, "RNG seed for randomized batteries");

    // transform
    auto *transform = app.add_subcommand("transform", "Series transforms of a law");
    std::string law_expr, which = "S";
    transform->add_option("--law", law_expr, "Law expression")->required();
    transform->add_option("--which", which, "Transform to emit")
        ->check(CLI::IsMember({"psi", "psi-inv", "S", "Sigma", "R", "eta", "cumulants"}));

    // convolve
    auto *convolve = app.add_subcommand("convolve", "Convolve two laws");
    std::string op, a_expr, b_expr;
    convolve->add_option("--op", op, "boxplus|boxtimes|uplus")->required();
    convolve->add_option("--a", a_expr, "First law")->required();
    convolve->add_option("--b", b_expr, "Second law")->required();

    // limit
    auto *limit = app.add_subcommand("limit", "Finite-n limit-theorem experiment");
    std::string mode = "free";
    std::vector<long> ns;
    limit->add_option("--mode", mode, "free|boolean|exchanged-free|exchanged-boolean");
    limit->add_option("--law", law_expr, "Law expression")->required();
    limit->add_option("--n", ns, "Values of n (repeatable)");

    // density
    auto *density = app.add_subcommand("density", "Plot-ready density samples");
    std::string dwhich;
    double alpha = 1.0, tparam = 1.0;
    int grid = 100;
    density->add_option("--which", dwhich, "s-limit|y-levy|free-poisson")->required();
    density->add_option("--alpha", alpha, "Parameter for y-levy");
    density->add_option("--t", tparam, "Parameter for free-poisson");
    density->add_option("--grid", grid, "Number of sample rows");

    // lambertw
    auto *lambertw = app.add_subcommand("lambertw", "Principal-branch Lambert W");
    double x = 0.0;
    std::vector<double> zparts;
    bool check_integral = false;
    auto *xopt = lambertw->add_option("--x", x, "Real argument (>= -1/e)");
    lambertw->add_option("--z", zparts, "Complex argument: re im")->expected(2)->excludes(xopt);
    lambertw->add_flag("--check-integral", check_integral,
                       "Also evaluate the integral representation of W/z");

    // verify
    auto *verify = app.add_subcommand("verify", "Run every module's invariant battery");
    bool corrupt = false;
    verify->add_flag("--corrupt", corrupt, "Test-only sentinel: force one invariant to fail")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*transform) return cmd_transform(law_expr, which, order, format);
        if (*convolve) return cmd_convolve(op, a_expr, b_expr, order, format);
        if (*limit) return cmd_limit(mode, law_expr, ns, order, format);
        if (*density) return cmd_density(dwhich, alpha, tparam, grid, format);
        if (*lambertw) {
            if (zparts.empty() && xopt->count() == 0)
                throw std::invalid_argument("lambertw: need --x or --z");
            return cmd_lambertw(x, zparts.empty(), zparts, check_integral, format);
        }
        if (*verify) {
            freeprob::VerifyOptions opt;
            opt.order = order;
            opt.seed = seed;
            opt.corrupt = corrupt;
            return freeprob::run_verify(opt, std::cout) == 0 ? 0 : 1;
        }
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
