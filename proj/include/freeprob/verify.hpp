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

#ifndef FREEPROB_VERIFY_HPP
#define FREEPROB_VERIFY_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <ostream>
#include <random>
#include <string>

#include "freeprob/limits.hpp"
#include "freeprob/oracles.hpp"
#include "freeprob/special.hpp"

namespace freeprob {

struct VerifyOptions {
    int order = 8;
    unsigned long long seed = 1;
    bool corrupt = false; // test-only sentinel: force one invariant to fail
};

/// Runs every module's invariant battery, printing one PASS/FAIL line per
/// invariant. Returns the number of failures (0 means the build is healthy).
inline int run_verify(const VerifyOptions &opt, std::ostream &os) {
    const int p = opt.order;
    if (p < 2 || p > TruncSeries<Rat>::kMaxOrder) {
        os << "FAIL options: order must be in [2, " << TruncSeries<Rat>::kMaxOrder << "]\n";
        return 1;
    }
    std::mt19937_64 rng(opt.seed);
    auto rand_rat = [&rng](bool nonzero) {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        Rat r(num(rng), den(rng));
        if (nonzero && r == 0) r = Rat(1);
        return r;
    };
    auto rand_moments = [&](int q) {
        std::uniform_int_distribution<int> num(1, 9);
        std::uniform_int_distribution<int> den(1, 4);
        std::vector<Rat> tail;
        for (int k = 0; k < q; ++k) tail.emplace_back(num(rng), den(rng));
        return MomentSeq<Rat>::from_raw(tail);
    };

    int failures = 0;
    auto report = [&](const std::string &name, bool ok, const std::string &detail = "") {
        if (ok) {
            os << "PASS " << name << "\n";
        } else {
            ++failures;
            os << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    };
    auto run = [&](const std::string &name, const std::function<bool()> &check) {
        bool ok = false;
        std::string detail;
        try {
            ok = check();
        } catch (const std::exception &e) {
            detail = e.what();
        }
        report(name, ok, detail);
    };

    run("series.revert_round_trip", [&] {
        for (int trial = 0; trial < 10; ++trial) {
            TruncSeries<Rat> f(p);
            for (int k = 1; k <= p; ++k) f.coeff(k) = rand_rat(false);
            f.coeff(1) = rand_rat(true);
            if (compose(f, revert(f)) != TruncSeries<Rat>::identity(p)) return false;
        }
        return true;
    });

    run("series.lagrange_agreement", [&] {
        for (int trial = 0; trial < 5; ++trial) {
            TruncSeries<Rat> f(p);
            for (int k = 1; k <= p; ++k) f.coeff(k) = rand_rat(false);
            f.coeff(1) = rand_rat(true);
            if (revert(f) != lagrange_revert(f)) return false;
        }
        return true;
    });

    run("series.exp_log_inverse", [&] {
        for (int trial = 0; trial < 10; ++trial) {
            TruncSeries<Rat> f(p);
            for (int k = 1; k <= p; ++k) f.coeff(k) = rand_rat(false);
            if (log_series(exp_series(f)) != f) return false;
        }
        return true;
    });

    run("transforms.taylor_coefficients", [&] {
        for (int trial = 0; trial < 10; ++trial) {
            MomentSeq<Rat> m = rand_moments(p);
            const TruncSeries<Rat> s = s_from_moments(m);
            const TruncSeries<Rat> sig = sigma_from_moments(m);
            if (s[0] != Rat(1) / m[1] || sig[0] != s[0]) return false;
            if (p >= 2 && (s[1] != -m.variance() / (m[1] * m[1] * m[1]) || sig[1] != s[1]))
                return false;
        }
        return true;
    });

    run("transforms.functional_equation", [&] {
        for (int trial = 0; trial < 10; ++trial)
            if (!s_r_functional_check(rand_moments(p))) return false;
        return true;
    });

    run("transforms.nc_partition_oracle", [&] {
        MomentSeq<Rat> m = rand_moments(p);
        auto kappa = free_cumulants(m).values;
        if (opt.corrupt) kappa[kappa.size() - 1] += 1; // sentinel: trips the oracle
        return moments_from_free_cumulants_nc(kappa) == m;
    });

    run("transforms.interval_partition_oracle", [&] {
        MomentSeq<Rat> m = rand_moments(p);
        return moments_from_boolean_cumulants_ic(boolean_cumulants(m).values) == m;
    });

    run("convolution.commutative_associative", [&] {
        MomentSeq<Rat> a = rand_moments(p), b = rand_moments(p), c = rand_moments(p);
        return box_plus(a, b) == box_plus(b, a) && box_times(a, b) == box_times(b, a) &&
               uplus(a, b) == uplus(b, a) &&
               box_plus(box_plus(a, b), c) == box_plus(a, box_plus(b, c)) &&
               box_times(box_times(a, b), c) == box_times(a, box_times(b, c));
    });

    run("convolution.dilation_homogeneity", [&] {
        MomentSeq<Rat> a = rand_moments(p), b = rand_moments(p);
        const Rat c(5, 3);
        return dilate(box_times(a, b), c) == box_times(dilate(a, c), b) &&
               s_from_moments(dilate(a, c)) == (Rat(1) / c) * s_from_moments(a);
    });

    run("convolution.power_identities", [&] {
        return power_identity_check(Rat(1), Rat(2), p) &&
               power_identity_check(Rat(3, 2), Rat(1, 3), p);
    });

    run("laws.shifted_cumulant_sequence", [&] { return shifted_cumulant_check(p); });

    run("laws.sigma_pipeline_closed_form", [&] {
        const TruncSeries<Rat> sigma = exp_neg_alpha_z(Rat(1), p - 1);
        return s_moments(Rat(1), p) == moments_from_s(s_from_sigma(sigma), p);
    });

    run("limits.first_moment_exact", [&] {
        const auto rep = free_limit_experiment(LawSpec::free_poisson(1), {4, 16}, std::min(p, 4));
        for (const auto &row : rep.rows)
            if (row.k == 1 && row.abs_err != 0.0) return false;
        return true;
    });

    run("special.lambert_residual", [&] {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            const double x = -std::exp(-1.0) + unif(rng) * 20.0;
            const double w = lambert_w0(x);
            if (std::abs(w * std::exp(w) - x) > 1e-14 * std::max(1.0, std::abs(x))) return false;
        }
        return true;
    });

    run("special.integral_representation", [&] {
        for (double x : {0.5, 1.0, 2.0, 5.0}) {
            const std::complex<double> z(x, 0.0);
            const std::complex<double> direct = lambert_w0(z) / z;
            if (std::abs(w0_integral_repr(z) - direct) > 1e-8 * std::abs(direct)) return false;
        }
        return true;
    });

    run("special.w0_series_coefficients", [&] {
        const TruncSeries<Rat> s = w0_series(p);
        for (int n = 1; n <= p; ++n)
            if (s[n] != Rat(int_pow(BigInt(n), static_cast<unsigned>(n - 1))) /
                            Rat(factorial(static_cast<unsigned>(n))))
                return false;
        return true;
    });

    run("special.density_cross_check", [&] {
        for (int i = 1; i < 20; ++i) {
            const double v = 3.14159265358979323846 * i / 20.0;
            const DensityPoint pt = s_density(v);
            if (std::abs(pt.phi - s_density_f_form(v)) > 1e-10 * std::max(1.0, pt.phi))
                return false;
        }
        return true;
    });

    os << (failures == 0 ? "verify: all invariants passed\n"
                         : "verify: " + std::to_string(failures) + " invariant(s) failed\n");
    return failures;
}

} // namespace freeprob

#endif
