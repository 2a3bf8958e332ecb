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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "freeprob/special.hpp"

using freeprob::Rat;
using freeprob::TruncSeries;
using std::complex;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
} // namespace

TEST_CASE("lambert_w0 real: pinned values") {
    CHECK(freeprob::lambert_w0(0.0) == 0.0);
    CHECK(freeprob::lambert_w0(1.0) == doctest::Approx(0.56714329040978387).epsilon(1e-15));
    CHECK(freeprob::lambert_w0(kE) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(freeprob::lambert_w0(-1.0 / kE) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(freeprob::lambert_w0(2.0 * std::exp(2.0)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(freeprob::lambert_w0(-0.5), std::domain_error);
}

TEST_CASE("lambert_w0 real: residuals across the domain") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        double x;
        const int region = i % 4;
        if (region == 0) x = -1.0 / kE + unif(rng) / kE;              // near the branch point
        else if (region == 1) x = unif(rng);                          // [0, 1)
        else if (region == 2) x = std::exp(unif(rng) * 10.0);         // moderate
        // W <= ~40 keeps the forward map w e^w conditioned well enough for a
        // 1e-14 relative residual in double arithmetic.
        else x = std::exp(unif(rng) * 40.0);                          // large
        const double w = freeprob::lambert_w0(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-14 * std::max(1.0, std::abs(x)));
    }
}

TEST_CASE("lambert_w0 complex: residuals and symmetry") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unif(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        complex<double> z(unif(rng), unif(rng));
        if (z.imag() == 0.0 && z.real() < 0) z += complex<double>(0, 1e-3);
        const complex<double> w = freeprob::lambert_w0(z);
        CHECK(std::abs(w * std::exp(w) - z) <= 1e-13 * std::max(1.0, std::abs(z)));
        // conjugate symmetry of the principal branch
        const complex<double> wc = freeprob::lambert_w0(std::conj(z));
        CHECK(std::abs(wc - std::conj(w)) <= 1e-12 * std::max(1.0, std::abs(w)));
    }
    // just above the cut: nonzero imaginary part with the sign of Im z
    const complex<double> w = freeprob::lambert_w0(complex<double>(-1.0, 1e-9));
    CHECK(w.imag() > 0.1);
    CHECK(std::abs(w * std::exp(w) - complex<double>(-1.0, 1e-9)) < 1e-12);
}

TEST_CASE("w0_series: tree-function coefficients, exact") {
    const TruncSeries<Rat> s = freeprob::w0_series(12);
    CHECK(s[0] == Rat(0));
    for (int n = 1; n <= 12; ++n)
        CHECK(s[n] == Rat(freeprob::int_pow(freeprob::BigInt(n), static_cast<unsigned>(n - 1))) /
                          Rat(freeprob::factorial(static_cast<unsigned>(n))));
    // -W0(-z) is the compositional inverse of z e^{-z}
    CHECK(freeprob::revert(TruncSeries<Rat>::identity(12) *
                           freeprob::exp_series(Rat(-1) * TruncSeries<Rat>::identity(12))) == s);
}

TEST_CASE("f and g auxiliaries: pinned values and identities") {
    CHECK(freeprob::f_aux(kPi / 2) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(freeprob::g_aux(kPi / 2) == doctest::Approx(1.0 + kPi * kPi / 4).epsilon(1e-15));
    // f decreases to 1/e at 0+
    CHECK(freeprob::f_aux(1e-6) == doctest::Approx(1.0 / kE).epsilon(1e-9));
    // monotone increasing on (0, pi)
    double prev = 0.0;
    for (int i = 1; i < 200; ++i) {
        const double u = kPi * i / 200.0;
        const double lf = freeprob::log_f_aux(u);
        CHECK(lf > prev - 1.0); // sanity: finite
        if (i > 1) CHECK(lf > prev);
        prev = lf;
    }
    // g = u f'/f and f' agree with a numerical derivative
    for (double u : {0.3, 1.0, kPi / 2, 2.5, 3.0}) {
        CHECK(freeprob::g_aux(u) ==
              doctest::Approx(u * freeprob::f_aux_deriv(u) / freeprob::f_aux(u)).epsilon(1e-12));
        const double h = 1e-6;
        const double numeric = (freeprob::f_aux(u + h) - freeprob::f_aux(u - h)) / (2 * h);
        CHECK(freeprob::f_aux_deriv(u) == doctest::Approx(numeric).epsilon(1e-6));
    }
    // log f stays finite where f overflows
    CHECK(std::isfinite(freeprob::log_f_aux(kPi - 1e-8)));
    CHECK_THROWS_AS(freeprob::f_aux(0.0), std::domain_error);
    CHECK_THROWS_AS(freeprob::f_aux(kPi), std::domain_error);
}

TEST_CASE("f_inverse round-trips to 1e-12") {
    for (double y : {1.0 / kE + 1e-9, 0.5, 1.0, kPi / 2, 10.0, 1e3, 1e8}) {
        const double u = freeprob::f_inverse(y);
        CHECK(freeprob::log_f_aux(u) == doctest::Approx(std::log(y)).epsilon(1e-12));
    }
    CHECK(freeprob::f_inverse(1.0 / kE) == 0.0);
    CHECK_THROWS_AS(freeprob::f_inverse(0.1), std::domain_error);
}

TEST_CASE("find_root_monotone and integrate basics") {
    const double r = freeprob::find_root_monotone([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(freeprob::integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // endpoint singularity: int_0^1 dx/sqrt(x) = 2
    CHECK(freeprob::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("integral representation matches the direct Lambert evaluation") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        complex<double> z(unif(rng) + 2.5, unif(rng)); // right half-plane, away from the cut
        const complex<double> direct = freeprob::lambert_w0(z) / z;
        CHECK(std::abs(freeprob::w0_integral_repr(z) - direct) <= 1e-8 * std::abs(direct));
    }
    // real positive argument
    const complex<double> z(1.0, 0.0);
    CHECK(std::abs(freeprob::w0_integral_repr(z) - freeprob::lambert_w0(complex<double>(1.0, 0.0))) <
          1e-8);
}

TEST_CASE("Levy density of y_alpha: support and moments") {
    CHECK(freeprob::levy_density_y(1.0, 1.0) > 0.0);
    CHECK(freeprob::levy_density_y(1.0, kE + 0.01) == 0.0);
    CHECK(freeprob::levy_density_y(2.0, 2 * kE + 0.01) == 0.0);
    for (double alpha : {1.0, 2.0}) {
        for (int k = 0; k <= 4; ++k) {
            const double expected = std::pow(alpha, k + 1) *
                                    std::pow(double(k + 2), k + 1) /
                                    std::tgamma(double(k + 3));
            CHECK(freeprob::levy_moment(alpha, k) == doctest::Approx(expected).epsilon(1e-6));
        }
    }
    // density formula and the u-substituted moment integral agree: spot-check
    // the k = 0 mass directly against the s-integral near the bulk.
    const double mass_direct =
        freeprob::integrate([](double s) { return freeprob::levy_density_y(1.0, s); }, 1e-8, kE);
    CHECK(mass_direct == doctest::Approx(freeprob::levy_moment(1.0, 0)).epsilon(1e-6));
}

TEST_CASE("Levy-Khintchine constant equals kappa_1 = 1") {
    CHECK(freeprob::levy_lk_constant() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("free Poisson density: mass, atom, moments") {
    CHECK(freeprob::free_poisson_atom(1.0) == 0.0);
    CHECK(freeprob::free_poisson_atom(0.25) == doctest::Approx(0.75));
    for (double t : {0.25, 1.0, 2.0}) {
        const double lo = (1 - std::sqrt(t)) * (1 - std::sqrt(t));
        const double hi = (1 + std::sqrt(t)) * (1 + std::sqrt(t));
        const double mass = freeprob::integrate(
            [t](double x) { return freeprob::free_poisson_density(t, x); }, lo, hi);
        CHECK(mass + freeprob::free_poisson_atom(t) == doctest::Approx(1.0).epsilon(1e-8));
        const double m1 = freeprob::integrate(
            [t](double x) { return x * freeprob::free_poisson_density(t, x); }, lo, hi);
        CHECK(m1 == doctest::Approx(t).epsilon(1e-8));
    }
    // t = 1: Catalan moments 1, 2, 5
    const double m2 = freeprob::integrate(
        [](double x) { return x * x * freeprob::free_poisson_density(1.0, x); }, 0.0, 4.0);
    CHECK(m2 == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(freeprob::free_poisson_density(1.0, 4.5) == 0.0);
}

TEST_CASE("boolean limit density: parametric vs f-form, pinned point") {
    const freeprob::DensityPoint mid = freeprob::s_density(kPi / 2);
    CHECK(mid.x == doctest::Approx(2.0 / kPi).epsilon(1e-15));
    CHECK(mid.phi == doctest::Approx(kPi / (4.0 + kPi * kPi)).epsilon(1e-14));
    for (int i = 1; i < 100; ++i) {
        const double v = kPi * i / 100.0;
        const freeprob::DensityPoint p = freeprob::s_density(v);
        CHECK(std::abs(p.phi - freeprob::s_density_f_form(v)) <= 1e-10 * std::max(1.0, p.phi));
        CHECK(p.phi > 0.0);
        // s_density_at inverts the abscissa
        CHECK(freeprob::s_density_at(p.x) == doctest::Approx(p.phi).epsilon(1e-9));
    }
}

TEST_CASE("boolean limit density: mass and moments by quadrature") {
    CHECK(freeprob::s_moment_quadrature(0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(freeprob::s_moment_quadrature(1) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(freeprob::s_moment_quadrature(2) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(freeprob::s_moment_quadrature(3) == doctest::Approx(4.5).epsilon(1e-8));
}

TEST_CASE("eta boundary values solve eta exp(-eta) = x") {
    for (double x : {1.0 / kE + 1e-6, 0.5, 1.0, kPi / 2, 5.0, 50.0}) {
        const auto [plus, minus] = freeprob::eta_boundary(x);
        CHECK(std::abs(plus - std::conj(minus)) < 1e-14 * std::max(1.0, std::abs(plus)));
        const complex<double> resid = plus * std::exp(-plus) - x;
        CHECK(std::abs(resid) <= 1e-12 * std::max(1.0, x));
        CHECK(plus.imag() >= 0.0);
    }
    const auto [a, b] = freeprob::eta_boundary(1.0 / kE);
    CHECK(a == complex<double>(1.0, 0.0));
}

TEST_CASE("Stieltjes inversion reproduces the parametric density") {
    for (int i = 1; i <= 10; ++i) {
        const double t = kE * i / 11.0;
        const double target = freeprob::s_density_at(t);
        const double approx = freeprob::stieltjes_density(t, 1e-7);
        CHECK(std::abs(approx - target) <= 2e-4 * std::max(1.0, target));
    }
    // eps refinement improves agreement
    const double t = 1.0;
    const double d3 = freeprob::stieltjes_density(t, 1e-3);
    const double d6 = freeprob::stieltjes_density(t, 1e-6);
    const double exact = freeprob::s_density_at(t);
    CHECK(std::abs(d6 - exact) < std::abs(d3 - exact));
}
