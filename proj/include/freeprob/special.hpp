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

#ifndef FREEPROB_SPECIAL_HPP
#define FREEPROB_SPECIAL_HPP

#include <complex>
#include <functional>
#include <utility>

#include "freeprob/series.hpp"

namespace freeprob {

// Numeric layer: Lambert W_0, the auxiliary functions f and g on (0, pi),
// the Levy-measure density of y_alpha, the parametric density of the
// boolean limit law, the free Poisson density, boundary values of eta,
// quadrature and monotone root-finding. Everything here is double/complex.

/// Principal-branch Lambert W on the real axis, x >= -1/e.
double lambert_w0(double x);

/// Principal-branch Lambert W off the cut (-inf, -1/e). Points just above
/// the cut are supported (that is where Stieltjes inversion evaluates).
std::complex<double> lambert_w0(std::complex<double> z);

/// Exact Taylor coefficients of -W_0(-z): n^{n-1}/n! at z^n.
TruncSeries<Rat> w0_series(int p);

/// f(u) = u csc(u) exp(-u cot(u)) on (0, pi); increases from 1/e to +inf.
double f_aux(double u);

/// log f(u); safe where f itself would overflow (u near pi).
double log_f_aux(double u);

/// g(u) = (1 - u cot u)^2 + u^2 = u f'(u)/f(u).
double g_aux(double u);

/// f'(u), via the logarithmic derivative 1/u - 2 cot u + u csc^2 u.
double f_aux_deriv(double u);

/// Inverse of f on (1/e, inf) -> (0, pi); bisection bracket + Newton polish.
double f_inverse(double y);

/// Bracketed root of a continuous monotone function on [lo, hi].
double find_root_monotone(const std::function<double(double)> &fn, double lo, double hi,
                          double tol = 1e-12);

/// W_0(z)/z through the integral representation
/// (1/pi) int_0^pi g(u)/(z + f(u)) du.
std::complex<double> w0_integral_repr(std::complex<double> z);

/// Density of the Levy measure of y_alpha at s in (0, alpha*e]:
/// s f^{-1}(alpha/s)/(alpha pi).
double levy_density_y(double alpha, double s);

/// int s^k nu_{y_alpha}(ds), integrated in the u-parameter where the
/// integrand is smooth.
double levy_moment(double alpha, int k);

/// The Levy-Khintchine constant b = (1/pi) int_0^pi g(u)/f(u) du
/// (= scriptR_{y_alpha}(0), independent of alpha).
double levy_lk_constant();

/// Absolutely continuous part of the free Poisson density; 0 outside the
/// support [(1-sqrt t)^2, (1+sqrt t)^2].
double free_poisson_density(double t, double x);

/// Atom mass at 0: max(0, 1-t).
double free_poisson_atom(double t);

struct DensityPoint {
    double x;   // abscissa (sin v/v) exp(v cot v) = 1/f(v)
    double phi; // density ordinate
};

/// Parametric density of the boolean limit law at parameter v in (0, pi).
DensityPoint s_density(double v);

/// Same ordinate by the f-form (1/pi) f(v)^2 / f'(v); used as a cross-check.
double s_density_f_form(double v);

/// Density at abscissa t in (0, e): invert x(v) = 1/f(v), then evaluate.
double s_density_at(double t);

/// Boundary values eta^{+-}(x) = theta cot theta +- i theta, where theta
/// solves x = f(theta); defined for x >= 1/e.
std::pair<std::complex<double>, std::complex<double>> eta_boundary(double x);

/// -Im G_s(t + i eps)/pi with G_s(zeta) = 1/(zeta (1 - eta(1/zeta))) and
/// eta(w) = -W_0(-w); converges to s_density_at(t) as eps decreases.
double stieltjes_density(double t, double eps, double endpoint_guard = 1e-6);

/// Moment m_k of the boolean limit law by quadrature in the v-parameter:
/// (1/pi) int_0^pi f(v)^{-k} dv.
double s_moment_quadrature(int k);

/// Total mass and moments of the Levy density checked elsewhere; generic
/// adaptive quadrature over a finite interval (tanh-sinh).
double integrate(const std::function<double(double)> &fn, double a, double b,
                 double target = 1e-10);

} // namespace freeprob

#endif
