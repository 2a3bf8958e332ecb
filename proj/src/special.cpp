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

#include "freeprob/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace freeprob {

namespace {

using cdouble = std::complex<double>;

constexpr double kPi = std::numbers::pi;
const double kEm1 = std::exp(-1.0); // 1/e
const double kE = std::exp(1.0);

double halley_polish(double x, double w) {
    for (int it = 0; it < 60; ++it) {
        const double ew = std::exp(w);
        const double res = w * ew - x;
        const double w1 = w + 1.0;
        const double denom = ew * w1 - (w + 2.0) * res / (2.0 * w1);
        if (denom == 0.0) break;
        const double step = res / denom;
        w -= step;
        if (std::abs(step) <= 2e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

cdouble halley_polish(cdouble z, cdouble w) {
    for (int it = 0; it < 100; ++it) {
        const cdouble ew = std::exp(w);
        const cdouble res = w * ew - z;
        const cdouble w1 = w + 1.0;
        const cdouble denom = ew * w1 - (w + 2.0) * res / (2.0 * w1);
        if (denom == cdouble(0.0)) break;
        const cdouble step = res / denom;
        w -= step;
        if (std::abs(step) <= 2e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

double branch_series(double p) {
    // W0 near the branch point, p = sqrt(2(e x + 1)).
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p - 43.0 / 540.0 * p * p * p * p;
}

cdouble branch_series(cdouble p) {
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p - 43.0 / 540.0 * p * p * p * p;
}

boost::math::quadrature::tanh_sinh<double> &quadrature_rule() {
    static boost::math::quadrature::tanh_sinh<double> rule(12);
    return rule;
}

} // namespace

double integrate(const std::function<double(double)> &fn, double a, double b, double target) {
    return quadrature_rule().integrate(fn, a, b, target);
}

double lambert_w0(double x) {
    if (x < -kEm1) {
        if (x > -kEm1 - 1e-12) {
            x = -kEm1;
        } else {
            throw std::domain_error("lambert_w0: argument below -1/e");
        }
    }
    if (x == 0.0) return 0.0;
    if (x == -kEm1) return -1.0;
    double w;
    if (x < -0.30) {
        w = branch_series(std::sqrt(2.0 * (kE * x + 1.0)));
    } else if (std::abs(x) < 0.2) {
        w = x * (1.0 - x + 1.5 * x * x);
    } else if (x < 3.0) {
        w = std::log1p(x);
    } else {
        const double l1 = std::log(x);
        w = l1 - std::log(l1);
    }
    return halley_polish(x, w);
}

std::complex<double> lambert_w0(std::complex<double> z) {
    if (std::abs(z) < 1e-300) return cdouble(0.0);
    if (z.imag() == 0.0 && z.real() >= -kEm1) return cdouble(lambert_w0(z.real()));
    if (z.imag() == 0.0 && z.real() < -kEm1)
        throw std::domain_error("lambert_w0: point on the branch cut (-inf, -1/e)");

    std::vector<cdouble> inits;
    if (std::abs(z + kEm1) < 0.3) inits.push_back(branch_series(std::sqrt(2.0 * (kE * z + 1.0))));
    if (std::abs(z) < 0.3) inits.push_back(z * (1.0 - z + 1.5 * z * z));
    if (std::abs(z + 1.0) > 1e-6) inits.push_back(std::log(1.0 + z));
    {
        const cdouble l1 = std::log(z);
        if (std::abs(l1) > 1e-6) inits.push_back(l1 - std::log(l1));
    }
    inits.push_back(cdouble(0.5));

    cdouble best(0.0);
    double best_res = std::numeric_limits<double>::infinity();
    const double tol = 1e-13 * std::max(1.0, std::abs(z));
    for (const cdouble &w0 : inits) {
        const cdouble w = halley_polish(z, w0);
        const double res = std::abs(w * std::exp(w) - z);
        // Stay on the principal branch: Im W0 and Im z share a sign.
        const bool branch_ok = (z.imag() > 0.0 && w.imag() > -1e-12) ||
                               (z.imag() < 0.0 && w.imag() < 1e-12) || z.imag() == 0.0;
        if (branch_ok && res < best_res) {
            best = w;
            best_res = res;
        }
        if (branch_ok && res <= tol) return w;
    }
    if (!std::isfinite(best_res))
        throw std::runtime_error("lambert_w0: iteration failed to converge");
    return best;
}

TruncSeries<Rat> w0_series(int p) {
    TruncSeries<Rat> s(p);
    for (int n = 1; n <= p; ++n)
        s.coeff(n) = Rat(int_pow(BigInt(n), static_cast<unsigned>(n - 1))) /
                     Rat(factorial(static_cast<unsigned>(n)));
    return s;
}

double log_f_aux(double u) {
    if (!(u > 0.0) || !(u < kPi)) throw std::domain_error("log_f_aux: u must be in (0, pi)");
    return std::log(u) - std::log(std::sin(u)) - u * std::cos(u) / std::sin(u);
}

double f_aux(double u) {
    if (!(u > 0.0) || !(u < kPi)) throw std::domain_error("f_aux: u must be in (0, pi)");
    return std::exp(log_f_aux(u));
}

double g_aux(double u) {
    if (!(u > 0.0) || !(u < kPi)) throw std::domain_error("g_aux: u must be in (0, pi)");
    const double c = 1.0 - u * std::cos(u) / std::sin(u);
    return c * c + u * u;
}

double f_aux_deriv(double u) {
    const double s = std::sin(u);
    const double logderiv = 1.0 / u - 2.0 * std::cos(u) / s + u / (s * s);
    return f_aux(u) * logderiv;
}

double find_root_monotone(const std::function<double(double)> &fn, double lo, double hi,
                          double tol) {
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("find_root_monotone: endpoints do not bracket a root");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // ran out of doubles
        const double fmid = fn(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

double f_inverse(double y) {
    if (y < kEm1 * (1.0 - 1e-12)) throw std::domain_error("f_inverse: argument below 1/e");
    if (y <= kEm1) return 0.0;
    const double ly = std::log(y);
    // Bisection on log f (monotone), then Newton on the same equation:
    // (log f)'(u) = g(u)/u.
    double lo = 1e-12, hi = kPi - 1e-12;
    if (log_f_aux(lo) >= ly) return lo;
    if (log_f_aux(hi) <= ly) return hi;
    double u = find_root_monotone([&](double t) { return log_f_aux(t) - ly; }, lo, hi, 1e-9);
    for (int it = 0; it < 8; ++it) {
        const double step = (log_f_aux(u) - ly) * u / g_aux(u);
        double next = u - step;
        if (next <= 0.0 || next >= kPi) break;
        u = next;
        if (std::abs(step) <= 1e-15 * u) break;
    }
    return u;
}

std::complex<double> w0_integral_repr(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= -kEm1)
        throw std::domain_error("w0_integral_repr: integrand is singular for real z <= -1/e");
    auto integrand = [&](double u) -> cdouble {
        const double lf = log_f_aux(u);
        if (lf > 700.0) return cdouble(0.0); // f overflows; the term vanishes
        return g_aux(u) / (z + std::exp(lf));
    };
    const double re = integrate([&](double u) { return integrand(u).real(); }, 0.0, kPi, 1e-12);
    const double im = integrate([&](double u) { return integrand(u).imag(); }, 0.0, kPi, 1e-12);
    return cdouble(re, im) / kPi;
}

double levy_density_y(double alpha, double s) {
    if (!(alpha > 0.0)) throw std::domain_error("levy_density_y: alpha must be > 0");
    if (!(s > 0.0)) throw std::domain_error("levy_density_y: s must be > 0");
    if (s > alpha * kE) return 0.0; // outside the support (0, alpha*e]
    return s * f_inverse(alpha / s) / (alpha * kPi);
}

double levy_moment(double alpha, int k) {
    if (!(alpha > 0.0)) throw std::domain_error("levy_moment: alpha must be > 0");
    if (k < 0) throw std::invalid_argument("levy_moment: k must be >= 0");
    // Substituting s = alpha/f(u) turns int s^k nu(ds) into
    // (alpha^{k+1}/pi) int_0^pi g(u) f(u)^{-(k+2)} du, a smooth integrand.
    const double val = integrate(
        [&](double u) {
            const double lf = log_f_aux(u);
            const double t = -(k + 2) * lf;
            if (t < -700.0) return 0.0;
            return g_aux(u) * std::exp(t);
        },
        0.0, kPi, 1e-12);
    return std::pow(alpha, k + 1) * val / kPi;
}

double levy_lk_constant() {
    const double val = integrate(
        [&](double u) {
            const double lf = log_f_aux(u);
            if (lf > 700.0) return 0.0;
            return g_aux(u) * std::exp(-lf);
        },
        0.0, kPi, 1e-12);
    return val / kPi;
}

double free_poisson_density(double t, double x) {
    if (!(t > 0.0)) throw std::domain_error("free_poisson_density: t must be > 0");
    if (!(x > 0.0)) return 0.0;
    const double disc = 4.0 * t - (x - 1.0 - t) * (x - 1.0 - t);
    if (disc <= 0.0) return 0.0;
    return std::sqrt(disc) / (2.0 * kPi * x);
}

double free_poisson_atom(double t) {
    if (!(t > 0.0)) throw std::domain_error("free_poisson_atom: t must be > 0");
    return std::max(0.0, 1.0 - t);
}

DensityPoint s_density(double v) {
    if (!(v > 0.0) || !(v < kPi)) throw std::domain_error("s_density: v must be in (0, pi)");
    const double s = std::sin(v);
    const double cot = std::cos(v) / s;
    DensityPoint pt;
    pt.x = (s / v) * std::exp(v * cot); // = 1/f(v)
    pt.phi = v * v * std::exp(-v * cot) / (kPi * s * g_aux(v));
    return pt;
}

double s_density_f_form(double v) {
    // f^2/f' = v f/g; evaluated through log f so f^2 cannot overflow first.
    const double t = std::log(v) + log_f_aux(v) - std::log(g_aux(v));
    if (t > 709.0) return HUGE_VAL; // density diverges at the v -> pi endpoint
    return std::exp(t) / kPi;
}

double s_density_at(double t) {
    if (!(t > 0.0) || !(t < kE)) throw std::domain_error("s_density_at: t must be in (0, e)");
    return s_density(f_inverse(1.0 / t)).phi;
}

std::pair<std::complex<double>, std::complex<double>> eta_boundary(double x) {
    if (x < kEm1 * (1.0 - 1e-12)) throw std::domain_error("eta_boundary: x must be >= 1/e");
    const double theta = f_inverse(std::max(x, kEm1));
    const double real_part = theta == 0.0 ? 1.0 : theta * std::cos(theta) / std::sin(theta);
    return {cdouble(real_part, theta), cdouble(real_part, -theta)};
}

double stieltjes_density(double t, double eps, double endpoint_guard) {
    if (!(eps > 0.0)) throw std::domain_error("stieltjes_density: eps must be > 0");
    if (t < endpoint_guard || t > kE - endpoint_guard)
        throw std::domain_error("stieltjes_density: t too close to the support endpoints");
    const cdouble zeta(t, eps);
    const cdouble eta = -lambert_w0(-1.0 / zeta);
    const cdouble g = 1.0 / (zeta * (1.0 - eta));
    return -g.imag() / kPi;
}

double s_moment_quadrature(int k) {
    const double val = integrate(
        [&](double u) {
            const double t = -k * log_f_aux(u);
            if (t < -700.0) return 0.0;
            return std::exp(t);
        },
        0.0, kPi, 1e-12);
    return val / kPi;
}

} // namespace freeprob
