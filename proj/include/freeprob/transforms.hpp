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

#ifndef FREEPROB_TRANSFORMS_HPP
#define FREEPROB_TRANSFORMS_HPP

#include <stdexcept>
#include <vector>

#include "freeprob/moments.hpp"
#include "freeprob/series.hpp"

namespace freeprob {

// Series-level transform calculus. Everything here is formal algebra on
// truncated series; no analytic evaluation. Conventions:
//   Psi(z)       = sum_{k>=1} m_k z^k                     (order p)
//   Psi^{-1}     = compositional inverse of Psi           (order p)
//   S(z)         = (1+z) Psi^{-1}(z) / z                  (order p-1)
//   Sigma(z)     = S(z/(1-z))                             (order p-1)
//   scriptR(z)   = sum_{k>=1} kappa_k z^{k-1}             (order p-1)
//   R(z)         = z * scriptR(z)                         (order p)
//   eta(z)       = Psi/(1+Psi) = sum_{k>=1} beta_k z^k    (order p)

template <typename T>
TruncSeries<T> psi_from_moments(const MomentSeq<T> &m) {
    const int p = m.order();
    TruncSeries<T> psi(p);
    for (int k = 1; k <= p; ++k) psi.coeff(k) = m[k];
    return psi;
}

template <typename T>
TruncSeries<T> psi_inverse(const MomentSeq<T> &m) {
    if (m.order() < 1 || !(m.mean() > T(0)))
        throw std::domain_error("psi_inverse: requires m_1 > 0");
    return revert(psi_from_moments(m));
}

namespace detail {

/// The series 1 + z at the given order.
template <typename T>
TruncSeries<T> one_plus_z(int p) {
    TruncSeries<T> s = TruncSeries<T>::one(p);
    if (p >= 1) s.coeff(1) = T(1);
    return s;
}

/// The series z/(1-z) = z + z^2 + ... at the given order.
template <typename T>
TruncSeries<T> z_over_one_minus_z(int p) {
    TruncSeries<T> s(p);
    for (int k = 1; k <= p; ++k) s.coeff(k) = T(1);
    return s;
}

/// The series z/(1+z) = z - z^2 + z^3 - ... at the given order.
template <typename T>
TruncSeries<T> z_over_one_plus_z(int p) {
    TruncSeries<T> s(p);
    for (int k = 1; k <= p; ++k) s.coeff(k) = (k % 2 == 1) ? T(1) : T(-1);
    return s;
}

} // namespace detail

/// S(z) = (1+z) Psi^{-1}(z)/z, as a series of order p-1.
template <typename T>
TruncSeries<T> s_from_moments(const MomentSeq<T> &m) {
    const TruncSeries<T> pinv = psi_inverse(m);
    const TruncSeries<T> q = pinv.shift_down(); // order p-1
    return detail::one_plus_z<T>(q.order()) * q;
}

/// Sigma(z) = S(z/(1-z)), order p-1.
template <typename T>
TruncSeries<T> sigma_from_moments(const MomentSeq<T> &m) {
    const TruncSeries<T> s = s_from_moments(m);
    return compose(s, detail::z_over_one_minus_z<T>(s.order()));
}

/// Inverse direction: moments of the law whose S-transform is s (s_0 > 0).
/// Needs s to order >= p-1.
template <typename T>
MomentSeq<T> moments_from_s(const TruncSeries<T> &s, int p) {
    if (!(s[0] > T(0))) throw std::domain_error("moments_from_s: requires s_0 > 0");
    if (s.order() < p - 1) throw std::invalid_argument("moments_from_s: series order too small");
    // Psi^{-1}(z) = z s(z)/(1+z), then revert and read coefficients.
    TruncSeries<T> pinv(p);
    for (int k = 0; k <= p - 1; ++k) pinv.coeff(k + 1) = s[k];
    pinv = pinv * recip(detail::one_plus_z<T>(p));
    const TruncSeries<T> psi = revert(pinv);
    std::vector<T> mm(static_cast<size_t>(p) + 1, T(0));
    mm[0] = T(1);
    for (int k = 1; k <= p; ++k) mm[k] = psi[k];
    return MomentSeq<T>(std::move(mm));
}

/// Sigma -> S by the inverse substitution S(z) = Sigma(z/(1+z)).
template <typename T>
TruncSeries<T> s_from_sigma(const TruncSeries<T> &sigma) {
    return compose(sigma, detail::z_over_one_plus_z<T>(sigma.order()));
}

/// scriptR series: coefficient k-1 is the free cumulant kappa_k.
/// Computed through the reversed G-series: with C(z) = z + sum m_k z^{k+1}
/// (= G(1/z)), one has 1 + R(z) = z / C^{-1}(z).
template <typename T>
TruncSeries<T> r_from_moments(const MomentSeq<T> &m) {
    const int p = m.order();
    if (p < 1) throw std::invalid_argument("r_from_moments: order must be >= 1");
    TruncSeries<T> c(p + 1);
    c.coeff(1) = T(1);
    for (int k = 1; k <= p; ++k) c.coeff(k + 1) = m[k];
    const TruncSeries<T> cinv = revert(c);
    const TruncSeries<T> one_plus_r = recip(cinv.shift_down()); // order p
    TruncSeries<T> r = one_plus_r;
    r.coeff(0) -= T(1);
    return r.shift_down(); // order p-1
}

/// Moments from a scriptR series of order >= p-1.
template <typename T>
MomentSeq<T> moments_from_r(const TruncSeries<T> &script_r, int p) {
    if (script_r.order() < p - 1)
        throw std::invalid_argument("moments_from_r: series order too small");
    TruncSeries<T> one_plus_r = TruncSeries<T>::one(p);
    for (int k = 1; k <= p; ++k) one_plus_r.coeff(k) = script_r[k - 1];
    TruncSeries<T> cinv(p + 1);
    const TruncSeries<T> q = recip(one_plus_r);
    for (int k = 0; k <= p; ++k) cinv.coeff(k + 1) = q[k];
    const TruncSeries<T> c = revert(cinv);
    std::vector<T> mm(static_cast<size_t>(p) + 1, T(0));
    mm[0] = T(1);
    for (int k = 1; k <= p; ++k) mm[k] = c[k + 1];
    return MomentSeq<T>(std::move(mm));
}

template <typename T>
CumulantSeq<T> free_cumulants(const MomentSeq<T> &m) {
    const TruncSeries<T> r = r_from_moments(m);
    std::vector<T> v(r.coeffs());
    return CumulantSeq<T>{CumulantKind::free, std::move(v)};
}

template <typename T>
MomentSeq<T> moments_from_free_cumulants(const CumulantSeq<T> &c) {
    if (c.kind != CumulantKind::free)
        throw std::invalid_argument("moments_from_free_cumulants: wrong cumulant kind");
    return moments_from_r(TruncSeries<T>(std::vector<T>(c.values)), c.order());
}

/// eta(z) = Psi/(1+Psi) = 1 - 1/(1+Psi); eta(0) = 0.
template <typename T>
TruncSeries<T> boolean_eta(const MomentSeq<T> &m) {
    TruncSeries<T> mom = psi_from_moments(m);
    mom.coeff(0) = T(1); // M = 1 + Psi
    TruncSeries<T> eta = -recip(mom);
    eta.coeff(0) += T(1);
    return eta;
}

/// Moments from an eta series of order >= p: M = 1/(1 - eta).
template <typename T>
MomentSeq<T> moments_from_eta(const TruncSeries<T> &eta, int p) {
    if (eta.order() < p) throw std::invalid_argument("moments_from_eta: series order too small");
    if (eta[0] != T(0)) throw std::domain_error("moments_from_eta: eta(0) must be 0");
    TruncSeries<T> denom = -eta.truncated(p);
    denom.coeff(0) += T(1);
    const TruncSeries<T> mom = recip(denom);
    std::vector<T> mm(static_cast<size_t>(p) + 1, T(0));
    mm[0] = T(1);
    for (int k = 1; k <= p; ++k) mm[k] = mom[k];
    return MomentSeq<T>(std::move(mm));
}

template <typename T>
CumulantSeq<T> boolean_cumulants(const MomentSeq<T> &m) {
    const TruncSeries<T> eta = boolean_eta(m);
    std::vector<T> v;
    v.reserve(static_cast<size_t>(m.order()));
    for (int k = 1; k <= m.order(); ++k) v.push_back(eta[k]);
    return CumulantSeq<T>{CumulantKind::boolean, std::move(v)};
}

template <typename T>
MomentSeq<T> moments_from_boolean_cumulants(const CumulantSeq<T> &c) {
    if (c.kind != CumulantKind::boolean)
        throw std::invalid_argument("moments_from_boolean_cumulants: wrong cumulant kind");
    const int p = c.order();
    TruncSeries<T> eta(p);
    for (int k = 1; k <= p; ++k) eta.coeff(k) = c.values[static_cast<size_t>(k) - 1];
    return moments_from_eta(eta, p);
}

/// The R/S functional equation z = R(z S(z)), checked as an exact
/// truncated-series identity at order p.
template <typename T>
bool s_r_functional_check(const MomentSeq<T> &m) {
    const int p = m.order();
    if (p < 1 || !(m.mean() > T(0)))
        throw std::domain_error("s_r_functional_check: requires m_1 > 0");
    const TruncSeries<T> script_r = r_from_moments(m);
    TruncSeries<T> big_r(p); // R(z) = z*scriptR(z)
    for (int k = 1; k <= p; ++k) big_r.coeff(k) = script_r[k - 1];
    const TruncSeries<T> s = s_from_moments(m);
    TruncSeries<T> inner(p); // z*S(z)
    for (int k = 1; k <= p; ++k) inner.coeff(k) = s[k - 1];
    return compose(big_r, inner) == TruncSeries<T>::identity(p);
}

} // namespace freeprob

#endif
