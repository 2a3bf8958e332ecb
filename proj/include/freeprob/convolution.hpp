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

#ifndef FREEPROB_CONVOLUTION_HPP
#define FREEPROB_CONVOLUTION_HPP

#include <stdexcept>
#include <string>

#include "freeprob/transforms.hpp"

namespace freeprob {

// Convolutions on truncated moment sequences. Each operation goes through
// its canonical linearizing transform: scriptR for the free additive
// convolution, S for the free multiplicative one, eta for the boolean one.

namespace detail {

inline void require_equal_orders(int a, int b, const char *who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": order mismatch");
}

} // namespace detail

/// Free additive convolution: free cumulants add.
template <typename T>
MomentSeq<T> box_plus(const MomentSeq<T> &a, const MomentSeq<T> &b) {
    detail::require_equal_orders(a.order(), b.order(), "box_plus");
    return moments_from_r(r_from_moments(a) + r_from_moments(b), a.order());
}

/// Free multiplicative convolution: S-transforms multiply.
template <typename T>
MomentSeq<T> box_times(const MomentSeq<T> &a, const MomentSeq<T> &b) {
    detail::require_equal_orders(a.order(), b.order(), "box_times");
    if (!(a.mean() > T(0)) || !(b.mean() > T(0)))
        throw std::domain_error("box_times: requires m_1 > 0 on both operands");
    return moments_from_s(s_from_moments(a) * s_from_moments(b), a.order());
}

/// Boolean additive convolution: boolean cumulants add.
template <typename T>
MomentSeq<T> uplus(const MomentSeq<T> &a, const MomentSeq<T> &b) {
    detail::require_equal_orders(a.order(), b.order(), "uplus");
    return moments_from_eta(boolean_eta(a) + boolean_eta(b), a.order());
}

/// Free additive convolution power: kappa -> t*kappa. Valid for t >= 1 in
/// general; t in (0,1) only for laws flagged boxplus-infinitely divisible.
template <typename T>
MomentSeq<T> boxplus_power(const MomentSeq<T> &a, const T &t, bool infinitely_divisible = false) {
    if (!(t >= T(1)) && !(infinitely_divisible && t > T(0)))
        throw std::domain_error("boxplus_power: t < 1 needs an infinitely divisible law");
    return moments_from_r(t * r_from_moments(a), a.order());
}

/// Boolean convolution power: beta -> t*beta, any t >= 0.
template <typename T>
MomentSeq<T> uplus_power(const MomentSeq<T> &a, const T &t) {
    if (t < T(0)) throw std::domain_error("uplus_power: t must be >= 0");
    return moments_from_eta(t * boolean_eta(a), a.order());
}

/// Free multiplicative convolution power: S -> S^t. Integer t >= 1 always;
/// fractional t >= 1 in general; fractional t in (0,1) only for laws
/// flagged boxtimes-infinitely divisible.
template <typename T>
MomentSeq<T> boxtimes_power(const MomentSeq<T> &a, const T &t, bool infinitely_divisible = false) {
    if (!(a.mean() > T(0))) throw std::domain_error("boxtimes_power: requires m_1 > 0");
    if (!(t >= T(1)) && !(infinitely_divisible && t > T(0)))
        throw std::domain_error("boxtimes_power: t < 1 needs an infinitely divisible law");
    return moments_from_s(pow_series(s_from_moments(a), t), a.order());
}

/// Dilation D_c: m_k -> c^k m_k (and S -> S/c).
template <typename T>
MomentSeq<T> dilate(const MomentSeq<T> &a, const T &c) {
    if (!(c > T(0))) throw std::domain_error("dilate: scale must be positive");
    std::vector<T> m(a.values());
    T ck(1);
    for (int k = 1; k <= a.order(); ++k) {
        ck *= c;
        m[static_cast<size_t>(k)] *= ck;
    }
    return MomentSeq<T>(std::move(m));
}

/// exp(-alpha z) as an exact series: coefficient k is (-alpha)^k / k!.
inline TruncSeries<Rat> exp_neg_alpha_z(const Rat &alpha, int p) {
    TruncSeries<Rat> s(p);
    Rat term(1);
    s.coeff(0) = term;
    for (int k = 1; k <= p; ++k) {
        term *= -alpha / Rat(k);
        s.coeff(k) = term;
    }
    return s;
}

/// Both power/dilation identities of the limit law y_alpha:
///   y^{boxplus t} = D_t(y^{boxtimes 1/t}) and
///   y^{boxtimes t} = D_t(y^{boxplus 1/t}),
/// checked as exact equalities of moment sequences at order p.
inline bool power_identity_check(const Rat &alpha, const Rat &t, int p) {
    if (!(alpha > 0) || !(t > 0)) throw std::domain_error("power_identity_check: alpha, t must be > 0");
    const MomentSeq<Rat> y = moments_from_s(exp_neg_alpha_z(alpha, p - 1), p);
    const Rat inv_t = Rat(1) / t;
    const bool additive_form =
        boxplus_power(y, t, true) == dilate(boxtimes_power(y, inv_t, true), t);
    const bool multiplicative_form =
        boxtimes_power(y, t, true) == dilate(boxplus_power(y, inv_t, true), t);
    return additive_form && multiplicative_form;
}

} // namespace freeprob

#endif
