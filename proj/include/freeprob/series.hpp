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

#ifndef FREEPROB_SERIES_HPP
#define FREEPROB_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "freeprob/rational.hpp"

namespace freeprob {

/// Truncated formal power series: coefficients c[0..p] of a series known
/// modulo z^{p+1}. Arithmetic truncates to the minimum order of the
/// operands. Immutable in practice; every operation returns a new value.
template <typename T>
class TruncSeries {
  public:
    static constexpr int kMaxOrder = 24;

    explicit TruncSeries(int order) : c_(check_order(order) + 1, T(0)) {}

    explicit TruncSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
        check_order(static_cast<int>(c_.size()) - 1);
    }

    static TruncSeries zero(int order) { return TruncSeries(order); }

    static TruncSeries constant(const T &value, int order) {
        TruncSeries s(order);
        s.c_[0] = value;
        return s;
    }

    static TruncSeries one(int order) { return constant(T(1), order); }

    /// The series z (requires order >= 1).
    static TruncSeries identity(int order) {
        TruncSeries s(order);
        if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
        s.c_[1] = T(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const T &operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
    T &coeff(int k) { return c_.at(static_cast<size_t>(k)); }

    const std::vector<T> &coeffs() const { return c_; }

    TruncSeries truncated(int order) const {
        check_order(order);
        if (order >= this->order()) {
            TruncSeries s(order);
            std::copy(c_.begin(), c_.end(), s.c_.begin());
            return s;
        }
        return TruncSeries(std::vector<T>(c_.begin(), c_.begin() + order + 1));
    }

    bool operator==(const TruncSeries &o) const { return c_ == o.c_; }
    bool operator!=(const TruncSeries &o) const { return c_ != o.c_; }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b) {
        const int p = std::min(a.order(), b.order());
        TruncSeries r(p);
        for (int k = 0; k <= p; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b) {
        const int p = std::min(a.order(), b.order());
        TruncSeries r(p);
        for (int k = 0; k <= p; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries &a) {
        TruncSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) r.c_[k] = -a.c_[k];
        return r;
    }

    /// Cauchy product, truncated at min(orders).
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
        const int p = std::min(a.order(), b.order());
        TruncSeries r(p);
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= p - i; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    friend TruncSeries operator*(const T &s, const TruncSeries &a) {
        TruncSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) r.c_[k] = s * a.c_[k];
        return r;
    }

    friend TruncSeries operator*(const TruncSeries &a, const T &s) { return s * a; }

    /// Multiplication by z; the top coefficient falls off the truncation.
    TruncSeries shift_up() const {
        TruncSeries r(order());
        for (int k = 1; k <= order(); ++k) r.c_[k] = c_[k - 1];
        return r;
    }

    /// Division by z; requires a zero constant term. Order drops by one.
    TruncSeries shift_down() const {
        if (c_[0] != T(0)) throw std::domain_error("shift_down: nonzero constant term");
        if (order() < 1) throw std::domain_error("shift_down: order 0");
        return TruncSeries(std::vector<T>(c_.begin() + 1, c_.end()));
    }

    TruncSeries derivative() const {
        if (order() < 1) return zero(0);
        TruncSeries r(order() - 1);
        for (int k = 1; k <= order(); ++k) r.c_[k - 1] = T(k) * c_[k];
        return r;
    }

    /// Antiderivative with zero constant term; order grows by one.
    TruncSeries integrated() const {
        TruncSeries r(order() + 1);
        for (int k = 0; k <= order(); ++k) r.c_[k + 1] = c_[k] / T(k + 1);
        return r;
    }

  private:
    static int check_order(int order) {
        if (order < 0 || order > kMaxOrder)
            throw std::invalid_argument("TruncSeries: order must be in [0, 24]");
        return order;
    }

    std::vector<T> c_;
};

/// Multiplicative inverse: b with a*b = 1 up to the truncation order.
template <typename T>
TruncSeries<T> recip(const TruncSeries<T> &a) {
    if (a[0] == T(0)) throw std::domain_error("recip: zero constant term");
    const int p = a.order();
    TruncSeries<T> b(p);
    const T inv0 = T(1) / a[0];
    b.coeff(0) = inv0;
    for (int n = 1; n <= p; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
        b.coeff(n) = -inv0 * acc;
    }
    return b;
}

template <typename T>
TruncSeries<T> operator/(const TruncSeries<T> &a, const TruncSeries<T> &b) {
    return a * recip(b);
}

/// f(g(z)) for g with zero constant term, by Horner evaluation.
template <typename T>
TruncSeries<T> compose(const TruncSeries<T> &f, const TruncSeries<T> &g) {
    if (g[0] != T(0)) throw std::domain_error("compose: inner series has nonzero constant term");
    const int p = std::min(f.order(), g.order());
    const TruncSeries<T> gt = g.truncated(p);
    TruncSeries<T> r = TruncSeries<T>::constant(f[p], p);
    for (int k = p - 1; k >= 0; --k) {
        r = r * gt;
        r.coeff(0) += f[k];
    }
    return r;
}

/// Compositional inverse of f (f0 = 0, f1 != 0): g with f(g(z)) = z up to
/// the truncation order. Newton iteration on series.
template <typename T>
TruncSeries<T> revert(const TruncSeries<T> &f) {
    if (f[0] != T(0)) throw std::domain_error("revert: nonzero constant term");
    if (f.order() < 1 || f[1] == T(0)) throw std::domain_error("revert: vanishing linear term");
    const int p = f.order();
    const TruncSeries<T> id = TruncSeries<T>::identity(p);
    const TruncSeries<T> df = f.derivative();
    TruncSeries<T> g = (T(1) / f[1]) * id;
    // One correct coefficient to start; each step doubles the count.
    int steps = 1;
    while ((1 << steps) < p + 1) ++steps;
    for (int i = 0; i <= steps; ++i) {
        const TruncSeries<T> err = compose(f, g) - id;
        const TruncSeries<T> dfg = compose(df.truncated(p), g);
        g = g - err * recip(dfg);
    }
    return g;
}

/// exp of a series with zero constant term.
template <typename T>
TruncSeries<T> exp_series(const TruncSeries<T> &f) {
    if (f[0] != T(0)) throw std::domain_error("exp_series: nonzero constant term");
    const int p = f.order();
    TruncSeries<T> e(p);
    e.coeff(0) = T(1);
    // n*e_n = sum_{k=1..n} k*f_k*e_{n-k}, from E' = f'E.
    for (int n = 1; n <= p; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) acc += T(k) * f[k] * e[n - k];
        e.coeff(n) = acc / T(n);
    }
    return e;
}

/// log of a series with constant term 1.
template <typename T>
TruncSeries<T> log_series(const TruncSeries<T> &f) {
    if (f[0] != T(1)) throw std::domain_error("log_series: constant term must be 1");
    const int p = f.order();
    TruncSeries<T> l(p);
    // l_n = f_n - (1/n) sum_{k=1..n-1} k*l_k*f_{n-k}, from f' = l'f.
    for (int n = 1; n <= p; ++n) {
        T acc(0);
        for (int k = 1; k < n; ++k) acc += T(k) * l[k] * f[n - k];
        l.coeff(n) = f[n] - acc / T(n);
    }
    return l;
}

namespace detail {

template <typename T>
TruncSeries<T> int_pow_series(const TruncSeries<T> &f, long e) {
    if (e < 0) return recip(int_pow_series(f, -e));
    TruncSeries<T> r = TruncSeries<T>::one(f.order());
    TruncSeries<T> x = f;
    auto n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1ul) r = r * x;
        x = x * x;
        n >>= 1ul;
    }
    return r;
}

} // namespace detail

/// f^t for positive constant term. On the exact backend, t must be an
/// integer unless f0 = 1 (otherwise f0^t would leave the rationals).
inline TruncSeries<Rat> pow_series(const TruncSeries<Rat> &f, const Rat &t) {
    if (f[0] <= 0) throw std::domain_error("pow_series: constant term must be positive");
    if (boost::multiprecision::denominator(t) == 1)
        return detail::int_pow_series(f, t.convert_to<long>());
    if (f[0] != 1)
        throw std::domain_error("pow_series: non-integer exponent needs constant term 1 on the exact backend");
    return exp_series(t * log_series(f));
}

inline TruncSeries<double> pow_series(const TruncSeries<double> &f, double t) {
    if (f[0] <= 0) throw std::domain_error("pow_series: constant term must be positive");
    const double c0 = f[0];
    TruncSeries<double> unit = (1.0 / c0) * f;
    unit.coeff(0) = 1.0; // kill the rounding residue of c0/c0
    TruncSeries<double> l = log_series(unit);
    return std::pow(c0, t) * exp_series(t * l);
}

} // namespace freeprob

#endif
