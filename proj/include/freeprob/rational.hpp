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

#ifndef FREEPROB_RATIONAL_HPP
#define FREEPROB_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace freeprob {

// Exact scalar backend: arbitrary-precision rationals. The float backend is
// plain double; generic code is templated on the scalar type.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat &q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline BigInt int_pow(const BigInt &b, unsigned e) {
    BigInt r = 1, x = b;
    while (e) {
        if (e & 1u) r *= x;
        x *= x;
        e >>= 1u;
    }
    return r;
}

inline Rat rat_pow(const Rat &base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat r = 1, x = base;
    auto n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1ul) r *= x;
        x *= x;
        n >>= 1ul;
    }
    return r;
}

// Parses "p" or "p/q" with optional leading sign; q must be positive.
namespace detail {
inline bool is_integer_literal(const std::string &s) {
    size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}
} // namespace detail

inline Rat parse_rat(const std::string &s) {
    auto slash = s.find('/');
    const std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!detail::is_integer_literal(num_part) || !detail::is_integer_literal(den_part))
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("nonpositive denominator");
        return Rat(num, den);
    } catch (const std::exception &) {
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    }
}

// Renders as "p" or "p/q" (canonical lowest terms, q > 0).
inline std::string rat_str(const Rat &q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace freeprob

#endif
