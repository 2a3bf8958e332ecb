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

#ifndef FREEPROB_MOMENTS_HPP
#define FREEPROB_MOMENTS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "freeprob/rational.hpp"

namespace freeprob {

/// Normalized moment sequence m_0 = 1, m_1, ..., m_p of a law on the
/// nonnegative half-line. Purely formal: measure validity (Hankel
/// positivity) is a separate, optional check.
template <typename T>
class MomentSeq {
  public:
    /// From m_0..m_p (m_0 must be 1).
    explicit MomentSeq(std::vector<T> moments) : m_(std::move(moments)) {
        if (m_.empty() || m_[0] != T(1))
            throw std::invalid_argument("MomentSeq: m_0 must be 1");
    }

    /// From m_1..m_p; m_0 = 1 is implied.
    static MomentSeq from_raw(std::vector<T> tail) {
        std::vector<T> m;
        m.reserve(tail.size() + 1);
        m.push_back(T(1));
        for (auto &x : tail) m.push_back(std::move(x));
        return MomentSeq(std::move(m));
    }

    int order() const { return static_cast<int>(m_.size()) - 1; }

    const T &operator[](int k) const { return m_.at(static_cast<size_t>(k)); }

    const std::vector<T> &values() const { return m_; }

    const T &mean() const {
        if (order() < 1) throw std::domain_error("MomentSeq: no first moment at order 0");
        return m_[1];
    }

    T variance() const {
        if (order() < 2) throw std::domain_error("MomentSeq: no second moment");
        return m_[2] - m_[1] * m_[1];
    }

    MomentSeq truncated(int p) const {
        if (p < 0 || p > order()) throw std::invalid_argument("MomentSeq::truncated: bad order");
        return MomentSeq(std::vector<T>(m_.begin(), m_.begin() + p + 1));
    }

    bool operator==(const MomentSeq &o) const { return m_ == o.m_; }
    bool operator!=(const MomentSeq &o) const { return m_ != o.m_; }

  private:
    std::vector<T> m_;
};

enum class CumulantKind { free, boolean };

/// Free cumulants k_1..k_p (coefficients of the script-R expansion) or
/// boolean cumulants b_1..b_p (coefficients of the eta expansion).
template <typename T>
struct CumulantSeq {
    CumulantKind kind;
    std::vector<T> values; // values[n-1] = n-th cumulant

    int order() const { return static_cast<int>(values.size()); }

    bool operator==(const CumulantSeq &o) const { return kind == o.kind && values == o.values; }
};

} // namespace freeprob

#endif
