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

#ifndef FREEPROB_ORACLES_HPP
#define FREEPROB_ORACLES_HPP

#include <vector>

#include "freeprob/moments.hpp"
#include "freeprob/series.hpp"

namespace freeprob {

// Combinatorial reference implementations. The series pipeline is the
// canonical computation path; these exponential-cost enumerations exist
// only to cross-check it (tests and the verify command).

/// All non-crossing partitions of an n-element linearly ordered set, each
/// reported as its list of block sizes. Built by the gap decomposition of
/// the block containing the first element; memoized per n.
inline const std::vector<std::vector<int>> &nc_partitions(int n) {
    static std::vector<std::vector<std::vector<int>>> cache{{{}}}; // n = 0
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        std::vector<std::vector<int>> result;
        // First block has size b; the remaining m-b elements split into b
        // independent gaps (between consecutive block elements and after
        // the last), each carrying its own non-crossing partition.
        std::vector<int> gaps;
        auto expand_gaps = [&](auto &&self, size_t gi, const std::vector<int> &prefix) -> void {
            if (gi == gaps.size()) {
                result.push_back(prefix);
                return;
            }
            for (const auto &sub : cache[static_cast<size_t>(gaps[gi])]) {
                std::vector<int> next = prefix;
                next.insert(next.end(), sub.begin(), sub.end());
                self(self, gi + 1, next);
            }
        };
        auto compositions = [&](auto &&self, int remaining, int slots) -> void {
            if (slots == 1) {
                gaps.push_back(remaining);
                const int b = static_cast<int>(gaps.size());
                expand_gaps(expand_gaps, 0, {b});
                gaps.pop_back();
                return;
            }
            for (int g = 0; g <= remaining; ++g) {
                gaps.push_back(g);
                self(self, remaining - g, slots - 1);
                gaps.pop_back();
            }
        };
        for (int b = 1; b <= m; ++b) {
            gaps.clear();
            compositions(compositions, m - b, b);
        }
        cache.push_back(std::move(result));
    }
    return cache[static_cast<size_t>(n)];
}

/// m_n = sum over non-crossing partitions of the product of kappa_{|block|}.
inline MomentSeq<Rat> moments_from_free_cumulants_nc(const std::vector<Rat> &kappa) {
    const int p = static_cast<int>(kappa.size());
    std::vector<Rat> tail;
    tail.reserve(static_cast<size_t>(p));
    for (int n = 1; n <= p; ++n) {
        Rat m(0);
        for (const auto &sizes : nc_partitions(n)) {
            Rat prod(1);
            for (int s : sizes) prod *= kappa[static_cast<size_t>(s) - 1];
            m += prod;
        }
        tail.push_back(m);
    }
    return MomentSeq<Rat>::from_raw(std::move(tail));
}

/// m_n = sum over interval partitions (compositions of n) of the product
/// of beta_{part}.
inline MomentSeq<Rat> moments_from_boolean_cumulants_ic(const std::vector<Rat> &beta) {
    const int p = static_cast<int>(beta.size());
    std::vector<Rat> tail;
    for (int n = 1; n <= p; ++n) {
        Rat m(0);
        std::vector<int> parts;
        auto walk = [&](auto &&self, int remaining) -> void {
            if (remaining == 0) {
                Rat prod(1);
                for (int s : parts) prod *= beta[static_cast<size_t>(s) - 1];
                m += prod;
                return;
            }
            for (int s = 1; s <= remaining; ++s) {
                parts.push_back(s);
                self(self, remaining - s);
                parts.pop_back();
            }
        };
        walk(walk, n);
        tail.push_back(m);
    }
    return MomentSeq<Rat>::from_raw(std::move(tail));
}

/// Compositional inverse by the Lagrange residue formula:
/// [z^k] g = (1/k) [z^{k-1}] (z/f(z))^k. Cross-check for the Newton path.
template <typename T>
TruncSeries<T> lagrange_revert(const TruncSeries<T> &f) {
    if (f[0] != T(0) || f.order() < 1 || f[1] == T(0))
        throw std::domain_error("lagrange_revert: needs f_0 = 0, f_1 != 0");
    const int p = f.order();
    const TruncSeries<T> h = recip(f.shift_down()); // z/f(z), order p-1
    TruncSeries<T> g(p);
    TruncSeries<T> hk = TruncSeries<T>::one(p - 1);
    for (int k = 1; k <= p; ++k) {
        hk = hk * h;
        g.coeff(k) = hk[k - 1] / T(k);
    }
    return g;
}

} // namespace freeprob

#endif
