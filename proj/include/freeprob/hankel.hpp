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

#ifndef FREEPROB_HANKEL_HPP
#define FREEPROB_HANKEL_HPP

#include <vector>

#include <Eigen/Dense>

#include "freeprob/moments.hpp"
#include "freeprob/rational.hpp"

namespace freeprob {

/// Minimal eigenvalue over the Hankel matrices [s_{i+j}] (0 <= i, j < d)
/// for every feasible size d given the sequence s_0, s_1, ..., s_q.
/// Nonnegative (up to a small threshold) means the sequence is consistent
/// with being a moment sequence of a positive measure.
inline double hankel_min_eigenvalue(const std::vector<double> &seq) {
    if (seq.empty()) return 0.0;
    const int q = static_cast<int>(seq.size()) - 1;
    const int dmax = q / 2 + 1;
    double min_eig = seq[0]; // the 1x1 case
    for (int d = 2; d <= dmax; ++d) {
        Eigen::MatrixXd h(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) h(i, j) = seq[static_cast<size_t>(i + j)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        const double lo = es.eigenvalues().minCoeff();
        if (lo < min_eig) min_eig = lo;
    }
    return min_eig;
}

/// Optional measure-validity check for a moment sequence (float-based,
/// eigenvalue threshold -1e-9). Not enforced by constructors: intermediate
/// series manipulations may legitimately pass through non-measure
/// sequences.
template <typename T>
bool is_measure_like(const MomentSeq<T> &m, double threshold = -1e-9) {
    std::vector<double> s;
    s.reserve(static_cast<size_t>(m.order()) + 1);
    for (int k = 0; k <= m.order(); ++k) s.push_back(to_double(m[k]));
    return hankel_min_eigenvalue(s) >= threshold;
}

} // namespace freeprob

#endif
