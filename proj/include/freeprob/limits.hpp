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

#ifndef FREEPROB_LIMITS_HPP
#define FREEPROB_LIMITS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "freeprob/convolution.hpp"
#include "freeprob/hankel.hpp"
#include "freeprob/laws.hpp"

namespace freeprob {

/// alpha = Var/m_1^2, the only law parameter the limit depends on.
template <typename T>
T alpha_of(const MomentSeq<T> &m) {
    if (m.order() < 2) throw std::domain_error("alpha_of: needs moments up to order 2");
    if (!(m.mean() > T(0))) throw std::domain_error("alpha_of: requires m_1 > 0");
    return m.variance() / (m.mean() * m.mean());
}

/// s_0 = 1/m_1, the leading S-transform coefficient.
template <typename T>
T s0_of(const MomentSeq<T> &m) {
    if (m.order() < 1 || !(m.mean() > T(0))) throw std::domain_error("s0_of: requires m_1 > 0");
    return T(1) / m.mean();
}

enum class ExperimentMode { free_order, boolean_order, exchanged_free, exchanged_boolean };

inline std::string mode_name(ExperimentMode m) {
    switch (m) {
    case ExperimentMode::free_order: return "free";
    case ExperimentMode::boolean_order: return "boolean";
    case ExperimentMode::exchanged_free: return "exchanged-free";
    case ExperimentMode::exchanged_boolean: return "exchanged-boolean";
    }
    return "?";
}

struct ExperimentRow {
    long n;
    int k;
    Rat moment;      // exact finite-n moment
    Rat limit;       // exact limit moment
    double abs_err;  // float rendering of |moment - limit|
    double rel_err;  // abs_err / |limit|
};

struct ExperimentReport {
    ExperimentMode mode;
    std::string law;
    Rat alpha;
    Rat s0;
    int order;
    std::string note;
    std::vector<ExperimentRow> rows; // ordered by (n, k)
};

namespace detail {

/// The scaled n-th stage measure of the chosen mode. Conventions for the
/// n = 1 boundary: a 0-fold boxtimes power is delta_1 (the boxtimes
/// identity).
inline MomentSeq<Rat> experiment_stage(ExperimentMode mode, const MomentSeq<Rat> &rho,
                                       const Rat &s0, long n, int p) {
    const Rat rn(n);
    const Rat s0n = rat_pow(s0, n);
    const MomentSeq<Rat> delta1 = LawSpec::dirac(1).moments(p);
    switch (mode) {
    case ExperimentMode::free_order:
        return dilate(boxplus_power(boxtimes_power(rho, rn), rn), Rat(s0n / rn));
    case ExperimentMode::boolean_order: {
        const MomentSeq<Rat> base = (n == 1) ? delta1 : boxtimes_power(rho, Rat(rn - 1));
        return dilate(uplus_power(base, rn), Rat(s0n / rn));
    }
    case ExperimentMode::exchanged_free:
        return dilate(boxtimes_power(boxplus_power(rho, rn), rn), Rat(s0n / rat_pow(rn, n)));
    case ExperimentMode::exchanged_boolean:
        return dilate(boxtimes_power(uplus_power(rho, rn), rn), Rat(s0n / rat_pow(rn, n)));
    }
    throw std::logic_error("experiment_stage: bad mode");
}

} // namespace detail

/// Finite-n convergence experiment: exact moments of the scaled iterated
/// convolution against the exact limit moments of y_alpha or s_alpha.
inline ExperimentReport limit_experiment(ExperimentMode mode, const LawSpec &law,
                                         const std::vector<long> &ns, int p) {
    const MomentSeq<Rat> rho = law.moments(p);
    const Rat alpha = alpha_of(rho);
    if (alpha == 0)
        throw std::domain_error(
            "limit_experiment: degenerate law (Var = 0); the theorem needs a nondegenerate "
            "law with finite second moment");
    const Rat s0 = s0_of(rho);
    const bool boolean_limit =
        mode == ExperimentMode::boolean_order || mode == ExperimentMode::exchanged_boolean;
    const MomentSeq<Rat> limit = boolean_limit ? s_moments(alpha, p) : y_moments(alpha, p);

    ExperimentReport rep;
    rep.mode = mode;
    rep.law = law.to_string();
    rep.alpha = alpha;
    rep.s0 = s0;
    rep.order = p;
    if (mode == ExperimentMode::boolean_order)
        rep.note = "n=1 row uses the convention rho^{boxtimes 0} = dirac:c=1";
    if (mode == ExperimentMode::exchanged_boolean)
        rep.note = "uses the n-fold boolean power (the (n-1)-fold one does not converge)";

    std::vector<long> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    long prev = 0;
    for (long n : sorted) {
        if (n < 1) throw std::invalid_argument("limit_experiment: n must be >= 1");
        if (n == prev) continue; // strictly increasing rows
        prev = n;
        const MomentSeq<Rat> stage = detail::experiment_stage(mode, rho, s0, n, p);
        for (int k = 1; k <= p; ++k) {
            ExperimentRow row;
            row.n = n;
            row.k = k;
            row.moment = stage[k];
            row.limit = limit[k];
            const Rat diff = stage[k] - limit[k];
            row.abs_err = std::abs(to_double(diff));
            row.rel_err = limit[k] == 0 ? row.abs_err : std::abs(to_double(diff / limit[k]));
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

inline ExperimentReport free_limit_experiment(const LawSpec &law, const std::vector<long> &ns, int p) {
    return limit_experiment(ExperimentMode::free_order, law, ns, p);
}

inline ExperimentReport boolean_limit_experiment(const LawSpec &law, const std::vector<long> &ns, int p) {
    return limit_experiment(ExperimentMode::boolean_order, law, ns, p);
}

inline ExperimentReport exchanged_experiment(bool boolean_mode, const LawSpec &law,
                                             const std::vector<long> &ns, int p) {
    return limit_experiment(boolean_mode ? ExperimentMode::exchanged_boolean
                                         : ExperimentMode::exchanged_free,
                            law, ns, p);
}

/// Moments produced by the shifted cumulant sequence kappa_n = (n+1)^n/(n+1)!
/// must be (2n+1)^{n-1}/n!, exactly.
inline bool shifted_cumulant_check(int p) {
    std::vector<Rat> kappa;
    for (int n = 1; n <= p; ++n)
        kappa.push_back(Rat(int_pow(BigInt(n + 1), static_cast<unsigned>(n))) /
                        Rat(factorial(static_cast<unsigned>(n + 1))));
    const MomentSeq<Rat> m =
        moments_from_free_cumulants(CumulantSeq<Rat>{CumulantKind::free, std::move(kappa)});
    for (int n = 1; n <= p; ++n) {
        const Rat expected = Rat(int_pow(BigInt(2 * n + 1), static_cast<unsigned>(n - 1))) /
                             Rat(factorial(static_cast<unsigned>(n)));
        if (m[n] != expected) return false;
    }
    return true;
}

struct IdEvidenceReport {
    int depth;
    std::vector<Rat> shifted_cumulants; // kappa_2, kappa_3, ...
    double min_eigenvalue;              // over Hankel sizes 1..depth
    bool psd;                           // min_eigenvalue >= -1e-9
};

/// Levy-Khintchine evidence: in the free L-K form the shifted cumulants
/// (kappa_2, kappa_3, ...) are the moments of the Levy measure, so their
/// Hankel positivity is evidence for boxplus-infinite divisibility.
inline IdEvidenceReport id_evidence(const MomentSeq<Rat> &m, int depth) {
    if (depth < 1) throw std::invalid_argument("id_evidence: depth must be >= 1");
    if (m.order() < 2 * depth)
        throw std::domain_error("id_evidence: needs moment order >= 2*depth");
    const CumulantSeq<Rat> c = free_cumulants(m);
    IdEvidenceReport rep;
    rep.depth = depth;
    std::vector<double> seq;
    for (int n = 2; n <= 2 * depth; ++n) {
        rep.shifted_cumulants.push_back(Rat(c.values[static_cast<size_t>(n) - 1]));
        seq.push_back(to_double(c.values[static_cast<size_t>(n) - 1]));
    }
    rep.min_eigenvalue = hankel_min_eigenvalue(seq);
    rep.psd = rep.min_eigenvalue >= -1e-9;
    return rep;
}

} // namespace freeprob

#endif
