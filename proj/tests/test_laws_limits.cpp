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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freeprob/limits.hpp"

using freeprob::ExperimentMode;
using freeprob::ExperimentReport;
using freeprob::LawSpec;
using freeprob::MomentSeq;
using freeprob::Rat;
using freeprob::TruncSeries;
using MS = MomentSeq<Rat>;
using RS = TruncSeries<Rat>;

namespace {

/// Error of the order-k moment at the largest/smallest n in the report.
double err_at(const ExperimentReport &rep, long n, int k) {
    for (const auto &row : rep.rows)
        if (row.n == n && row.k == k) return row.abs_err;
    throw std::runtime_error("row not found");
}

} // namespace

TEST_CASE("y_moments: closed values at alpha = 1 and 2") {
    const MS y1 = freeprob::y_moments(Rat(1), 4);
    CHECK(y1[1] == Rat(1));
    CHECK(y1[2] == Rat(2));
    CHECK(y1[3] == Rat(11, 2));
    CHECK(y1[4] == Rat(53, 3));
    // S-transform of y_alpha is exp(-alpha z)
    CHECK(freeprob::s_from_moments(freeprob::y_moments(Rat(2), 6)) ==
          freeprob::exp_neg_alpha_z(Rat(2), 5));
}

TEST_CASE("y_moments cumulants are the tree-function coefficients") {
    const auto kappa = freeprob::free_cumulants(freeprob::y_moments(Rat(1), 6)).values;
    // kappa_n = n^{n-1}/n!: 1, 1, 3/2, 8/3, 125/24, 54/5
    CHECK(kappa == std::vector<Rat>{Rat(1), Rat(1), Rat(3, 2), Rat(8, 3), Rat(125, 24), Rat(54, 5)});
}

TEST_CASE("s_moments: closed form agrees with the Sigma pipeline") {
    const MS s1 = freeprob::s_moments(Rat(1), 4);
    CHECK(s1[1] == Rat(1));
    CHECK(s1[2] == Rat(2));
    CHECK(s1[3] == Rat(9, 2));
    CHECK(s1[4] == Rat(32, 3));
    // The alpha = 1 closed form n^n/n! must match the generic pipeline.
    const RS sigma = freeprob::exp_neg_alpha_z(Rat(1), 11);
    const MS via_pipeline = freeprob::moments_from_s(freeprob::s_from_sigma(sigma), 12);
    CHECK(freeprob::s_moments(Rat(1), 12) == via_pipeline);
    // Sigma-transform of s_alpha is exp(-alpha z) for alpha != 1 too.
    CHECK(freeprob::sigma_from_moments(freeprob::s_moments(Rat(3, 2), 8)) ==
          freeprob::exp_neg_alpha_z(Rat(3, 2), 7));
}

TEST_CASE("LawSpec: moments, validation, parse/print round-trips") {
    CHECK(LawSpec::free_poisson(1).moments(3)[3] == Rat(5));
    CHECK(LawSpec::dirac(Rat(3, 2)).moments(2)[2] == Rat(9, 4));
    CHECK(LawSpec::y_limit(1).moments(2)[2] == Rat(2));
    CHECK(LawSpec::s_limit(1).moments(3)[3] == Rat(9, 2));
    CHECK_THROWS_AS(LawSpec::free_poisson(0), std::invalid_argument);
    CHECK_THROWS_AS(LawSpec::dirac(Rat(-1)), std::invalid_argument);
    CHECK_THROWS_AS(LawSpec::y_limit(Rat(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(LawSpec::from_moments({}), std::invalid_argument);
    CHECK_THROWS_AS(LawSpec::from_moments({Rat(0), Rat(1)}), std::invalid_argument);

    for (const std::string expr : {"free-poisson:t=2", "dirac:c=3/2", "moments:1,2,6,24",
                                   "y-limit:alpha=5/4", "s-limit:alpha=1"}) {
        const LawSpec law = LawSpec::parse(expr);
        CHECK(law.to_string() == expr);
        CHECK(LawSpec::parse(law.to_string()).to_string() == expr);
    }
    CHECK_THROWS_AS(LawSpec::parse("gaussian:v=1"), std::invalid_argument);
    CHECK_THROWS_AS(LawSpec::parse("free-poisson"), std::invalid_argument);
    CHECK_THROWS_AS(LawSpec::parse("moments:0,1"), std::invalid_argument);
    // moment_list refuses orders beyond what was supplied
    CHECK_THROWS_AS(LawSpec::parse("moments:1,2").moments(3), std::invalid_argument);
}

TEST_CASE("alpha and s0 of the standard examples") {
    const MS pi = LawSpec::free_poisson(1).moments(2);
    CHECK(freeprob::alpha_of(pi) == Rat(1));
    CHECK(freeprob::s0_of(pi) == Rat(1));
    const MS exp_m = LawSpec::from_moments({Rat(1), Rat(2), Rat(6), Rat(24)}).moments(2);
    CHECK(freeprob::alpha_of(exp_m) == Rat(1));
    CHECK(freeprob::alpha_of(LawSpec::free_poisson(2).moments(2)) == Rat(1, 2));
}

TEST_CASE("free-order experiment converges to y_alpha") {
    const ExperimentReport rep =
        freeprob::free_limit_experiment(LawSpec::free_poisson(1), {4, 8, 16, 32, 64}, 4);
    CHECK(rep.alpha == Rat(1));
    CHECK(rep.s0 == Rat(1));
    for (const auto &row : rep.rows) {
        // The scheme preserves kappa_1 and kappa_2 exactly, so the first two
        // moments agree with the limit at every n; error starts at k = 3.
        if (row.k <= 2) CHECK(row.abs_err == 0.0);
        CHECK(row.limit == freeprob::y_moments(Rat(1), 4)[row.k]);
    }
    for (int k = 3; k <= 4; ++k)
        for (long n = 8; n <= 64; n *= 2)
            CHECK(err_at(rep, n, k) < err_at(rep, n / 2, k));
}

TEST_CASE("boolean-order experiment converges to s_alpha") {
    const ExperimentReport rep =
        freeprob::boolean_limit_experiment(LawSpec::free_poisson(1), {4, 8, 16, 32, 64}, 4);
    for (const auto &row : rep.rows) {
        if (row.k == 1) CHECK(row.abs_err == 0.0);
        CHECK(row.limit == freeprob::s_moments(Rat(1), 4)[row.k]);
    }
    for (int k = 2; k <= 4; ++k)
        for (long n = 8; n <= 64; n *= 2)
            CHECK(err_at(rep, n, k) < err_at(rep, n / 2, k));
}

TEST_CASE("exchanged experiments converge with exact first moments") {
    for (bool boolean_mode : {false, true}) {
        const ExperimentReport rep =
            freeprob::exchanged_experiment(boolean_mode, LawSpec::free_poisson(1),
                                           {4, 8, 16, 32, 64}, 3);
        // Both exchanged schemes also fix the first two moments exactly.
        for (const auto &row : rep.rows)
            if (row.k <= 2) CHECK(row.abs_err == 0.0);
        for (long n = 8; n <= 64; n *= 2)
            CHECK(err_at(rep, n, 3) < err_at(rep, n / 2, 3));
    }
}

TEST_CASE("laws with the same alpha share the same limit rows") {
    // free-poisson:t=1 and the moment list 1,2,6,24 both have alpha = 1
    const std::vector<long> ns{16};
    const ExperimentReport a =
        freeprob::free_limit_experiment(LawSpec::free_poisson(1), ns, 4);
    const ExperimentReport b = freeprob::free_limit_experiment(
        LawSpec::from_moments({Rat(1), Rat(2), Rat(6), Rat(24)}), ns, 4);
    CHECK(a.alpha == b.alpha);
    for (size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].limit == b.rows[i].limit);
}

TEST_CASE("degenerate laws are rejected with a diagnostic") {
    CHECK_THROWS_WITH_AS(
        freeprob::free_limit_experiment(LawSpec::dirac(1), {4}, 2),
        doctest::Contains("degenerate"), std::domain_error);
    CHECK_THROWS_AS(freeprob::limit_experiment(ExperimentMode::free_order,
                                               LawSpec::free_poisson(1), {0}, 2),
                    std::invalid_argument);
}

TEST_CASE("duplicate n values collapse to one row set") {
    const ExperimentReport rep =
        freeprob::free_limit_experiment(LawSpec::free_poisson(1), {8, 4, 8}, 2);
    CHECK(rep.rows.size() == 4); // n in {4, 8} x k in {1, 2}
    CHECK(rep.rows[0].n == 4);
    CHECK(rep.rows[2].n == 8);
}

TEST_CASE("shifted cumulant sequence reproduces (2n+1)^{n-1}/n!") {
    CHECK(freeprob::shifted_cumulant_check(8));
    CHECK(freeprob::shifted_cumulant_check(12));
}

TEST_CASE("id_evidence: y_1 passes, an indefinite cumulant sequence fails") {
    const auto good = freeprob::id_evidence(freeprob::y_moments(Rat(1), 8), 3);
    CHECK(good.psd);
    CHECK(good.shifted_cumulants.size() == 5); // kappa_2..kappa_6
    CHECK(good.shifted_cumulants[0] == Rat(1));

    // kappa = (0, 1, 0, -1, 0, 0): Hankel [[1,0],[0,-1]] is indefinite.
    const MS bad = freeprob::moments_from_free_cumulants(
        freeprob::CumulantSeq<Rat>{freeprob::CumulantKind::free,
                                   {Rat(0), Rat(1), Rat(0), Rat(-1), Rat(0), Rat(0)}});
    const auto rep = freeprob::id_evidence(bad, 2);
    CHECK_FALSE(rep.psd);
    CHECK(rep.min_eigenvalue < -0.5);

    CHECK_THROWS_AS(freeprob::id_evidence(freeprob::y_moments(Rat(1), 4), 3), std::domain_error);
}
