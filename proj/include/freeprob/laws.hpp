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

#ifndef FREEPROB_LAWS_HPP
#define FREEPROB_LAWS_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freeprob/convolution.hpp"
#include "freeprob/transforms.hpp"

namespace freeprob {

/// Moments of the free-convolution limit law y_alpha, whose free cumulant
/// sequence is kappa_n = (alpha n)^{n-1}/n! (equivalently, S = exp(-alpha z)).
inline MomentSeq<Rat> y_moments(const Rat &alpha, int p) {
    if (!(alpha > 0)) throw std::domain_error("y_moments: alpha must be > 0");
    std::vector<Rat> kappa;
    kappa.reserve(static_cast<size_t>(p));
    for (int n = 1; n <= p; ++n) {
        const Rat an = rat_pow(alpha, n - 1) * Rat(int_pow(BigInt(n), static_cast<unsigned>(n - 1)));
        kappa.push_back(an / Rat(factorial(static_cast<unsigned>(n))));
    }
    return moments_from_free_cumulants(CumulantSeq<Rat>{CumulantKind::free, std::move(kappa)});
}

/// Moments of the boolean limit law s_alpha (Sigma = exp(-alpha z)). At
/// alpha = 1 the closed form m_n = n^n/n! is used; otherwise the series
/// pipeline Sigma -> S -> moments.
inline MomentSeq<Rat> s_moments(const Rat &alpha, int p) {
    if (!(alpha > 0)) throw std::domain_error("s_moments: alpha must be > 0");
    if (alpha == 1) {
        std::vector<Rat> m;
        m.reserve(static_cast<size_t>(p));
        for (int n = 1; n <= p; ++n)
            m.push_back(Rat(int_pow(BigInt(n), static_cast<unsigned>(n))) /
                        Rat(factorial(static_cast<unsigned>(n))));
        return MomentSeq<Rat>::from_raw(std::move(m));
    }
    const TruncSeries<Rat> sigma = exp_neg_alpha_z(alpha, p - 1);
    return moments_from_s(s_from_sigma(sigma), p);
}

/// A named analytic law providing exact moment sequences at any order.
class LawSpec {
  public:
    enum class Kind { free_poisson, dirac, moment_list, y_limit, s_limit };

    static LawSpec free_poisson(const Rat &t) {
        if (!(t > 0)) throw std::invalid_argument("free-poisson: t must be > 0");
        return LawSpec(Kind::free_poisson, t, {});
    }

    static LawSpec dirac(const Rat &c) {
        if (!(c > 0)) throw std::invalid_argument("dirac: c must be > 0");
        return LawSpec(Kind::dirac, c, {});
    }

    /// Raw moments m_1, m_2, ... (m_0 = 1 implied); m_1 > 0 required.
    static LawSpec from_moments(std::vector<Rat> tail) {
        if (tail.empty() || !(tail[0] > 0))
            throw std::invalid_argument("moments: m_1 must be > 0");
        return LawSpec(Kind::moment_list, Rat(0), std::move(tail));
    }

    static LawSpec y_limit(const Rat &alpha) {
        if (!(alpha > 0)) throw std::invalid_argument("y-limit: alpha must be > 0");
        return LawSpec(Kind::y_limit, alpha, {});
    }

    static LawSpec s_limit(const Rat &alpha) {
        if (!(alpha > 0)) throw std::invalid_argument("s-limit: alpha must be > 0");
        return LawSpec(Kind::s_limit, alpha, {});
    }

    Kind kind() const { return kind_; }
    const Rat &param() const { return param_; }

    MomentSeq<Rat> moments(int p) const {
        switch (kind_) {
        case Kind::free_poisson: {
            // all free cumulants equal t
            TruncSeries<Rat> r(p - 1);
            for (int k = 0; k <= p - 1; ++k) r.coeff(k) = param_;
            return moments_from_r(r, p);
        }
        case Kind::dirac: {
            std::vector<Rat> m;
            m.reserve(static_cast<size_t>(p));
            Rat ck(1);
            for (int k = 1; k <= p; ++k) {
                ck *= param_;
                m.push_back(ck);
            }
            return MomentSeq<Rat>::from_raw(std::move(m));
        }
        case Kind::moment_list: {
            if (p > static_cast<int>(tail_.size()))
                throw std::invalid_argument("moments law: only " + std::to_string(tail_.size()) +
                                            " moments given, order " + std::to_string(p) + " requested");
            return MomentSeq<Rat>::from_raw(
                std::vector<Rat>(tail_.begin(), tail_.begin() + p));
        }
        case Kind::y_limit:
            return y_moments(param_, p);
        case Kind::s_limit:
            return s_moments(param_, p);
        }
        throw std::logic_error("LawSpec: bad kind");
    }

    std::string to_string() const {
        switch (kind_) {
        case Kind::free_poisson: return "free-poisson:t=" + rat_str(param_);
        case Kind::dirac: return "dirac:c=" + rat_str(param_);
        case Kind::moment_list: {
            std::string s = "moments:";
            for (size_t i = 0; i < tail_.size(); ++i) {
                if (i) s += ",";
                s += rat_str(tail_[i]);
            }
            return s;
        }
        case Kind::y_limit: return "y-limit:alpha=" + rat_str(param_);
        case Kind::s_limit: return "s-limit:alpha=" + rat_str(param_);
        }
        throw std::logic_error("LawSpec: bad kind");
    }

    /// Grammar: free-poisson:t=<rat> | dirac:c=<rat> | moments:<rat>,...
    ///        | y-limit:alpha=<rat> | s-limit:alpha=<rat>
    static LawSpec parse(const std::string &text) {
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("law expression needs a ':': '" + text + "'");
        const std::string head = text.substr(0, colon);
        const std::string rest = text.substr(colon + 1);
        if (head == "moments") {
            std::vector<Rat> tail;
            std::stringstream ss(rest);
            std::string item;
            while (std::getline(ss, item, ',')) tail.push_back(parse_rat(item));
            return from_moments(std::move(tail));
        }
        const auto eq = rest.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("law parameter needs '=': '" + text + "'");
        const std::string key = rest.substr(0, eq);
        const Rat value = parse_rat(rest.substr(eq + 1));
        if (head == "free-poisson" && key == "t") return free_poisson(value);
        if (head == "dirac" && key == "c") return dirac(value);
        if (head == "y-limit" && key == "alpha") return y_limit(value);
        if (head == "s-limit" && key == "alpha") return s_limit(value);
        throw std::invalid_argument("unknown law expression: '" + text + "'");
    }

  private:
    LawSpec(Kind k, Rat p, std::vector<Rat> tail)
        : kind_(k), param_(std::move(p)), tail_(std::move(tail)) {}

    Kind kind_;
    Rat param_;
    std::vector<Rat> tail_;
};

} // namespace freeprob

#endif
