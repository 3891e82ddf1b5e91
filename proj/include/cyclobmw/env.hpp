/*
   Copyright 2026 The cyclobmw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file env.hpp
 * @brief Parameter environments: values of q, lambda, q_i and A_j in a coefficient ring.
 */

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace cyclobmw {

enum class RingTag { Omega, Rc, Rational };

inline const char* ring_name(RingTag t) {
    switch (t) {
        case RingTag::Omega: return "omega";
        case RingTag::Rc: return "rc";
        case RingTag::Rational: return "rational";
    }
    return "?";
}

/**
 * @brief Parameter assignment for B_n^k.
 *
 * `qs` holds q_0..q_k with q_k = -1. A_j for j outside 0..k-1 is produced
 * on demand from the recurrence sum_{i=0}^k q_i A_{i+s} = 0 and memoized.
 */
template <Coefficient C>
class ParamEnv {
public:
    ParamEnv(int k, RingTag tag, C q, C lambda, std::vector<C> q_low, std::vector<C> a_base,
             GenSpacePtr space = nullptr, int sign = 0)
        : k_(k), tag_(tag), sign_(sign), space_(std::move(space)), q_(std::move(q)), lam_(std::move(lambda)) {
        if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "k must be positive");
        if (static_cast<int>(q_low.size()) != k || static_cast<int>(a_base.size()) != k)
            throw Error(ErrorKind::MissingValue, "need q_0..q_{k-1} and A_0..A_{k-1}");
        qs_ = std::move(q_low);
        qs_.push_back(C(-1));
        a_base_ = std::move(a_base);
        if constexpr (std::is_same_v<C, mpq_class>) {
            q_.canonicalize();
            lam_.canonicalize();
            for (auto& x : qs_) x.canonicalize();
            for (auto& x : a_base_) x.canonicalize();
        }
        qinv_ = inverse(q_);
        laminv_ = inverse(lam_);
        q0inv_ = inverse(qs_[0]);
        a0inv_ = inverse(a_base_[0]);
        delta_ = C(q_ - qinv_);
        memo_ = std::make_shared<Memo>();
    }

    int k() const { return k_; }
    RingTag tag() const { return tag_; }
    int sign() const { return sign_; }
    const GenSpacePtr& space() const { return space_; }

    const C& q() const { return q_; }
    const C& qinv() const { return qinv_; }
    const C& lambda() const { return lam_; }
    const C& lambda_inv() const { return laminv_; }
    const C& delta() const { return delta_; }
    /// q_i for 0 <= i <= k, with q_k = -1.
    const C& qi(int i) const {
        if (i < 0 || i > k_) throw Error(ErrorKind::IndexOutOfRange, "q_" + std::to_string(i));
        return qs_[i];
    }
    const C& q0_inv() const { return q0inv_; }
    const C& A0_inv() const { return a0inv_; }
    const std::vector<C>& A_base() const { return a_base_; }

    C zero() const { return lift(C(0)); }
    C one() const { return lift(C(1)); }

    /// A_j for any integer j.
    C A(int j) const {
        if (j >= 0 && j < k_) return a_base_[j];
        std::lock_guard<std::mutex> g(memo_->mu);
        return extend_locked(j);
    }

    /// Replace A_j by another value (used for negative controls).
    ParamEnv with_A(int j, C v) const {
        auto a = a_base_;
        a.at(j) = std::move(v);
        std::vector<C> ql(qs_.begin(), qs_.end() - 1);
        return ParamEnv(k_, tag_, q_, lam_, std::move(ql), std::move(a), space_, sign_);
    }
    ParamEnv with_q0(C v) const {
        std::vector<C> ql(qs_.begin(), qs_.end() - 1);
        ql[0] = std::move(v);
        return ParamEnv(k_, tag_, q_, lam_, std::move(ql), a_base_, space_, sign_);
    }

private:
    C lift(C c) const {
        if constexpr (std::is_same_v<C, LaurentPoly>) return space_ ? c.in_space(space_) : c;
        else return c;
    }

    struct Memo {
        std::mutex mu;
        std::map<int, C> values;
    };

    C extend_locked(int j) const {
        if (j >= 0 && j < k_) return a_base_[j];
        auto it = memo_->values.find(j);
        if (it != memo_->values.end()) return it->second;
        C r = zero();
        if (j >= k_) {
            // A_{s+k} = sum_{i<k} q_i A_{s+i}
            int s = j - k_;
            for (int i = 0; i < k_; ++i) r = C(r + qs_[i] * extend_locked(s + i));
        } else {
            // q_0 A_s = -sum_{i=1}^k q_i A_{s+i}
            for (int i = 1; i <= k_; ++i) r = C(r - qs_[i] * extend_locked(j + i));
            r = C(r * q0inv_);
        }
        memo_->values.emplace(j, r);
        return r;
    }

    int k_;
    RingTag tag_;
    int sign_;
    GenSpacePtr space_;
    C q_, lam_, qinv_, laminv_, delta_, q0inv_, a0inv_;
    std::vector<C> qs_, a_base_;
    std::shared_ptr<Memo> memo_;
};

/// A_j for any integer j, extended by the k-term recurrence.
template <Coefficient C>
C extend_A(const ParamEnv<C>& env, int j) {
    return env.A(j);
}

/**
 * @brief Substitute environment values for the generators of a polynomial.
 *
 * Recognized names are q, lambda, q_i (0 <= i <= k) and A_j (any integer j).
 */
template <Coefficient C>
C specialize(const LaurentPoly& a, const ParamEnv<C>& env) {
    const GenSpacePtr& sp = a.space();
    std::vector<C> vals;
    if (sp) {
        for (const auto& nm : sp->names()) {
            if (nm == "q") vals.push_back(env.q());
            else if (nm == "lambda") vals.push_back(env.lambda());
            else if (nm.rfind("q_", 0) == 0) vals.push_back(env.qi(std::stoi(nm.substr(2))));
            else if (nm.rfind("A_", 0) == 0) vals.push_back(env.A(std::stoi(nm.substr(2))));
            else throw Error(ErrorKind::MissingValue, "no value for " + nm);
        }
    }
    C r = env.zero();
    for (const auto& [e, c] : a.terms()) {
        C t = C(env.one() * C(c));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const C base = e[i] > 0 ? vals[i] : inverse(vals[i]);
            for (int s = 0; s < std::abs(e[i]); ++s) t = C(t * base);
        }
        r = C(r + t);
    }
    return r;
}

using OmegaEnv = ParamEnv<LaurentPoly>;
using RcEnv = ParamEnv<LaurentPoly>;
using RationalEnv = ParamEnv<mpq_class>;

/// Generator space of the free parameter ring for a given k.
inline GenSpacePtr omega_space(int k) {
    std::vector<std::string> n{"q", "lambda"};
    for (int i = 0; i < k; ++i) n.push_back("q_" + std::to_string(i));
    for (int i = 0; i < k; ++i) n.push_back("A_" + std::to_string(i));
    return make_space(std::move(n));
}

/// Fully symbolic environment over the free Laurent ring.
inline OmegaEnv make_omega_env(int k) {
    auto sp = omega_space(k);
    std::vector<LaurentPoly> ql, al;
    for (int i = 0; i < k; ++i) ql.push_back(LaurentPoly::gen(sp, "q_" + std::to_string(i)));
    for (int i = 0; i < k; ++i) al.push_back(LaurentPoly::gen(sp, "A_" + std::to_string(i)));
    return OmegaEnv(k, RingTag::Omega, LaurentPoly::gen(sp, "q"), LaurentPoly::gen(sp, "lambda"), ql, al, sp);
}

/// Generator space of R_c: A_0, ..., A_{floor(k/2)}.
inline GenSpacePtr rc_space(int k) {
    std::vector<std::string> n;
    for (int i = 0; i <= k / 2; ++i) n.push_back("A_" + std::to_string(i));
    return make_space(std::move(n));
}

/// Classical specialization: q = 1, lambda = sign, q_0 = 1, q_i = 0, A_{-m} = A_m = A_{m+k}.
inline RcEnv make_Rc_env(int k, int sign) {
    if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "k must be positive");
    if (sign != 1 && sign != -1) throw Error(ErrorKind::DegenerateParameters, "sign must be +1 or -1");
    auto sp = rc_space(k);
    std::vector<LaurentPoly> ql(k, LaurentPoly(0).in_space(sp)), al;
    ql[0] = LaurentPoly(1).in_space(sp);
    for (int j = 0; j < k; ++j) {
        int d = std::min(j, k - j);
        if (j == 0) d = 0;
        al.push_back(LaurentPoly::gen(sp, "A_" + std::to_string(d)));
    }
    return RcEnv(k, RingTag::Rc, LaurentPoly(1).in_space(sp), LaurentPoly(sign).in_space(sp), ql, al, sp, sign);
}

/// Rational environment with explicit values for everything.
inline RationalEnv make_rational_env(int k, mpq_class q, mpq_class lambda, std::vector<mpq_class> q_low,
                                     std::vector<mpq_class> a_base, int sign = 0) {
    return RationalEnv(k, RingTag::Rational, std::move(q), std::move(lambda), std::move(q_low), std::move(a_base),
                       nullptr, sign);
}

}  // namespace cyclobmw
