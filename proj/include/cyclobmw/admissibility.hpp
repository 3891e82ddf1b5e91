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
 * @file admissibility.hpp
 * @brief The polynomials beta, h_l, h_l', B_l and the (weak) admissibility tests.
 *
 * Every formula is written once against a ParamEnv, so evaluating over the
 * symbolic environment gives the element of the free ring and evaluating over
 * a concrete environment gives its specialization.
 */

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "env.hpp"

namespace cyclobmw {

enum class BetaVariant { Full, Plus, Minus };

inline int z_of(int k) { return (k + 1) / 2; }
inline int eps_of(int k) { return k % 2; }

namespace detail {
inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline int ceil_div(int a, int b) { return -floor_div(-a, b); }
}  // namespace detail

template <Coefficient C>
C compute_beta(const ParamEnv<C>& env, BetaVariant v) {
    const int k = env.k();
    const C& q0 = env.qi(0);
    const C& q0i = env.q0_inv();
    const C& lam = env.lambda();
    const C& lami = env.lambda_inv();
    switch (v) {
        case BetaVariant::Full: {
            C b = C(q0 * lam - q0i * lami);
            if (k % 2 == 0) b = C(b + env.delta());
            return b;
        }
        case BetaVariant::Plus:
            return k % 2 ? C(q0 * lam - env.one()) : C(q0 * lam - env.qinv());
        case BetaVariant::Minus:
            return k % 2 ? C(q0i * lami + env.one()) : C(env.q() * q0i * lami + env.one());
    }
    return env.zero();
}

/// The bracket of h_l, defined for 1 <= l <= k-1.
template <Coefficient C>
C compute_B(const ParamEnv<C>& env, int l) {
    const int k = env.k(), z = z_of(k);
    if (l < 1 || l > k - 1) throw Error(ErrorKind::IndexOutOfRange, "B_" + std::to_string(l));
    C b = env.zero();
    for (int r = 1; r <= k - l; ++r) b = C(b + env.qi(r + l) * env.A(r));
    for (int i = std::max(l + 1, z); i <= detail::floor_div(l + k, 2); ++i) b = C(b - env.qi(2 * i - l));
    for (int i = detail::ceil_div(l, 2); i <= std::min(l, z - 1); ++i) b = C(b + env.qi(2 * i - l));
    return b;
}

/// h_l for 0 <= l <= k-1.
template <Coefficient C>
C compute_h(const ParamEnv<C>& env, int l) {
    const int k = env.k();
    if (l < 0 || l > k - 1) throw Error(ErrorKind::IndexOutOfRange, "h_" + std::to_string(l));
    if (l == 0) return C(env.lambda() - env.lambda_inv() + env.delta() * (env.A(0) - env.one()));
    return C(env.lambda_inv() * (env.qi(l) + env.q0_inv() * env.qi(k - l)) + env.delta() * compute_B(env, l));
}

/// h_l' for 1 <= l <= z - eps.
template <Coefficient C>
C compute_h_prime(const ParamEnv<C>& env, int l) {
    const int k = env.k(), z = z_of(k);
    if (l < 1 || l > z - eps_of(k)) throw Error(ErrorKind::IndexOutOfRange, "h'_" + std::to_string(l));
    const C& q0i = env.q0_inv();
    C h = env.zero();
    for (int r = 1; r <= l; ++r) h = C(h + q0i * env.qi(r + k - l) * env.A(r));
    for (int r = 0; r <= k - l; ++r) h = C(h - env.qi(r + l) * env.A(r));
    for (int i = detail::ceil_div(l, 2); i <= l - 1; ++i)
        h = C(h - (q0i * env.qi(k - 2 * i + l) + env.qi(2 * i - l)));
    for (int i = z; i <= detail::floor_div(l + k, 2); ++i)
        h = C(h + (q0i * env.qi(k - 2 * i + l) + env.qi(2 * i - l)));
    return h;
}

template <Coefficient C>
struct AdmissibilityReport {
    int k = 0, z = 0, eps = 0;
    C beta, beta_plus, beta_minus;
    std::vector<C> h;        ///< h_0 .. h_{z-eps}
    std::vector<C> h_prime;  ///< h'_1 .. h'_{z-eps}
    std::vector<C> h_all;    ///< h_0 .. h_{k-1}
    bool verdict = false;
    bool all_h_zero = false;
    /// Set when the verdict and the vanishing of every h_l disagree.
    bool range_discrepancy = false;
};

template <Coefficient C>
AdmissibilityReport<C> is_admissible(const ParamEnv<C>& env) {
    AdmissibilityReport<C> r;
    r.k = env.k();
    r.z = z_of(r.k);
    r.eps = eps_of(r.k);
    r.beta = compute_beta(env, BetaVariant::Full);
    r.beta_plus = compute_beta(env, BetaVariant::Plus);
    r.beta_minus = compute_beta(env, BetaVariant::Minus);
    bool ok = is_zero(r.beta);
    for (int l = 0; l <= r.z - r.eps; ++l) {
        r.h.push_back(compute_h(env, l));
        ok = ok && is_zero(r.h.back());
    }
    for (int l = 1; l <= r.z - r.eps; ++l) {
        r.h_prime.push_back(compute_h_prime(env, l));
        ok = ok && is_zero(r.h_prime.back());
    }
    r.all_h_zero = true;
    for (int l = 0; l < r.k; ++l) {
        r.h_all.push_back(compute_h(env, l));
        r.all_h_zero = r.all_h_zero && is_zero(r.h_all.back());
    }
    r.verdict = ok;
    r.range_discrepancy = ok != (r.all_h_zero && is_zero(r.beta));
    return r;
}

/// theta_{-p} from the weak admissibility recursion, with theta_j = A_j for j >= 0.
template <Coefficient C>
class ThetaSeq {
public:
    explicit ThetaSeq(const ParamEnv<C>& env) : env_(env) {}

    C operator()(int j) {
        if (j >= 0) return env_.A(j);
        auto it = neg_.find(-j);
        if (it != neg_.end()) return it->second;
        const int p = -j;
        const C& lam = env_.lambda();
        C dl = C(env_.delta() * lam);
        C r = C(lam * lam * (*this)(p));
        for (int s = 1; s <= p - 1; ++s) r = C(r + dl * (*this)(2 * s - p));
        for (int s = 1; s <= p - 1; ++s) r = C(r - dl * (*this)(s) * (*this)(s - p));
        neg_.emplace(p, r);
        return r;
    }

private:
    const ParamEnv<C>& env_;
    std::map<int, C> neg_;
};

template <Coefficient C>
C theta_neg(const ParamEnv<C>& env, int p) {
    if (p < 1) throw Error(ErrorKind::IndexOutOfRange, "theta_neg needs p >= 1");
    ThetaSeq<C> th(env);
    return th(-p);
}

template <Coefficient C>
bool is_weak_admissible(const ParamEnv<C>& env, int depth) {
    if (depth < 1) throw Error(ErrorKind::IndexOutOfRange, "depth must be positive");
    ThetaSeq<C> th(env);
    const C& d = env.delta();
    if (!is_zero(C(env.lambda() - env.lambda_inv() - d * (env.one() - th(0))))) return false;
    for (int s = -depth; s <= depth; ++s) {
        C acc = env.zero();
        for (int r = 0; r <= env.k(); ++r) acc = C(acc + env.qi(r) * th(r + s));
        if (!is_zero(acc)) return false;
    }
    return true;
}

/// A_{-p} = lambda^2 A_p + delta lambda sum A_{2s-p} - delta lambda sum A_s A_{s-p} for 1 <= p <= pmax.
template <Coefficient C>
bool check_GH_recursion(const ParamEnv<C>& env, int pmax) {
    const C& lam = env.lambda();
    C dl = C(env.delta() * lam);
    for (int p = 1; p <= pmax; ++p) {
        C r = C(lam * lam * env.A(p));
        for (int s = 1; s <= p - 1; ++s) r = C(r + dl * env.A(2 * s - p));
        for (int s = 1; s <= p - 1; ++s) r = C(r - dl * env.A(s) * env.A(s - p));
        if (!(r == env.A(-p))) return false;
    }
    return true;
}

/**
 * @brief Rational parameters solving every admissibility equation.
 *
 * q_0 makes the selected factor of beta vanish, A_0 kills h_0 and
 * A_1..A_{k-1} come from B_l = -delta^{-1} lambda^{-1}(q_l + q_0^{-1} q_{k-l}),
 * solved by back substitution through the triangular B-from-A transform.
 */
inline RationalEnv make_admissible_env(int k, mpq_class q, mpq_class lambda, std::vector<mpq_class> q_mid, int sign) {
    q.canonicalize();
    lambda.canonicalize();
    for (auto& x : q_mid) x.canonicalize();
    if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "k must be positive");
    if (static_cast<int>(q_mid.size()) != k - 1) throw Error(ErrorKind::MissingValue, "need q_1..q_{k-1}");
    if (sign != 1 && sign != -1) throw Error(ErrorKind::DegenerateParameters, "sign must be +1 or -1");
    if (sgn(q) == 0 || sgn(lambda) == 0) throw Error(ErrorKind::DegenerateParameters, "q and lambda must be units");
    mpq_class qi = 1 / q, li = 1 / lambda;
    mpq_class delta = q - qi;
    if (sgn(delta) == 0) throw Error(ErrorKind::DegenerateParameters, "delta = 0");
    mpq_class di = 1 / delta;
    mpq_class a0 = di * li - di * lambda + 1;
    if (sgn(a0) == 0) throw Error(ErrorKind::DegenerateParameters, "A_0 would vanish");
    mpq_class q0;
    if (k % 2) q0 = sign > 0 ? mpq_class(li) : mpq_class(-li);
    else q0 = sign > 0 ? mpq_class(qi * li) : mpq_class(-q * li);

    std::vector<mpq_class> qs{q0};
    qs.insert(qs.end(), q_mid.begin(), q_mid.end());
    auto qat = [&](int i) -> mpq_class { return i == k ? mpq_class(-1) : qs.at(i); };
    mpq_class q0i = 1 / q0;
    std::vector<mpq_class> A(k, 0);
    A[0] = a0;
    const int z = z_of(k);
    // B_l = -A_{k-l} + sum_{r<k-l} q_{r+l} A_r + const_l; solve l = k-1 down to 1.
    for (int l = k - 1; l >= 1; --l) {
        mpq_class target = -di * li * (qat(l) + q0i * qat(k - l));
        mpq_class rest = 0;
        for (int r = 1; r < k - l; ++r) rest += qat(r + l) * A[r];
        for (int i = std::max(l + 1, z); i <= detail::floor_div(l + k, 2); ++i) rest -= qat(2 * i - l);
        for (int i = detail::ceil_div(l, 2); i <= std::min(l, z - 1); ++i) rest += qat(2 * i - l);
        A[k - l] = rest - target;
    }
    return make_rational_env(k, q, lambda, qs, A, sign);
}

}  // namespace cyclobmw
