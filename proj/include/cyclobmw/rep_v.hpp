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
 * @file rep_v.hpp
 * @brief The rank-k module V of B_2^k with basis v_0..v_{k-1}.
 */

#pragma once

#include <string>
#include <vector>

#include "admissibility.hpp"
#include "matrix.hpp"

namespace cyclobmw {

template <Coefficient C>
struct RepMatrices {
    Matrix<C> Y, Yinv, X, E, W;
};

template <Coefficient C>
using Vec = std::vector<C>;

namespace detail {

template <Coefficient C>
Vec<C> axpy(const Vec<C>& x, const C& a, const Vec<C>& y) {
    Vec<C> r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = C(r[i] + a * y[i]);
    return r;
}

template <Coefficient C>
void set_column(Matrix<C>& m, std::size_t c, const Vec<C>& v) {
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
}

}  // namespace detail

template <Coefficient C>
RepMatrices<C> build_matrices(const ParamEnv<C>& env) {
    const int k = env.k();
    const C zero = env.zero(), one = env.one();
    const C& d = env.delta();
    auto unit = [&](int i) {
        Vec<C> v(k, zero);
        v[i] = one;
        return v;
    };
    RepMatrices<C> m;
    m.Y = Matrix<C>(k, k, zero);
    m.Yinv = Matrix<C>(k, k, zero);
    for (int i = 0; i + 1 < k; ++i) m.Y(i + 1, i) = one;
    for (int i = 0; i < k; ++i) m.Y(i, k - 1) = env.qi(i);
    for (int i = 0; i < k; ++i) m.Yinv(i, 0) = C(-env.q0_inv() * env.qi(i + 1));
    for (int i = 1; i < k; ++i) m.Yinv(i - 1, i) = one;

    const Vec<C> yinv_v0 = m.Yinv.column(0);
    std::vector<Vec<C>> xcol(k);
    xcol[0] = unit(0);
    for (auto& x : xcol[0]) x = C(x * env.lambda());
    if (k >= 2) {
        xcol[1] = yinv_v0;
        for (auto& x : xcol[1]) x = C(x * env.lambda_inv());
    }
    for (int i = 2; i < k; ++i) {
        Vec<C> v = m.Yinv.apply(xcol[i - 1]);
        v = detail::axpy(v, C(-d), unit(i - 2));
        v = detail::axpy(v, C(d * env.A(i - 1)), yinv_v0);
        xcol[i] = v;
    }
    m.X = Matrix<C>(k, k, zero);
    for (int i = 0; i < k; ++i) detail::set_column(m.X, i, xcol[i]);
    m.E = Matrix<C>(k, k, zero);
    for (int i = 0; i < k; ++i) m.E(0, i) = env.A(i);
    Matrix<C> I = Matrix<C>::identity(k, zero, one);
    m.W = m.X - I.scaled(d) + m.E.scaled(d);
    return m;
}

template <Coefficient C>
Matrix<C> mat_pow(const Matrix<C>& a, int p, const C& zero, const C& one) {
    Matrix<C> r = Matrix<C>::identity(a.rows(), zero, one);
    for (int i = 0; i < p; ++i) r = r * a;
    return r;
}

/// v_s = Y^s v_0 for any integer s.
template <Coefficient C>
Vec<C> v_index(const RepMatrices<C>& m, int s, const C& zero, const C& one) {
    Vec<C> v(m.Y.rows(), zero);
    v[0] = one;
    for (int i = 0; i < s; ++i) v = m.Y.apply(v);
    for (int i = 0; i > s; --i) v = m.Yinv.apply(v);
    return v;
}

/// Names of the failing relations; empty when V is a module.
template <Coefficient C>
std::vector<std::string> verify_V_relations(const ParamEnv<C>& env) {
    const int k = env.k();
    const C zero = env.zero(), one = env.one();
    auto m = build_matrices(env);
    const Matrix<C> I = Matrix<C>::identity(k, zero, one);
    std::vector<std::string> fail;

    Matrix<C> poly(k, k, zero), yp = I;
    for (int l = 0; l <= k; ++l) {
        poly = poly + yp.scaled(env.qi(l));
        yp = yp * m.Y;
    }
    if (!(poly == Matrix<C>(k, k, zero))) fail.push_back("sum q_l Y^l = 0");
    if (!(m.Y * m.Yinv == I) || !(m.Yinv * m.Y == I)) fail.push_back("Y Y^-1 = 1");
    if (!(m.X * m.W == I) || !(m.W * m.X == I)) fail.push_back("X W = W X = 1");
    const Matrix<C> lE = m.E.scaled(env.lambda());
    if (!(m.X * m.E == lE) || !(m.E * m.X == lE)) fail.push_back("X E = lambda E = E X");
    if (!(m.Y * m.X * m.Y * m.X == m.X * m.Y * m.X * m.Y)) fail.push_back("Y X Y X = X Y X Y");
    Matrix<C> ym = I;
    for (int s = 0; s < k; ++s) {
        if (!(m.E * ym * m.E == m.E.scaled(env.A(s)))) {
            fail.push_back("E Y^" + std::to_string(s) + " E = A_" + std::to_string(s) + " E");
        }
        ym = ym * m.Y;
    }
    const Matrix<C> liE = m.E.scaled(env.lambda_inv());
    if (!(m.E * m.Y * m.X * m.Y == liE) || !(m.Y * m.X * m.Y * m.E == liE))
        fail.push_back("E Y X Y = Y X Y E = lambda^-1 E");
    return fail;
}

/// Images of the basis under W with W v_0 = lambda^{-1} v_0, matching the matrix W elsewhere.
template <Coefficient C>
std::vector<Vec<C>> w_columns(const ParamEnv<C>& env, const RepMatrices<C>& m) {
    std::vector<Vec<C>> cols;
    for (std::size_t i = 0; i < m.W.rows(); ++i) cols.push_back(m.W.column(i));
    for (auto& x : cols[0]) x = env.zero();
    cols[0][0] = env.lambda_inv();
    return cols;
}

template <Coefficient C>
Vec<C> apply_cols(const std::vector<Vec<C>>& cols, const Vec<C>& v, const C& zero) {
    Vec<C> r(v.size(), zero);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!is_zero(v[j])) r = detail::axpy(r, v[j], cols[j]);
    return r;
}

struct Obstruction {
    LaurentPoly beta;
    std::vector<LaurentPoly> h;  ///< h_1 .. h_{k-1}
};

/**
 * @brief Coefficients of (Y^{-1} W Y^{-1} - X) v_0 in the basis v_0, v_{-1}, ..., v_{1-k}.
 *
 * Coordinates in that basis are read off from Y^{k-1} applied to the vector,
 * whose coordinate on v_{k-1-l} is the coefficient of v_{-l}.
 */
inline Obstruction obstruction_coeffs(int k) {
    auto env = make_omega_env(k);
    const LaurentPoly zero = env.zero(), one = env.one();
    auto m = build_matrices(env);
    auto wc = w_columns(env, m);
    Vec<LaurentPoly> v0(k, zero);
    v0[0] = one;
    Vec<LaurentPoly> t = m.Yinv.apply(apply_cols(wc, m.Yinv.apply(v0), zero));
    Vec<LaurentPoly> xv = m.X.apply(v0);
    for (int i = 0; i < k; ++i) t[i] = t[i] - xv[i];
    for (int i = 0; i < k - 1; ++i) t = m.Y.apply(t);
    const LaurentPoly mq0 = -env.qi(0);
    Obstruction o;
    o.beta = mq0 * t[k - 1];
    for (int l = 1; l < k; ++l) o.h.push_back(mq0 * t[k - 1 - l]);
    return o;
}

/// Closed form of W v_l against the recursive definition, for 0 <= l <= k-1, in the free ring.
inline bool check_W_claim(int k) {
    auto env = make_omega_env(k);
    const LaurentPoly zero = env.zero(), one = env.one();
    auto m = build_matrices(env);
    auto wc = w_columns(env, m);
    const LaurentPoly& d = env.delta();
    for (int l = 0; l < k; ++l) {
        Vec<LaurentPoly> rhs = v_index(m, -l, zero, one);
        for (auto& x : rhs) x = env.lambda_inv() * x;
        for (int i = 1; i <= l; ++i) {
            rhs = detail::axpy(rhs, LaurentPoly(d * env.A(l + 1 - i)), v_index(m, 1 - i, zero, one));
            rhs = detail::axpy(rhs, LaurentPoly(-d), v_index(m, l - 2 * i + 2, zero, one));
        }
        if (rhs != wc[l]) return false;
    }
    // X v_i = Y^{-1} W v_{i-1} for i >= 1 ties the recursion to the matrix X.
    for (int i = 1; i < k; ++i)
        if (m.Yinv.apply(wc[i - 1]) != m.X.column(i)) return false;
    return true;
}

}  // namespace cyclobmw
