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
 * @file acceptance.hpp
 * @brief The end-to-end acceptance suite, shared by `cyclobmw selftest` and the test binary.
 */

#pragma once

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "admissibility.hpp"
#include "bmw_core.hpp"
#include "brauer.hpp"
#include "matrix.hpp"
#include "rep_v.hpp"

namespace cyclobmw::acceptance {

struct Outcome {
    int id = 0;
    bool pass = false;
    std::string detail;
};

/// Deterministic admissible rational environments for a given k.
inline std::vector<RationalEnv> random_admissible_envs(int k, int count, unsigned seed) {
    std::mt19937 rng(seed + 7919u * static_cast<unsigned>(k));
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    auto rat = [&] { return mpq_class(num(rng), den(rng)); };
    std::vector<RationalEnv> out;
    while (static_cast<int>(out.size()) < count) {
        mpq_class q = rat(), lam = rat();
        q.canonicalize();
        lam.canonicalize();
        if (sgn(q) == 0 || sgn(lam) == 0 || q == 1 || q == -1) continue;
        std::vector<mpq_class> mid;
        for (int i = 1; i < k; ++i) {
            mpq_class x = rat();
            x.canonicalize();
            mid.push_back(x);
        }
        try {
            out.push_back(make_admissible_env(k, q, lam, mid, (rng() & 1) ? 1 : -1));
        } catch (const Error&) {
        }
    }
    return out;
}

inline Outcome criterion1() {
    const std::vector<std::pair<int, int>> nk{{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    const std::vector<long long> expect{1, 3, 3, 12, 27, 15, 120};
    std::ostringstream os;
    bool ok = true;
    for (std::size_t t = 0; t < nk.size(); ++t) {
        const auto [n, k] = nk[t];
        const long long b = static_cast<long long>(enumerate_basis(n, k).size());
        const long long d = static_cast<long long>(enumerate_diagrams(n, k).size());
        ok = ok && b == expect[t] && d == expect[t] && bmw_rank(n, k) == expect[t];
        os << (t ? " " : "") << b;
        if (d != b) os << "/" << d;
    }
    return {1, ok, "counts " + os.str()};
}

inline Outcome criterion2() {
    bool ok = true;
    int checked = 0;
    for (int k = 1; k <= 6; ++k) {
        auto env = make_omega_env(k);
        const auto beta = compute_beta(env, BetaVariant::Full);
        ok = ok && beta == compute_beta(env, BetaVariant::Plus) * compute_beta(env, BetaVariant::Minus);
        ++checked;
        for (int l = 1; l <= k - 1; ++l, ++checked) {
            LaurentPoly rhs = env.lambda_inv() * (env.qi(l) + env.q0_inv() * env.qi(k - l)) + env.delta() * compute_B(env, l);
            ok = ok && compute_h(env, l) == rhs;
        }
        const LaurentPoly h0 = compute_h(env, 0);
        for (int l = 1; l <= z_of(k) - eps_of(k); ++l, ++checked) {
            LaurentPoly lhs = env.q0_inv() * compute_h(env, k - l) - compute_h(env, l) +
                              beta * env.q0_inv() * env.qi(l) - h0 * env.qi(l);
            ok = ok && lhs == env.delta() * compute_h_prime(env, l);
        }
    }
    return {2, ok, std::to_string(checked) + " identities in the free ring, k=1..6"};
}

inline Outcome criterion3() {
    bool ok = true;
    for (int k = 1; k <= 5; ++k) {
        auto env = make_omega_env(k);
        auto o = obstruction_coeffs(k);
        ok = ok && o.beta == compute_beta(env, BetaVariant::Full);
        for (int l = 1; l < k; ++l) ok = ok && o.h[l - 1] == compute_h(env, l);
        ok = ok && check_W_claim(k);
    }
    return {3, ok, "obstruction and W closed form, k=1..5"};
}

/// Environments shared by criteria 4 and 8.
struct EnvPool {
    std::vector<RcEnv> rc;
    std::vector<RationalEnv> rational;
};

inline EnvPool criterion4_envs() {
    EnvPool p;
    for (int k = 1; k <= 6; ++k)
        for (int s : {1, -1}) p.rc.push_back(make_Rc_env(k, s));
    for (int k = 1; k <= 4; ++k)
        for (auto& e : random_admissible_envs(k, 3, 2026u)) p.rational.push_back(e);
    return p;
}

inline Outcome criterion4(const EnvPool& pool) {
    bool ok = true;
    int fails = 0;
    for (const auto& e : pool.rc) {
        const bool good = verify_V_relations(e).empty() && is_admissible(e).verdict;
        fails += !good;
        ok = ok && good;
    }
    for (const auto& e : pool.rational) {
        const bool good = verify_V_relations(e).empty() && is_admissible(e).verdict;
        fails += !good;
        ok = ok && good;
    }
    // Negative control: perturbing a parameter of an admissible env must break V.
    int caught = 0, controls = 0;
    for (const auto& e : pool.rational) {
        if (e.k() < 2) continue;
        ++controls;
        auto bad = e.with_A(1, mpq_class(e.A(1) + 1));
        caught += !verify_V_relations(bad).empty();
    }
    ok = ok && controls > 0 && caught == controls;
    std::ostringstream os;
    os << pool.rc.size() << " R_c envs, " << pool.rational.size() << " rational envs, " << fails << " failures; "
       << caught << "/" << controls << " perturbed envs rejected";
    return {4, ok, os.str()};
}

template <Coefficient C>
bool relation_config(BmwEngine<C>& eng, int n, int triples, unsigned seed, std::string& why) {
    if (!verify_relations(eng, n).empty()) {
        why = "relations";
        return false;
    }
    auto basis = enumerate_basis(n, eng.k());
    for (const auto& b : basis)
        if (!equal(eng.reduce(eng.unit(b)), eng.unit(b))) {
            why = "idempotence";
            return false;
        }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < triples; ++t) {
        auto a = eng.unit(basis[pick(rng)]), b = eng.unit(basis[pick(rng)]), c = eng.unit(basis[pick(rng)]);
        auto l = eng.multiply(eng.multiply(a, b), c);
        auto r = eng.multiply(a, eng.multiply(b, c));
        if (!equal(l, r) || !equal(eng.reduce(l), l)) {
            why = "associativity";
            return false;
        }
    }
    return true;
}

inline Outcome criterion5() {
    const std::vector<std::pair<int, int>> nk{{2, 2}, {2, 3}, {3, 2}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& [n, k] : nk) {
        std::string why;
        BmwEngine<LaurentPoly> rc(make_Rc_env(k, 1));
        const bool a = relation_config(rc, n, 200, 11u, why);
        std::vector<mpq_class> mid(k - 1, mpq_class(1, 2));
        BmwEngine<mpq_class> qe(make_admissible_env(k, 2, 3, mid, 1));
        const bool b = relation_config(qe, n, 200, 13u, why);
        ok = ok && a && b;
        os << "(" << n << "," << k << ")" << (a && b ? "ok " : "FAIL[" + why + "] ");
    }
    return {5, ok, os.str() + "over R_c and a rational env"};
}

inline Outcome criterion6() {
    bool ok = true;
    std::ostringstream os;
    for (int sign : {1, -1}) {
        auto env = make_Rc_env(2, sign);
        BmwEngine<LaurentPoly> eng(env);
        auto basis = enumerate_basis(2, 2);
        std::set<CycloDiagram> images;
        int bad = 0;
        for (const auto& a : basis) {
            images.insert(xi_to_brauer(env, a).diagram);
            for (const auto& b : basis) {
                auto lhs = xi_to_brauer(env, eng.multiply(eng.unit(a), eng.unit(b)));
                auto da = xi_to_brauer(env, a), db = xi_to_brauer(env, b);
                auto w = multiply(da.diagram, db.diagram, env.space());
                DiagramElement rhs;
                add_to(rhs, w.diagram, da.coeff * db.coeff * w.coeff);
                bad += lhs != rhs;
            }
        }
        std::mt19937 rng(17u);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        int tbad = 0;
        for (int t = 0; t < 100; ++t) {
            auto x = eng.unit(basis[pick(rng)]), y = eng.unit(basis[pick(rng)]);
            tbad += !(trace_Rc(env, eng.multiply(x, y)) == trace_Rc(env, eng.multiply(y, x)));
        }
        const bool distinct = images.size() == basis.size();
        ok = ok && bad == 0 && distinct && tbad == 0;
        os << (sign > 0 ? "plus" : "minus") << ": " << bad << " hom failures, " << images.size() << "/" << basis.size()
           << " distinct, " << tbad << " trace failures; ";
    }
    return {6, ok, os.str()};
}

inline Outcome criterion7() {
    bool ok = true;
    std::ostringstream os;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}}) {
        auto g = gram_matrix(enumerate_diagrams(n, k), rc_space(k));
        const bool nz = !det_fraction_free(g).is_zero();
        ok = ok && nz;
        os << "det(" << n << "," << k << ")" << (nz ? "!=0 " : "=0 ");
    }
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
        auto g = gram_matrix(enumerate_diagrams(n, k), rc_space(k));
        auto c = nonzero_certificate(g, 8, 2305843009213693951ULL, 99);
        ok = ok && c == Certificate::CertifiedNonzero;
        os << "(" << n << "," << k << ") " << certificate_name(c) << " ";
    }
    return {7, ok, os.str()};
}

inline Outcome criterion8(const EnvPool& pool) {
    bool ok = true;
    int count = 0;
    for (const auto& e : pool.rc) {
        ok = ok && is_weak_admissible(e, 2 * e.k()) && check_GH_recursion(e, 2 * e.k());
        ++count;
    }
    for (const auto& e : pool.rational) {
        ok = ok && is_weak_admissible(e, 2 * e.k()) && check_GH_recursion(e, 2 * e.k());
        ++count;
    }
    return {8, ok, std::to_string(count) + " envs, depth 2k"};
}

/// Runs the selected criteria (all when `only` is 0); each outcome goes to `sink` as soon as it is known.
inline bool run_all(const std::function<void(const Outcome&)>& sink, int only = 0) {
    if (only < 0 || only > 8) throw Error(ErrorKind::IndexOutOfRange, "criteria are numbered 1..8");
    bool all = true;
    std::optional<EnvPool> pool;
    auto envs = [&]() -> const EnvPool& {
        if (!pool) pool = criterion4_envs();
        return *pool;
    };
    const std::function<Outcome()> table[] = {
        criterion1, criterion2, criterion3, [&] { return criterion4(envs()); },
        criterion5, criterion6, criterion7, [&] { return criterion8(envs()); }};
    for (int id = 1; id <= 8; ++id) {
        if (only && id != only) continue;
        Outcome o;
        try {
            o = table[id - 1]();
        } catch (const std::exception& e) {
            o = {id, false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        sink(o);
    }
    return all;
}

}  // namespace cyclobmw::acceptance
