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

#include "support.hpp"

using namespace testing;

TEST_CASE("classical specialization is admissible") {
    for (int k = 1; k <= 6; ++k)
        for (int s : {1, -1}) {
            auto r = is_admissible(make_Rc_env(k, s));
            CHECK(r.verdict);
            CHECK_FALSE(r.range_discrepancy);
        }
}

TEST_CASE("beta splits into its two factors") {
    for (int k = 1; k <= 6; ++k) {
        auto env = make_omega_env(k);
        CHECK(compute_beta(env, BetaVariant::Full) ==
              compute_beta(env, BetaVariant::Plus) * compute_beta(env, BetaVariant::Minus));
    }
}

TEST_CASE("constructed rational envs are admissible") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    int made = 0;
    for (int t = 0; made < 50 && t < 500; ++t) {
        const int k = 1 + t % 5;
        mpq_class q(num(rng), den(rng)), lam(num(rng), den(rng));
        q.canonicalize();
        lam.canonicalize();
        std::vector<mpq_class> mid;
        for (int i = 1; i < k; ++i) {
            mpq_class x(num(rng), den(rng));
            x.canonicalize();
            mid.push_back(x);
        }
        try {
            auto env = make_admissible_env(k, q, lam, mid, t % 2 ? 1 : -1);
            CHECK(is_admissible(env).verdict);
            ++made;
        } catch (const Error&) {
        }
    }
    CHECK(made == 50);
}

TEST_CASE("perturbation breaks admissibility") {
    auto env = sample_rational_env(3);
    CHECK_FALSE(is_admissible(env.with_A(1, mpq_class(env.A(1) + 1))).verdict);
    CHECK_FALSE(is_admissible(env.with_q0(mpq_class(env.qi(0) * 2))).verdict);
}

TEST_CASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(make_admissible_env(2, 1, 3, {mpq_class(1)}, 1), Error);
    CHECK_THROWS_AS(make_admissible_env(2, 2, 0, {mpq_class(1)}, 1), Error);
    CHECK_THROWS_AS(make_admissible_env(3, 2, 3, {mpq_class(1)}, 1), Error);
    CHECK_THROWS_AS(make_Rc_env(0, 1), Error);
}

TEST_CASE("weak admissibility and the negative A recursion") {
    for (int k = 1; k <= 4; ++k) {
        auto env = sample_rational_env(k, k % 2 ? 1 : -1);
        CHECK(is_weak_admissible(env, 2 * k));
        CHECK(check_GH_recursion(env, 2 * k));
        auto rc = make_Rc_env(k, -1);
        CHECK(is_weak_admissible(rc, 2 * k));
        CHECK(check_GH_recursion(rc, 2 * k));
    }
    CHECK_THROWS_AS(theta_neg(make_Rc_env(2, 1), 0), Error);
}

TEST_CASE("A extends periodically over R_c") {
    auto env = make_Rc_env(4, 1);
    for (int j = -8; j <= 8; ++j) CHECK(extend_A(env, j) == env.A(((j % 4) + 4) % 4));
}
