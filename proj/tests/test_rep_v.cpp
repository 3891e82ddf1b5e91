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

TEST_CASE("V is a module over admissible environments") {
    for (int k = 1; k <= 6; ++k) CHECK(verify_V_relations(make_Rc_env(k, 1)).empty());
    for (int k = 1; k <= 4; ++k) CHECK(verify_V_relations(sample_rational_env(k)).empty());
}

TEST_CASE("V fails away from admissibility") {
    auto env = sample_rational_env(3);
    CHECK_FALSE(verify_V_relations(env.with_A(2, mpq_class(env.A(2) - 1))).empty());
}

TEST_CASE("obstruction coefficients are beta and h") {
    for (int k = 1; k <= 4; ++k) {
        auto env = make_omega_env(k);
        auto o = obstruction_coeffs(k);
        CHECK(o.beta == compute_beta(env, BetaVariant::Full));
        REQUIRE(o.h.size() == static_cast<std::size_t>(k - 1));
        for (int l = 1; l < k; ++l) CHECK(o.h[l - 1] == compute_h(env, l));
        CHECK(check_W_claim(k));
    }
}
