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

TEST_CASE("laurent ring axioms on random polynomials") {
    std::mt19937 rng(1);
    auto sp = omega_space(2);
    for (int t = 0; t < 40; ++t) {
        auto a = random_poly(rng, sp), b = random_poly(rng, sp), c = random_poly(rng, sp);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * LaurentPoly(1).in_space(sp) == a);
    }
}

TEST_CASE("units invert and non-units throw") {
    auto sp = omega_space(1);
    auto m = LaurentPoly::gen(sp, "q", 3) * LaurentPoly::gen(sp, "lambda", -1) * LaurentPoly(-1);
    CHECK(m * m.inverse() == LaurentPoly(1).in_space(sp));
    auto nonunit = LaurentPoly::gen(sp, "q") + LaurentPoly(1).in_space(sp);
    CHECK_THROWS_AS(nonunit.inverse(), Error);
    CHECK_THROWS_AS(inverse(mpq_class(0)), Error);
}

TEST_CASE("exact division") {
    std::mt19937 rng(2);
    auto sp = omega_space(2);
    for (int t = 0; t < 10; ++t) {
        auto a = random_poly(rng, sp), b = random_poly(rng, sp);
        if (b.is_zero()) continue;
        auto q = (a * b).divexact(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("specialize agrees with direct evaluation") {
    auto omega = make_omega_env(3);
    auto env = sample_rational_env(3);
    CHECK(specialize(omega.delta(), env) == env.delta());
    CHECK(specialize(omega.q0_inv() * omega.qi(2), env) == env.q0_inv() * env.qi(2));
    for (int l = 0; l < 3; ++l) CHECK(specialize(compute_h(omega, l), env) == compute_h(env, l));
    CHECK(specialize(compute_beta(omega, BetaVariant::Full), env) == compute_beta(env, BetaVariant::Full));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("6/4") == mpq_class(3, 2));
    CHECK(parse_rational("-5") == mpq_class(-5));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}
