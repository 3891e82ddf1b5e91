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

TEST_CASE("e squared is a loop times e") {
    auto sp = rc_space(3);
    auto e = CycloDiagram::e_diagram(3, 3, 1);
    auto w = multiply(e, e, sp);
    CHECK(w.diagram == e);
    CHECK(w.coeff == LaurentPoly::gen(sp, "A_0"));
}

TEST_CASE("a labelled loop contributes A_d") {
    auto sp = rc_space(3);
    auto e = CycloDiagram::e_diagram(2, 3, 1), y = CycloDiagram::y_diagram(2, 3, 1);
    auto ey = multiply(e, y, sp);
    auto w = multiply(ey.diagram, e, sp);
    CHECK(w.diagram == e);
    CHECK(w.coeff == LaurentPoly::gen(sp, "A_1"));
    auto yinv = CycloDiagram::y_diagram(2, 3, -1);
    CHECK(multiply(multiply(e, yinv, sp).diagram, e, sp).coeff == LaurentPoly::gen(sp, "A_1"));
}

TEST_CASE("closure and trace of the identity") {
    auto sp = rc_space(2);
    auto a0 = LaurentPoly::gen(sp, "A_0");
    const auto one = LaurentPoly(1).in_space(sp);
    CHECK(trace_eps_c(CycloDiagram::identity(3, 2), sp) == one);
    auto c = closure(CycloDiagram::identity(2, 2), sp);
    CHECK(c.coeff == one);
    CHECK(c.diagram == CycloDiagram::identity(1, 2));
    CHECK(trace_eps_c(CycloDiagram::transposition(2, 2, 1), sp) == a0.inverse());
    CHECK(trace_eps_c(CycloDiagram::e_diagram(2, 2, 1), sp) == a0.inverse());
}

TEST_CASE("diagram multiplication is associative with monomial weights") {
    auto sp = rc_space(2);
    auto basis = enumerate_diagrams(2, 2);
    for (const auto& a : basis)
        for (const auto& b : basis) {
            auto ab = multiply(a, b, sp);
            CHECK(ab.coeff.size() == 1);
            for (const auto& c : basis) {
                auto l = multiply(ab.diagram, c, sp);
                auto bc = multiply(b, c, sp);
                auto r = multiply(a, bc.diagram, sp);
                CHECK(l.diagram == r.diagram);
                CHECK(ab.coeff * l.coeff == bc.coeff * r.coeff);
            }
        }
}

TEST_CASE("trace is symmetric") {
    auto sp = rc_space(3);
    auto basis = enumerate_diagrams(2, 3);
    std::mt19937 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 60; ++t) {
        const auto& a = basis[pick(rng)];
        const auto& b = basis[pick(rng)];
        auto ab = multiply(a, b, sp), ba = multiply(b, a, sp);
        CHECK(ab.coeff * trace_eps_c(ab.diagram, sp) == ba.coeff * trace_eps_c(ba.diagram, sp));
    }
}

TEST_CASE("diagram counts") {
    for (int n = 0; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            if (brauer_rank(n, k) > kDefaultMaxBasis) continue;
            CHECK(static_cast<long long>(enumerate_diagrams(n, k).size()) == brauer_rank(n, k));
        }
    CHECK_THROWS_AS(enumerate_diagrams(5, 4), Error);
}

TEST_CASE("canonical form is stable") {
    for (const auto& d : enumerate_diagrams(2, 3)) {
        auto again = canonicalize(2, 3, d.strands());
        CHECK(again == d);
        auto flipped = d.strands();
        for (auto& s : flipped) s = {s.b, s.a, -s.label};
        CHECK(canonicalize(2, 3, flipped) == d);
    }
}

TEST_CASE("invalid matchings") {
    using S = CycloDiagram::RawStrand;
    CHECK_THROWS_AS(CycloDiagram::from_strands(2, 2, {{0, 1, 0}, {1, 2, 0}}), Error);
    CHECK_THROWS_AS(CycloDiagram::from_strands(2, 2, {S{0, 1, 0}}), Error);
    CHECK_THROWS_AS(CycloDiagram::from_strands(2, 2, {{0, 0, 0}, {2, 3, 0}}), Error);
}
