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

namespace {

template <Coefficient C>
Element<C> word_elem(BmwEngine<C>& eng, const LetterWord& lw, int n) {
    return eng.evaluate(lw, n);
}

}  // namespace

TEST_CASE("basis sizes") {
    const std::vector<std::pair<int, int>> nk{{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    const std::vector<std::size_t> expect{1, 3, 3, 12, 27, 15, 120};
    for (std::size_t t = 0; t < nk.size(); ++t) CHECK(enumerate_basis(nk[t].first, nk[t].second).size() == expect[t]);
    CHECK(enumerate_basis(4, 2).size() == 1680);
    CHECK_THROWS_AS(enumerate_basis(6, 3), Error);
}

TEST_CASE("small products in the basis") {
    BmwEngine<LaurentPoly> eng(make_Rc_env(3, 1));
    const auto& env = eng.env();
    const Letter E1{Gen::E, 1}, X1{Gen::X, 1}, Y{Gen::Y, 0};
    auto e = eng.unit(BmwEngine<LaurentPoly>::e_word(2, 1));
    CHECK(equal(word_elem(eng, {E1}, 2), e));
    CHECK(equal(eng.multiply(e, e), scaled(e, env.A(0))));
    for (int m = 0; m < 3; ++m) {
        LetterWord w{E1};
        for (int t = 0; t < m; ++t) w.push_back(Y);
        w.push_back(E1);
        CHECK(equal(word_elem(eng, w, 2), scaled(e, env.A(m))));
    }
    CHECK(equal(word_elem(eng, {X1, E1}, 2), scaled(e, env.lambda())));
    Element<LaurentPoly> xx = eng.identity(2);
    add_scaled(xx, word_elem(eng, {X1}, 2), env.delta());
    add_scaled(xx, e, LaurentPoly(-(env.delta() * env.lambda())));
    CHECK(equal(word_elem(eng, {X1, X1}, 2), xx));
    auto y = eng.identity(2);
    CHECK(equal(eng.multiply(y, e), e));
}

TEST_CASE("the order-k relation on one strand") {
    auto env = sample_rational_env(3);
    BmwEngine<mpq_class> eng(env);
    auto top = word_elem(eng, LetterWord(3, Letter{Gen::Y, 0}), 1);
    Element<mpq_class> expect;
    for (int l = 0; l < 3; ++l) add_scaled(expect, word_elem(eng, LetterWord(l, Letter{Gen::Y, 0}), 1), env.qi(l));
    CHECK(equal(top, expect));
}

TEST_CASE("defining relations hold on four strands") {
    BmwEngine<LaurentPoly> eng(make_Rc_env(1, 1));
    CHECK(verify_relations(eng, 4).empty());
    BmwEngine<mpq_class> q(sample_rational_env(1));
    CHECK(verify_relations(q, 4).empty());
}

TEST_CASE("relations fail for a corrupted environment") {
    auto env = sample_rational_env(2);
    BmwEngine<mpq_class> eng(env.with_A(0, mpq_class(env.A(0) + 1)));
    CHECK_FALSE(verify_relations(eng, 2).empty());
}

TEST_CASE("commutation formulas") {
    BmwEngine<LaurentPoly> rc(make_Rc_env(2, -1));
    BmwEngine<mpq_class> q(sample_rational_env(3));
    auto check_all = [](auto& eng, int n) {
        const int k = eng.k();
        const Formula signed_p[] = {Formula::Magic, Formula::M2,  Formula::M3,  Formula::M4, Formula::M5,
                                    Formula::M6,    Formula::M7,  Formula::M8,  Formula::M9, Formula::M12,
                                    Formula::M13,   Formula::Prop1c};
        for (int i = 1; i + 1 < n; ++i) {
            for (Formula f : signed_p)
                for (int p = 1; p <= k + 1; ++p) {
                    CAPTURE(static_cast<int>(f));
                    CAPTURE(p);
                    CHECK(check_identity(eng, eng.commutation_formula(f, i, p), n));
                }
            for (Formula f : {Formula::M10, Formula::M11})
                for (int p = 1; p <= k + 1; ++p) CHECK(check_identity(eng, eng.commutation_formula(f, i, p), n));
            for (Formula f : {Formula::Xi2, Formula::Exe, Formula::Prop1d})
                CHECK(check_identity(eng, eng.commutation_formula(f, i, 0), n));
            for (int j = 1; j <= n; ++j)
                if (j != i && j != i + 1) CHECK(check_identity(eng, eng.commutation_formula(Formula::Prop1b, i, j), n));
            for (int g = 0; g < 2; ++g) CHECK(check_identity(eng, eng.commutation_formula(Formula::XXp1, i, g), n));
            if (i + 2 < n)
                for (int g = 0; g < 3; ++g) CHECK(check_identity(eng, eng.commutation_formula(Formula::Ep2, i, g), n));
        }
    };
    check_all(rc, 4);
    check_all(q, 4);
    CHECK_THROWS_AS(rc.commutation_formula(Formula::M10, 1, 0), Error);
}

TEST_CASE("star is an involutive anti-automorphism") {
    std::mt19937 rng(21);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        BmwEngine<LaurentPoly> eng(make_Rc_env(k, 1));
        auto basis = enumerate_basis(n, k);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        for (const auto& b : basis) CHECK(equal(eng.star(eng.star(eng.unit(b))), eng.unit(b)));
        for (int t = 0; t < 40; ++t) {
            auto x = eng.unit(basis[pick(rng)]), y = eng.unit(basis[pick(rng)]);
            CHECK(equal(eng.star(eng.multiply(x, y)), eng.multiply(eng.star(y), eng.star(x))));
        }
    }
}

TEST_CASE("xi images and trace values") {
    auto env = make_Rc_env(3, 1);
    BmwEngine<LaurentPoly> eng(env);
    auto id = xi_to_brauer(env, NormalWord::identity(2));
    CHECK(id.diagram == CycloDiagram::identity(2, 3));
    auto e = xi_to_brauer(env, BmwEngine<LaurentPoly>::e_word(2, 1));
    CHECK(e.diagram == CycloDiagram::e_diagram(2, 3, 1));
    CHECK(e.coeff == env.one());
    auto y2 = xi_to_brauer(env, eng.evaluate(LetterWord(2, Letter{Gen::Y, 0}), 1));
    REQUIRE(y2.size() == 1);
    CHECK(y2.begin()->first == CycloDiagram::y_diagram(1, 3, 2));
    CHECK(trace_Rc(env, eng.identity(2)) == env.one());
    CHECK(trace_Rc(env, eng.unit(BmwEngine<LaurentPoly>::e_word(2, 1))) == env.A0_inv());
    CHECK_THROWS_AS(trace_Rc(make_omega_env(2), Element<LaurentPoly>{}), Error);
}
