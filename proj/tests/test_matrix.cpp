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

TEST_CASE("fraction-free determinant matches cofactor expansion") {
    std::mt19937 rng(3);
    auto sp = rc_space(2);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        Matrix<LaurentPoly> m(n, n, LaurentPoly(0).in_space(sp));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, sp, 2);
        CHECK(det_fraction_free(m) == det_cofactor(m));
    }
}

TEST_CASE("singular matrices") {
    auto sp = rc_space(2);
    auto a = LaurentPoly::gen(sp, "A_1");
    Matrix<LaurentPoly> m(2, 2, a);
    CHECK(det_fraction_free(m).is_zero());
    CHECK(nonzero_certificate(m, 4, 1000000007ULL, 5) == Certificate::Inconclusive);
    CHECK_THROWS_AS(det_fraction_free(Matrix<LaurentPoly>(2, 3, a)), Error);
}

TEST_CASE("certificate on a nonsingular Gram matrix") {
    auto g = gram_matrix(enumerate_diagrams(2, 2), rc_space(2));
    CHECK(nonzero_certificate(g, 4, 2305843009213693951ULL, 7) == Certificate::CertifiedNonzero);
    CHECK_FALSE(det_fraction_free(g).is_zero());
}
