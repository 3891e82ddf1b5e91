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

#pragma once

#include <cyclobmw/cyclobmw.hpp>
#include <doctest.h>

#include <random>

namespace testing {

using namespace cyclobmw;

/// Random Laurent polynomial with small coefficients and exponents.
inline LaurentPoly random_poly(std::mt19937& rng, const GenSpacePtr& sp, int terms = 3) {
    std::uniform_int_distribution<int> coef(-4, 4), ex(-2, 2);
    LaurentPoly r = LaurentPoly(0).in_space(sp);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(sp->size());
        for (int& x : e) x = ex(rng);
        r += LaurentPoly::monomial(sp, e, coef(rng));
    }
    return r;
}

inline RationalEnv sample_rational_env(int k, int sign = 1) {
    std::vector<mpq_class> mid;
    for (int i = 1; i < k; ++i) mid.push_back(mpq_class(i + 1, 3));
    return make_admissible_env(k, mpq_class(2), mpq_class(3), mid, sign);
}

}  // namespace testing
