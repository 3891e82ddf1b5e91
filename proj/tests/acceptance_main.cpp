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

// Prints one PASS/FAIL line per acceptance criterion; an optional argument selects one.

#include <cyclobmw/acceptance.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    const bool ok = cyclobmw::acceptance::run_all([&](const cyclobmw::acceptance::Outcome& o) {
        const double s = std::chrono::duration<double>(clock::now() - t0).count();
        std::printf("criterion %d: %s  %s  [%.1fs]\n", o.id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), s);
        std::fflush(stdout);
        t0 = clock::now();
    }, only);
    return ok ? 0 : 1;
}
