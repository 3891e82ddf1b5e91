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
 * @file cyclobmw.hpp
 * @brief Umbrella header for the library (everything except the command line).
 */

#pragma once

#include "acceptance.hpp"
#include "admissibility.hpp"
#include "bmw_core.hpp"
#include "brauer.hpp"
#include "env.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "rep_v.hpp"
#include "words.hpp"
