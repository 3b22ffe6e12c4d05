/*
 *  Copyright (C) 2026  The mmcount authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <cstdint>

#include "mmc/budget.hpp"
#include "mmc/lower_bound.hpp"
#include "mmc/types.hpp"

namespace mmc {

struct MinLbConfig {
    double delta = 0.2;
    int cut_limit = 50;
    uint64_t cap = 1'000'000;
    uint64_t seed = 0;
    bool xor_over_all_vars = false;  // hash over every variable instead of the support
    Budget budget = Budget::unlimited();
};

// Hybrid dispatcher: exact 0 for unsatisfiable input; the decomposition
// counter when the heuristic cut is small (the cut size proxies
// decomposability); otherwise the hashing bound over an independent support.
// The returned bound is below the true count with probability at least
// 1 - delta (exactly, for the deterministic branches).
LowerBoundResult minlb(const CnfFormula& f, const MinLbConfig& cfg);

}  // namespace mmc
