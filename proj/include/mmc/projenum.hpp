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
#include <vector>

#include "mmc/budget.hpp"
#include "mmc/lower_bound.hpp"
#include "mmc/types.hpp"

namespace mmc {

struct ProjEnumConfig {
    uint64_t cap = 1'000'000;  // per projected-enumeration call
    Budget budget = Budget::unlimited();
};

// One pass of the counting loop: the cut projection processed and the
// product of its per-component projected counts.
struct PassRecord {
    Assignment cut_assignment;
    double factor;
};

// Counts minimal models by cut conditioning: repeatedly pick an unblocked
// minimal model, condition on the justified restriction of its cut
// projection, and multiply projected enumeration counts across the resulting
// components. Exact unless a projected enumeration truncated or the budget
// ran out, in which case the accumulated count is a valid lower bound.
LowerBoundResult proj_enum_count(const CnfFormula& f, const VarSet& cut,
                                 const ProjEnumConfig& cfg,
                                 std::vector<PassRecord>* trace = nullptr);

}  // namespace mmc
