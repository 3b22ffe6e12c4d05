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

#include "mmc/minlb.hpp"

#include <chrono>

#include "mmc/formula.hpp"
#include "mmc/hashcount.hpp"
#include "mmc/projenum.hpp"
#include "mmc/solver.hpp"

namespace mmc {

LowerBoundResult minlb(const CnfFormula& f, const MinLbConfig& cfg) {
    if (cfg.delta <= 0 || cfg.delta >= 1)
        throw std::invalid_argument("delta must lie in (0,1)");
    auto start = std::chrono::steady_clock::now();
    auto stamp = [&](LowerBoundResult r) {
        r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        return r;
    };

    // A formula has a minimal model iff it has a model.
    if (f.is_falsum())
        return stamp(LowerBoundResult::from_count(0, true, Method::MinLB));
    {
        SolverSession session(f);
        SatResult r = session.solve({}, cfg.budget);
        if (r.status == SatStatus::Unsat)
            return stamp(LowerBoundResult::from_count(0, true, Method::MinLB));
        if (r.status == SatStatus::BudgetExceeded) {
            LowerBoundResult out = LowerBoundResult::from_count(0, false, Method::MinLB);
            return stamp(out);
        }
    }

    VarSet cut = compute_cut(f);
    if (static_cast<int>(cut.size()) <= cfg.cut_limit) {
        ProjEnumConfig pe{cfg.cap, cfg.budget};
        return stamp(proj_enum_count(f, cut, pe));
    }

    VarSet x;
    if (cfg.xor_over_all_vars) {
        for (Var v = 1; v <= f.num_vars(); ++v) x.insert(v);
    } else {
        x = independent_support(f, cfg.budget);
    }
    HashCountConfig hc;
    hc.delta = cfg.delta;
    hc.seed = cfg.seed;
    hc.budget = cfg.budget;
    return stamp(hashcount_lower_bound(f, x, hc));
}

}  // namespace mmc
