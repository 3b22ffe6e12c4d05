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

#include "mmc/projenum.hpp"

#include <chrono>

#include "mmc/formula.hpp"
#include "mmc/minmodel.hpp"

namespace mmc {

LowerBoundResult proj_enum_count(const CnfFormula& f, const VarSet& cut,
                                 const ProjEnumConfig& cfg,
                                 std::vector<PassRecord>* trace) {
    auto start = std::chrono::steady_clock::now();
    auto finish = [&](LowerBoundResult r) {
        r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        return r;
    };

    if (f.is_falsum())
        return finish(LowerBoundResult::from_count(0, true, Method::ProjEnum));
    for (Var v : cut)
        if (v < 1 || v > f.num_vars())
            throw std::invalid_argument("cut variable outside the formula");

    double cnt = 0;
    bool exact = true;
    BlockingSet blocked;
    for (;;) {
        OracleResult found = blocked_min_model(f, cut, blocked, cfg.budget);
        if (found.status == OracleStatus::Budget) { exact = false; break; }
        if (found.status == OracleStatus::None) break;

        Assignment tau = found.model.restricted_to(cut);
        CnfFormula conditioned = condition(f, justified_restriction(tau));
        std::vector<VarSet> comps = components(conditioned);

        double d = 1;
        bool pass_truncated = false;
        if (comps.size() == 1) {
            // A single component gives no decomposition to exploit: fall back
            // to plain enumeration of the class, projected onto nothing less
            // than the full variable set.
            ProjEnumOutput out = proj_enum(f, tau, f.occurring_vars(), cfg.cap, cfg.budget);
            d = static_cast<double>(out.projections.size());
            pass_truncated = out.truncated;
        } else {
            for (const VarSet& comp : comps) {
                ProjEnumOutput out = proj_enum(f, tau, comp, cfg.cap, cfg.budget);
                d *= static_cast<double>(out.projections.size());
                pass_truncated |= out.truncated;
            }
        }
        // Variables eliminated by the conditioning and absent from every
        // component are fixed in every member of the class: factor 1.

        if (pass_truncated) exact = false;
        cnt += d;
        if (trace) trace->push_back({tau, d});
        blocked.push_back(tau);
        if (cfg.budget.expired()) { exact = false; break; }
    }
    return finish(LowerBoundResult::from_count(cnt, exact, Method::ProjEnum));
}

}  // namespace mmc
