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

#include "mmc/minmodel.hpp"

#include <algorithm>
#include <bit>

namespace mmc {

namespace {

Assignment restrict_to_vars(const Assignment& w, int num_vars) {
    Assignment out;
    for (const auto& [v, val] : w.bindings()) {
        if (v > num_vars) break;
        out.set(v, val);
    }
    return out;
}

void require_total_model(const CnfFormula& f, const Assignment& model) {
    for (Var v = 1; v <= f.num_vars(); ++v)
        if (!model.binds(v))
            throw std::invalid_argument("assignment is not total over the formula");
    if (!f.satisfied_by(model))
        throw std::invalid_argument("assignment does not satisfy the formula");
}

}  // namespace

std::optional<Assignment> minimize_in_session(SolverSession& session, int scope,
                                              Assignment mu,
                                              const Assignment& base_assumptions,
                                              const VarSet& forced_positive,
                                              const Budget& budget) {
    for (;;) {
        std::vector<Lit> flip;
        Assignment assumptions = base_assumptions;
        for (const auto& [v, val] : mu.bindings()) {
            if (v > scope) break;
            if (!val)
                assumptions.set(v, false);
            else if (!forced_positive.count(v))
                flip.emplace_back(v, false);
        }
        if (flip.empty()) return mu;
        session.add_clause(Clause(std::move(flip)));
        SatResult r = session.solve(assumptions, budget);
        if (r.status == SatStatus::BudgetExceeded) return std::nullopt;
        if (r.status == SatStatus::Unsat) return mu;
        mu = restrict_to_vars(r.witness, scope);
    }
}

Verdict is_minimal(const CnfFormula& f, const Assignment& model, const Budget& budget) {
    require_total_model(f, model);
    std::vector<Lit> flip;
    Assignment zeros;
    for (const auto& [v, val] : model.bindings()) {
        if (v > f.num_vars()) break;
        if (val)
            flip.emplace_back(v, false);
        else
            zeros.set(v, false);
    }
    if (flip.empty()) return Verdict::Yes;  // nothing below the all-false model
    SolverSession session(f);
    session.add_clause(Clause(std::move(flip)));
    SatResult r = session.solve(zeros, budget);
    switch (r.status) {
        case SatStatus::Unsat: return Verdict::Yes;
        case SatStatus::Sat: return Verdict::No;
        default: return Verdict::Unknown;
    }
}

bool is_minimal(const CnfFormula& f, const Assignment& model) {
    return is_minimal(f, model, Budget::unlimited()) == Verdict::Yes;
}

Assignment minimize(const CnfFormula& f, const Assignment& model, const Assignment& forced) {
    require_total_model(f, model);
    if (!forced.satisfied_by(model))
        throw std::invalid_argument("model does not satisfy the forced assignment");
    SolverSession session(f);
    VarSet forced_positive;
    for (Var v : forced.positive_part().vars()) forced_positive.insert(v);
    auto out = minimize_in_session(session, f.num_vars(), model, forced, forced_positive,
                                   Budget::unlimited());
    return *out;  // unlimited budget: the descent always terminates
}

OracleResult find_minimal_model(const CnfFormula& f, const Budget& budget) {
    SolverSession session(f);
    SatResult r = session.solve({}, budget);
    if (r.status == SatStatus::Unsat) return {OracleStatus::None, {}};
    if (r.status == SatStatus::BudgetExceeded) return {OracleStatus::Budget, {}};
    auto sigma = minimize_in_session(session, f.num_vars(),
                                     restrict_to_vars(r.witness, f.num_vars()), {}, {},
                                     budget);
    if (!sigma) return {OracleStatus::Budget, {}};
    return {OracleStatus::Found, *sigma};
}

OracleResult blocked_min_model(const CnfFormula& f, const VarSet& cut,
                               const BlockingSet& blocked, const Budget& budget) {
    SolverSession session(f);
    for (const Assignment& tau : blocked) {
        if (tau.vars() != cut)
            throw std::invalid_argument("blocking set member does not bind exactly the cut");
        session.add_clause(tau.negation_clause());
    }
    for (;;) {
        SatResult r = session.solve({}, budget);
        if (r.status == SatStatus::Unsat) return {OracleStatus::None, {}};
        if (r.status == SatStatus::BudgetExceeded) return {OracleStatus::Budget, {}};
        auto sigma = minimize_in_session(session, f.num_vars(),
                                         restrict_to_vars(r.witness, f.num_vars()), {}, {},
                                         budget);
        if (!sigma) return {OracleStatus::Budget, {}};
        Verdict v = is_minimal(f, *sigma, budget);
        if (v == Verdict::Unknown) return {OracleStatus::Budget, {}};
        if (v == Verdict::Yes) return {OracleStatus::Found, *sigma};
        // Not minimal for bare f: every model covering its true-set is
        // non-minimal too, so the whole cone can go.
        session.add_clause(sigma->positive_part().negation_clause());
    }
}

ProjEnumOutput proj_enum(const CnfFormula& f, const Assignment& tau, const VarSet& x,
                         uint64_t cap, const Budget& budget) {
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    for (Var v : x)
        if (v > f.num_vars())
            throw std::invalid_argument("projection variable outside the formula");

    SolverSession session(f);
    VarSet tau_positive;
    for (Var v : tau.positive_part().vars()) tau_positive.insert(v);

    ProjEnumOutput out{{}, false};
    for (;;) {
        SatResult r = session.solve(tau, budget);
        if (r.status == SatStatus::Unsat) return out;
        if (r.status == SatStatus::BudgetExceeded) { out.truncated = true; return out; }
        auto sigma = minimize_in_session(session, f.num_vars(),
                                         restrict_to_vars(r.witness, f.num_vars()), tau,
                                         tau_positive, budget);
        if (!sigma) { out.truncated = true; return out; }
        Verdict v = is_minimal(f, *sigma, budget);
        if (v == Verdict::Unknown) { out.truncated = true; return out; }
        if (v == Verdict::No) {
            session.add_clause(sigma->negation_clause());
            continue;
        }
        if (out.projections.size() == cap) { out.truncated = true; return out; }
        Assignment proj = sigma->restricted_to(x);
        out.projections.push_back(proj);
        session.add_clause(proj.negation_clause());
    }
}

std::vector<Assignment> brute_force_mm(const CnfFormula& f) {
    if (f.is_falsum()) return {};
    VarSet occurring = f.occurring_vars();
    std::vector<Var> occ(occurring.begin(), occurring.end());
    if (occ.size() > 22)
        throw std::invalid_argument("brute-force oracle refuses formulas with more than "
                                    "22 occurring variables");

    std::vector<int> pos(occ.size() + 1);  // var -> bit index + 1
    std::vector<std::pair<uint32_t, uint32_t>> masks;  // (positive, negative) per clause
    std::vector<int> var_bit(f.num_vars() + 1, -1);
    for (std::size_t i = 0; i < occ.size(); ++i) var_bit[occ[i]] = static_cast<int>(i);
    for (const Clause& c : f.clauses()) {
        uint32_t p = 0, n = 0;
        for (Lit l : c) {
            uint32_t bit = 1u << var_bit[l.var()];
            (l.positive() ? p : n) |= bit;
        }
        masks.emplace_back(p, n);
    }

    std::vector<uint32_t> models;
    uint32_t limit_bits = static_cast<uint32_t>(occ.size());
    uint64_t limit = 1ull << limit_bits;
    for (uint64_t m64 = 0; m64 < limit; ++m64) {
        uint32_t m = static_cast<uint32_t>(m64);
        bool ok = true;
        for (const auto& [p, n] : masks)
            if ((m & p) == 0 && (~m & n) == 0) { ok = false; break; }
        if (ok) models.push_back(m);
    }
    std::sort(models.begin(), models.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });

    // In popcount order, a model is minimal iff none of the minimal models
    // found so far sits strictly below it.
    std::vector<uint32_t> minimal;
    for (uint32_t m : models) {
        bool is_min = true;
        for (uint32_t k : minimal)
            if ((k & m) == k) { is_min = false; break; }
        if (is_min) minimal.push_back(m);
    }

    std::vector<Assignment> out;
    out.reserve(minimal.size());
    std::sort(minimal.begin(), minimal.end());
    for (uint32_t m : minimal) {
        Assignment a;
        for (Var v = 1; v <= f.num_vars(); ++v) a.set(v, false);
        for (std::size_t i = 0; i < occ.size(); ++i)
            if (m & (1u << i)) a.set(occ[i], true);
        out.push_back(std::move(a));
    }
    return out;
}

bool has_justification_witness(const CnfFormula& f, const Assignment& model, Var v) {
    for (const Clause& c : f.clauses()) {
        if (!c.contains(Lit(v, true))) continue;
        bool others_false = true;
        for (Lit l : c) {
            if (l.var() == v) continue;
            if (model.value(l).value_or(false)) { others_false = false; break; }
        }
        if (others_false) return true;
    }
    return false;
}

bool all_true_vars_justified(const CnfFormula& f, const Assignment& model) {
    for (Var v : model.true_vars())
        if (!has_justification_witness(f, model, v)) return false;
    return true;
}

}  // namespace mmc
