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

#include "mmc/hashcount.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <random>

namespace mmc {

namespace {

// Portable fair coin: the top bit of a mt19937_64 draw.
bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

// Clauses forcing the XOR-sum of vars to equal target: one clause per sign
// pattern whose count of negations disagrees with target mod 2.
void emit_parity_clauses(const std::vector<Var>& vars, int target,
                         std::vector<Clause>& out) {
    std::size_t n = vars.size();
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if ((std::popcount(mask) & 1) == target) continue;
        std::vector<Lit> lits;
        lits.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            lits.emplace_back(vars[i], (mask & (1ull << i)) == 0);
        out.emplace_back(std::move(lits));
    }
}

}  // namespace

bool XorConstraint::satisfied_by(const Assignment& a) const {
    int count = 0;
    for (Var v : variables)
        if (a.value(v).value_or(false)) ++count;
    return (count % 2) != static_cast<int>(parity);
}

XorPool sample_xors(const VarSet& x, uint64_t seed) {
    if (x.empty()) throw std::invalid_argument("sample_xors needs at least one variable");
    XorPool pool{{}, seed};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        XorConstraint q;
        for (Var v : x)
            if (coin(rng)) q.variables.push_back(v);
        q.parity = coin(rng);
        pool.constraints.push_back(std::move(q));
    }
    return pool;
}

XorCnf encode_xor_cnf(const XorConstraint& q, Var aux_base, int chunk_width) {
    if (chunk_width < 2) throw std::invalid_argument("chunk width must be at least 2");
    XorCnf enc{{}, 0};
    int target = q.parity ? 0 : 1;  // required XOR-sum of the variables

    std::vector<Var> pending(q.variables.begin(), q.variables.end());
    if (pending.empty()) {
        if (target == 1) enc.clauses.emplace_back();  // unsatisfiable constraint
        return enc;
    }
    while (pending.size() > static_cast<std::size_t>(chunk_width)) {
        std::vector<Var> chunk(pending.begin(), pending.begin() + (chunk_width - 1));
        Var aux = aux_base + enc.num_aux++;
        chunk.push_back(aux);
        emit_parity_clauses(chunk, 0, enc.clauses);  // aux = XOR of the chunk
        pending.erase(pending.begin(), pending.begin() + (chunk_width - 1));
        pending.insert(pending.begin(), aux);
    }
    emit_parity_clauses(pending, target, enc.clauses);
    return enc;
}

Verdict has_min_model_under_xors(const CnfFormula& f, const XorPool& pool, int m,
                                 const Budget& budget) {
    if (m < 0 || m > static_cast<int>(pool.constraints.size()))
        throw std::invalid_argument("constraint prefix length out of range");
    if (m == 0) {
        SolverSession session(f);
        switch (session.solve({}, budget).status) {
            case SatStatus::Sat: return Verdict::Yes;
            case SatStatus::Unsat: return Verdict::No;
            default: return Verdict::Unknown;
        }
    }

    SolverSession session(f);
    for (int i = 0; i < m; ++i) {
        XorCnf enc = encode_xor_cnf(pool.constraints[i], session.num_vars() + 1);
        session.reserve_vars(session.num_vars() + enc.num_aux);
        for (const Clause& c : enc.clauses) session.add_clause(c);
    }

    for (;;) {
        SatResult r = session.solve({}, budget);
        if (r.status == SatStatus::Unsat) return Verdict::No;
        if (r.status == SatStatus::BudgetExceeded) return Verdict::Unknown;
        Assignment mu;
        for (const auto& [v, val] : r.witness.bindings()) {
            if (v > f.num_vars()) break;
            mu.set(v, val);
        }
        auto sigma = minimize_in_session(session, f.num_vars(), mu, {}, {}, budget);
        if (!sigma) return Verdict::Unknown;
        Verdict v = is_minimal(f, *sigma, budget);
        if (v == Verdict::Unknown) return Verdict::Unknown;
        if (v == Verdict::Yes) return Verdict::Yes;
        session.add_clause(sigma->negation_clause());
    }
}

LowerBoundResult hashcount_lower_bound(const CnfFormula& f, const VarSet& x,
                                       const HashCountConfig& cfg) {
    if (cfg.delta <= 0 || cfg.delta >= 1)
        throw std::invalid_argument("delta must lie in (0,1)");
    auto start = std::chrono::steady_clock::now();
    const double alpha = -std::log2(cfg.delta) + 1;
    auto finish = [&](int m_star) {
        LowerBoundResult r = LowerBoundResult::from_log2(m_star - alpha, 1 - cfg.delta,
                                                         Method::HashCount);
        r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        return r;
    };

    const int n = static_cast<int>(x.size());
    if (n <= 1) return finish(0);  // no constraints exist

    XorPool pool = sample_xors(x, cfg.seed);
    std::vector<int8_t> has(n + 1, -1);
    has[0] = 1;
    has[n] = 0;
    int lo = 0, hi = n, m = 1;
    int m_hat = -1;

    for (;;) {
        if (cfg.budget.expired()) return finish(std::max(m_hat, 0));
        Verdict verdict;
        if (has[m] != -1) {
            verdict = has[m] ? Verdict::Yes : Verdict::No;
        } else {
            Budget query_budget =
                cfg.budget.capped_at(std::max(cfg.budget.remaining_s() / 4, 10.0));
            verdict = has_min_model_under_xors(f, pool, m, query_budget);
        }
        if (verdict == Verdict::Unknown) return finish(std::max(m_hat, 0));
        if (verdict == Verdict::Yes) {
            m_hat = std::max(m_hat, m);
            if (has[m + 1] == 0) return finish(m);
            for (int i = 1; i <= m; ++i) has[i] = 1;
            lo = m;
            if (2 * m < n)
                m = 2 * m;
            else
                m = (hi + m) / 2;
        } else {
            if (has[m - 1] == 1) return finish(m - 1);
            for (int i = m; i <= n - 1; ++i) has[i] = 0;
            hi = m;
            m = (lo + m) / 2;
        }
    }
}

Verdict padoa_definable(const CnfFormula& f, Var v, const VarSet& s, const Budget& budget) {
    if (s.count(v)) throw std::invalid_argument("variable must not belong to the base set");
    if (v < 1 || v > f.num_vars())
        throw std::invalid_argument("variable outside the formula");

    const int n = f.num_vars();
    SolverSession session(f);  // original copy
    session.reserve_vars(2 * n);
    for (const Clause& c : f.clauses()) {  // primed copy
        std::vector<Lit> shifted;
        shifted.reserve(c.size());
        for (Lit l : c) shifted.emplace_back(l.var() + n, l.positive());
        session.add_clause(Clause(std::move(shifted)));
    }
    for (Var sv : s) {  // agree on the base set
        session.add_clause(Clause({Lit(sv, false), Lit(sv + n, true)}));
        session.add_clause(Clause({Lit(sv, true), Lit(sv + n, false)}));
    }
    Assignment disagree;
    disagree.set(v, true);
    Assignment assumptions = disagree;
    assumptions.set(v + n, false);

    switch (session.solve(assumptions, budget).status) {
        case SatStatus::Unsat: return Verdict::Yes;
        case SatStatus::Sat: return Verdict::No;
        default: return Verdict::Unknown;
    }
}

VarSet independent_support(const CnfFormula& f, const Budget& budget) {
    VarSet support;
    for (Var v = 1; v <= f.num_vars(); ++v) support.insert(v);
    if (f.clauses().empty()) return support;

    std::map<Var, int> occurrences;
    for (const Clause& c : f.clauses())
        for (Lit l : c) ++occurrences[l.var()];
    std::vector<Var> order(support.begin(), support.end());
    std::sort(order.begin(), order.end(), [&](Var a, Var b) {
        int oa = occurrences.count(a) ? occurrences.at(a) : 0;
        int ob = occurrences.count(b) ? occurrences.at(b) : 0;
        if (oa != ob) return oa > ob;
        return a < b;
    });

    for (Var v : order) {
        if (budget.expired()) break;
        VarSet rest = support;
        rest.erase(v);
        if (padoa_definable(f, v, rest, budget) == Verdict::Yes) support.erase(v);
    }
    return support;
}

}  // namespace mmc
