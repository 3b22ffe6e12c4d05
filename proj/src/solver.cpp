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

#include "mmc/solver.hpp"

#include <algorithm>
#include <cassert>

namespace mmc {

namespace {

// Luby restart sequence: 1 1 2 1 1 2 4 ...
uint64_t luby(uint64_t i) {
    uint64_t k = 1;
    while ((1ull << (k + 1)) - 1 <= i + 1) ++k;
    while (i + 1 != (1ull << k) - 1) {
        i = i - (1ull << (k - 1)) + 1;
        k = 1;
        while ((1ull << (k + 1)) - 1 <= i + 1) ++k;
    }
    return 1ull << (k - 1);
}

constexpr uint64_t kRestartBase = 100;

}  // namespace

SolverSession::SolverSession(const CnfFormula& f) {
    reserve_vars(f.num_vars());
    for (const Clause& c : f.clauses()) add_clause(c);
}

void SolverSession::reserve_vars(Var n) {
    if (n <= num_vars_) return;
    num_vars_ = n;
    value_.resize(num_vars_ + 1, -1);
    reason_.resize(num_vars_ + 1, -1);
    level_.resize(num_vars_ + 1, 0);
    activity_.resize(num_vars_ + 1, 0.0);
    seen_.resize(num_vars_ + 1, 0);
    heap_pos_.resize(num_vars_ + 1, -1);
    watches_.resize(2 * (num_vars_ + 1));
    for (Var v = 1; v <= num_vars_; ++v)
        if (heap_pos_[v] == -1 && value_[v] == -1) heap_insert(v);
}

Var SolverSession::add_aux_var() {
    reserve_vars(num_vars_ + 1);
    return num_vars_;
}

int SolverSession::lit_value(int lit) const {
    int8_t v = value_[lit_var(lit)];
    if (v < 0) return -1;
    return v ^ (lit & 1);
}

void SolverSession::assign(int lit, int reason) {
    Var v = lit_var(lit);
    assert(value_[v] == -1);
    value_[v] = static_cast<int8_t>(1 ^ (lit & 1));
    reason_[v] = reason;
    level_[v] = static_cast<int>(trail_lim_.size());
    trail_.push_back(lit);
}

void SolverSession::add_clause(const Clause& c) {
    if (unsat_) return;
    assert(trail_lim_.empty());
    std::vector<int> lits;
    lits.reserve(c.size());
    for (Lit l : c) {
        if (l.var() > num_vars_)
            throw std::invalid_argument("clause literal outside session variables");
        int code = enc(l.var(), l.positive());
        int val = lit_value(code);
        if (val == 1) return;  // satisfied at root
        if (val == 0) continue;
        lits.push_back(code);
    }
    if (lits.empty()) {
        unsat_ = true;
        return;
    }
    if (lits.size() == 1) {
        assign(lits[0], -1);
        if (propagate() != -1) unsat_ = true;
        return;
    }
    attach_clause(std::move(lits));
}

int SolverSession::attach_clause(std::vector<int> lits) {
    int id = static_cast<int>(clauses_.size());
    watches_[lits[0]].push_back(id);
    watches_[lits[1]].push_back(id);
    clauses_.push_back(std::move(lits));
    return id;
}

int SolverSession::propagate() {
    while (qhead_ < trail_.size()) {
        int p = trail_[qhead_++];
        int false_lit = neg(p);
        auto& ws = watches_[false_lit];
        std::size_t keep = 0;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            int cid = ws[i];
            auto& c = clauses_[cid];
            if (c[0] == false_lit) std::swap(c[0], c[1]);
            if (lit_value(c[0]) == 1) {
                ws[keep++] = cid;
                continue;
            }
            bool rewatched = false;
            for (std::size_t k = 2; k < c.size(); ++k) {
                if (lit_value(c[k]) != 0) {
                    std::swap(c[1], c[k]);
                    watches_[c[1]].push_back(cid);
                    rewatched = true;
                    break;
                }
            }
            if (rewatched) continue;
            ws[keep++] = cid;
            if (lit_value(c[0]) == 0) {
                for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
                ws.resize(keep);
                qhead_ = trail_.size();
                return cid;
            }
            assign(c[0], cid);
        }
        ws.resize(keep);
    }
    return -1;
}

void SolverSession::analyze(int confl, std::vector<int>& learnt, int& bt_level) {
    learnt.assign(1, 0);  // slot 0 reserved for the asserting literal
    int counter = 0;
    int p = -1;
    std::size_t index = trail_.size();
    int cur_level = static_cast<int>(trail_lim_.size());

    for (;;) {
        const auto& c = clauses_[confl];
        for (std::size_t i = (p == -1 ? 0 : 1); i < c.size(); ++i) {
            int q = c[i];
            Var v = lit_var(q);
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            bump_var(v);
            if (level_[v] == cur_level)
                ++counter;
            else
                learnt.push_back(q);
        }
        while (!seen_[lit_var(trail_[index - 1])]) --index;
        --index;
        p = trail_[index];
        seen_[lit_var(p)] = 0;
        if (--counter == 0) break;
        confl = reason_[lit_var(p)];
        assert(confl != -1);
        // Resolution on p: the reason clause has p first.
        assert(clauses_[confl][0] == p);
    }
    learnt[0] = neg(p);

    bt_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[lit_var(learnt[i])] > level_[lit_var(learnt[max_i])]) max_i = i;
        std::swap(learnt[1], learnt[max_i]);
        bt_level = level_[lit_var(learnt[1])];
    }
    for (std::size_t i = 1; i < learnt.size(); ++i) seen_[lit_var(learnt[i])] = 0;
}

void SolverSession::backtrack(int level) {
    if (static_cast<int>(trail_lim_.size()) <= level) return;
    std::size_t bound = trail_lim_[level];
    for (std::size_t i = trail_.size(); i > bound; --i) {
        Var v = lit_var(trail_[i - 1]);
        value_[v] = -1;
        reason_[v] = -1;
        if (heap_pos_[v] == -1) heap_insert(v);
    }
    trail_.resize(bound);
    trail_lim_.resize(level);
    qhead_ = bound;
}

void SolverSession::bump_var(Var v) {
    activity_[v] += activity_inc_;
    if (activity_[v] > 1e100) {
        for (Var u = 1; u <= num_vars_; ++u) activity_[u] *= 1e-100;
        activity_inc_ *= 1e-100;
    }
    if (heap_pos_[v] != -1) heap_sift_up(heap_pos_[v]);
}

void SolverSession::decay_activities() { activity_inc_ /= 0.95; }

bool SolverSession::heap_less(Var a, Var b) const {
    if (activity_[a] != activity_[b]) return activity_[a] < activity_[b];
    return a > b;  // prefer the smaller index on ties
}

void SolverSession::heap_insert(Var v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_sift_up(heap_pos_[v]);
}

void SolverSession::heap_sift_up(int pos) {
    while (pos > 0) {
        int parent = (pos - 1) / 2;
        if (!heap_less(heap_[parent], heap_[pos])) break;
        std::swap(heap_pos_[heap_[parent]], heap_pos_[heap_[pos]]);
        std::swap(heap_[parent], heap_[pos]);
        pos = parent;
    }
}

void SolverSession::heap_sift_down(int pos) {
    int n = static_cast<int>(heap_.size());
    for (;;) {
        int l = 2 * pos + 1, r = 2 * pos + 2, largest = pos;
        if (l < n && heap_less(heap_[largest], heap_[l])) largest = l;
        if (r < n && heap_less(heap_[largest], heap_[r])) largest = r;
        if (largest == pos) break;
        std::swap(heap_pos_[heap_[largest]], heap_pos_[heap_[pos]]);
        std::swap(heap_[largest], heap_[pos]);
        pos = largest;
    }
}

Var SolverSession::heap_pop() {
    Var v = heap_[0];
    heap_pos_[v] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_pos_[heap_[0]] = 0;
        heap_sift_down(0);
    }
    return v;
}

SatResult SolverSession::solve(const Assignment& assumptions, const Budget& budget) {
    backtrack(0);
    if (unsat_) return {SatStatus::Unsat, {}};

    std::vector<int> assumption_lits;
    for (const auto& [v, val] : assumptions.bindings()) {
        if (v < 1 || v > num_vars_)
            throw std::invalid_argument("assumption outside session variables");
        assumption_lits.push_back(enc(v, val));
    }

    uint64_t restart_count = 0;
    uint64_t conflict_limit = kRestartBase * luby(restart_count);
    uint64_t conflicts_here = 0;
    std::vector<int> learnt;

    for (;;) {
        int confl = propagate();
        if (confl != -1) {
            ++conflicts_;
            ++conflicts_here;
            if (trail_lim_.empty()) {
                unsat_ = true;  // conflict independent of assumptions
                return {SatStatus::Unsat, {}};
            }
            int bt_level;
            analyze(confl, learnt, bt_level);
            backtrack(bt_level);
            if (learnt.size() == 1) {
                assign(learnt[0], -1);
            } else {
                int id = attach_clause(learnt);
                assign(learnt[0], id);
            }
            decay_activities();
            if (conflicts_here >= conflict_limit) {
                if (budget.expired()) return {SatStatus::BudgetExceeded, {}};
                ++restart_count;
                conflict_limit += kRestartBase * luby(restart_count);
                backtrack(0);
            }
            continue;
        }

        // Pick the next assumption, then fall back to activity order.
        int decision = -1;
        bool assumption_conflict = false;
        for (int al : assumption_lits) {
            int val = lit_value(al);
            if (val == 0) { assumption_conflict = true; break; }
            if (val == -1) { decision = al; break; }
        }
        if (assumption_conflict) {
            backtrack(0);
            return {SatStatus::Unsat, {}};
        }
        if (decision == -1) {
            while (!heap_.empty() && value_[heap_[0]] != -1) heap_pop();
            if (heap_.empty()) {
                Assignment witness;
                for (Var v = 1; v <= num_vars_; ++v) witness.set(v, value_[v] == 1);
                backtrack(0);
                return {SatStatus::Sat, witness};
            }
            decision = enc(heap_pop(), false);  // decide false first
        }
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        assign(decision, -1);
    }
}

}  // namespace mmc
