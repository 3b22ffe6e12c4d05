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
#include "mmc/types.hpp"

namespace mmc {

enum class SatStatus { Sat, Unsat, BudgetExceeded };

struct SatResult {
    SatStatus status;
    // Total over the session's variables when status == Sat.
    Assignment witness;
};

// Incremental CDCL solver over a fixed formula plus added clauses. Added
// clauses only ever narrow the model set; queries are repeatable. A session
// is single-threaded; independent sessions over the same formula may run
// concurrently.
class SolverSession {
public:
    explicit SolverSession(const CnfFormula& f);

    // Fresh variable above every existing one; returns its index.
    Var add_aux_var();

    // Extends the variable space so that indices up to n are valid.
    void reserve_vars(Var n);

    // Conjoin a clause. An empty clause makes the session permanently UNSAT.
    void add_clause(const Clause& c);

    // Decide satisfiability under per-query assumptions. The budget is
    // checked at restart boundaries.
    SatResult solve(const Assignment& assumptions = {},
                    const Budget& budget = Budget::unlimited());

    int num_vars() const { return num_vars_; }
    bool permanently_unsat() const { return unsat_; }

private:
    // Literal codes: 2*v for v, 2*v+1 for its negation.
    static int enc(Var v, bool positive) { return 2 * v + (positive ? 0 : 1); }
    static int neg(int lit) { return lit ^ 1; }
    static Var lit_var(int lit) { return lit >> 1; }

    int lit_value(int lit) const;  // -1 undef, 0 false, 1 true
    void assign(int lit, int reason);
    int propagate();  // returns conflict clause id or -1
    void analyze(int confl, std::vector<int>& learnt, int& bt_level);
    void backtrack(int level);
    int attach_clause(std::vector<int> lits);
    void bump_var(Var v);
    void decay_activities();

    void heap_insert(Var v);
    Var heap_pop();
    void heap_sift_up(int pos);
    void heap_sift_down(int pos);
    bool heap_less(Var a, Var b) const;

    int num_vars_ = 0;
    bool unsat_ = false;

    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<int>> watches_;  // lit code -> clause ids

    std::vector<int8_t> value_;   // per var: -1 undef, 0 false, 1 true
    std::vector<int> reason_;     // per var: clause id or -1
    std::vector<int> level_;      // per var
    std::vector<int> trail_;      // assigned literal codes
    std::vector<int> trail_lim_;  // decision level boundaries
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    double activity_inc_ = 1.0;
    std::vector<int> heap_;      // max-heap of vars by activity
    std::vector<int> heap_pos_;  // var -> heap index, -1 if absent

    std::vector<uint8_t> seen_;
    uint64_t conflicts_ = 0;
};

}  // namespace mmc
