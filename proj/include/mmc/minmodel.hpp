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
#include <optional>
#include <vector>

#include "mmc/budget.hpp"
#include "mmc/solver.hpp"
#include "mmc/types.hpp"

namespace mmc {

enum class Verdict { Yes, No, Unknown };

enum class OracleStatus { Found, None, Budget };

struct OracleResult {
    OracleStatus status;
    Assignment model;  // total over the formula's variables when Found
};

// Assignments all binding exactly the same variable set (the cut);
// members are excluded from blocked searches.
using BlockingSet = std::vector<Assignment>;

// True iff no model of f is strictly smaller than model. Decided by a single
// satisfiability query. Throws if model is not a total model of f.
bool is_minimal(const CnfFormula& f, const Assignment& model);
Verdict is_minimal(const CnfFormula& f, const Assignment& model, const Budget& budget);

// Iterative SAT descent: returns sigma <= model satisfying f and forced such
// that no model of f-and-forced is strictly smaller. Each step strictly
// shrinks the true-set, so the loop terminates.
Assignment minimize(const CnfFormula& f, const Assignment& model, const Assignment& forced);

// A member of MM(f), or None iff f is unsatisfiable.
OracleResult find_minimal_model(const CnfFormula& f,
                                const Budget& budget = Budget::unlimited());

// A member of MM(f) whose projection onto the cut is not in blocked, or None
// if every minimal model is blocked. Candidates that minimize under the
// blocking constraints but fail the minimality check against bare f are
// excluded by total-model blocking and the search retried.
OracleResult blocked_min_model(const CnfFormula& f, const VarSet& cut,
                               const BlockingSet& blocked,
                               const Budget& budget = Budget::unlimited());

struct ProjEnumOutput {
    std::vector<Assignment> projections;  // distinct members of MM(f)|x under tau
    bool truncated;  // true when the cap or the budget cut enumeration short
};

// Enumerates { sigma|x : sigma in MM(f), sigma satisfies tau }, stopping
// after cap distinct projections. tau's literals are treated as assumptions
// during search; every candidate is re-verified minimal against bare f.
ProjEnumOutput proj_enum(const CnfFormula& f, const Assignment& tau, const VarSet& x,
                         uint64_t cap, const Budget& budget = Budget::unlimited());

// Exact MM(f) by exhaustive enumeration; refuses formulas with more than 22
// occurring variables. Independent of the SAT path.
std::vector<Assignment> brute_force_mm(const CnfFormula& f);

// Descends from mu to a model with no strictly smaller model subject to the
// session's clauses and base assumptions. Only variables up to scope take
// part; forced_positive variables may not flip. The descent clauses stay in
// the session: they exclude only supersets of intermediate models, none of
// which can be a minimal model other than the result itself. Returns nullopt
// on budget exhaustion.
std::optional<Assignment> minimize_in_session(SolverSession& session, int scope,
                                              Assignment mu,
                                              const Assignment& base_assumptions,
                                              const VarSet& forced_positive,
                                              const Budget& budget);

// Every true variable of a minimal model has a witness clause that flipping
// the variable to false would falsify.
bool has_justification_witness(const CnfFormula& f, const Assignment& model, Var v);
bool all_true_vars_justified(const CnfFormula& f, const Assignment& model);

}  // namespace mmc
