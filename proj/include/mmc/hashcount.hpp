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
#include "mmc/minmodel.hpp"
#include "mmc/types.hpp"

namespace mmc {

// A random parity constraint: satisfied iff the number of member variables
// assigned true is not congruent to the parity bit mod 2 (with parity 1 an
// even count satisfies, with parity 0 an odd count).
struct XorConstraint {
    std::vector<Var> variables;  // ascending
    bool parity;

    bool satisfied_by(const Assignment& a) const;
};

struct XorPool {
    std::vector<XorConstraint> constraints;  // Q^1 .. Q^(|X|-1)
    uint64_t seed;
};

// |x| - 1 constraints, every membership and parity bit an independent fair
// coin; reproducible from the seed.
XorPool sample_xors(const VarSet& x, uint64_t seed);

struct XorCnf {
    std::vector<Clause> clauses;
    int num_aux;
};

// Chunked CNF realization of a parity constraint. Fresh auxiliary variables
// starting at aux_base chain the chunk parities; projecting the encoding's
// models onto the constraint's variables yields exactly its satisfying set.
XorCnf encode_xor_cnf(const XorConstraint& q, Var aux_base, int chunk_width = 4);

// Whether some minimal model of f satisfies the first m constraints of the
// pool. Auxiliary encoding variables are excluded from minimization, and
// minimality is checked against bare f.
Verdict has_min_model_under_xors(const CnfFormula& f, const XorPool& pool, int m,
                                 const Budget& budget = Budget::unlimited());

struct HashCountConfig {
    double delta = 0.2;
    uint64_t seed = 0;
    Budget budget = Budget::unlimited();
    int chunk_width = 4;
};

// Galloping/bisection search for the largest m at which a minimal model
// survives m random XOR constraints; returns 2^(m - alpha) as a lower bound
// holding with probability at least 1 - delta, alpha = -log2(delta) + 1.
// Precondition: f has at least one minimal model (caller checks).
LowerBoundResult hashcount_lower_bound(const CnfFormula& f, const VarSet& x,
                                       const HashCountConfig& cfg);

// Padoa's method: v is functionally defined by s in f iff two copies of f
// agreeing on s cannot disagree on v.
Verdict padoa_definable(const CnfFormula& f, Var v, const VarSet& s,
                        const Budget& budget = Budget::unlimited());

// Greedy independent support: drop each variable definable from the
// remaining set, visiting variables in descending occurrence count. The
// result is always valid; the budget only limits how much gets dropped.
VarSet independent_support(const CnfFormula& f, const Budget& budget = Budget::unlimited());

}  // namespace mmc
