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

#include <iosfwd>
#include <string>
#include <vector>

#include "mmc/types.hpp"

namespace mmc {

// Reads a DIMACS CNF problem ("p cnf V C" header, 0-terminated clauses).
// Duplicate literals inside a clause are collapsed. Throws ParseError on a
// malformed header, an out-of-range literal, a missing terminator, or a
// tautological clause.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

// Unit propagation of a partial assignment: clauses satisfied by tau are
// dropped, literals falsified by tau are deleted, and literals contradicted
// by a unit clause already in the formula are deleted, to fixpoint. If an
// empty clause arises the result is falsum. The result mentions no variable
// of tau. The recursion does not preserve minimal models unless tau is
// justified (all-false); see justified_restriction.
CnfFormula condition(const CnfFormula& f, const Assignment& tau);

// Restriction of tau to its false bindings; an assignment of false is
// always justified under minimal-model semantics.
Assignment justified_restriction(const Assignment& tau);

// Connected components of the primal graph (variables adjacent iff they
// share a clause). Variables occurring in no clause are excluded. Ordered by
// ascending smallest member.
std::vector<VarSet> components(const CnfFormula& f);

// A vertex separator of the primal graph: conditioning on any full
// assignment over the returned set splits the formula into components each
// strictly smaller than the remainder (heuristic, no optimality claim).
// Returns the empty set when the formula is already disconnected.
// Precondition: f is not falsum.
VarSet compute_cut(const CnfFormula& f);

// Renders the formula as a disjunctive logic program, one rule per clause:
// positive literals form the head, negated atoms the body. Atoms are
// rendered "x<index>".
std::string dlp_export(const CnfFormula& f);

}  // namespace mmc
