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

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmc {

// Variables are 1-based, DIMACS convention.
using Var = int;
using VarSet = std::set<Var>;

// A literal, stored as its signed DIMACS code (never 0).
class Lit {
public:
    Lit(Var v, bool positive) : code_(positive ? v : -v) {
        if (v < 1) throw std::invalid_argument("variable index must be >= 1");
    }
    static Lit from_dimacs(int code) { return Lit(std::abs(code), code > 0); }

    Var var() const { return std::abs(code_); }
    bool positive() const { return code_ > 0; }
    Lit negated() const { return from_dimacs(-code_); }
    int to_dimacs() const { return code_; }

    auto operator<=>(const Lit&) const = default;

private:
    int code_;
};

// A disjunction of literals. Literals are kept sorted by variable and
// deduplicated; an empty clause represents falsum.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Lit> lits);

    bool empty() const { return lits_.empty(); }
    std::size_t size() const { return lits_.size(); }
    const std::vector<Lit>& literals() const { return lits_; }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    bool contains(Lit l) const;
    // True when some variable occurs in both polarities.
    bool tautological() const;
    VarSet vars() const;

    auto operator<=>(const Clause&) const = default;

private:
    std::vector<Lit> lits_;
};

// A partial mapping from variables to {0,1}. Doubles as a model, a blocking
// term, and a cut projection.
class Assignment {
public:
    Assignment() = default;

    void set(Var v, bool value) { bind_[v] = value; }
    bool binds(Var v) const { return bind_.count(v) != 0; }
    std::optional<bool> value(Var v) const {
        auto it = bind_.find(v);
        if (it == bind_.end()) return std::nullopt;
        return it->second;
    }
    // Value of a literal under this assignment, if its variable is bound.
    std::optional<bool> value(Lit l) const {
        auto v = value(l.var());
        if (!v) return std::nullopt;
        return l.positive() ? *v : !*v;
    }

    std::size_t size() const { return bind_.size(); }
    bool empty() const { return bind_.empty(); }
    const std::map<Var, bool>& bindings() const { return bind_; }

    VarSet vars() const;
    std::vector<Var> true_vars() const;

    Assignment restricted_to(const VarSet& x) const;  // projection onto x
    Assignment positive_part() const;                 // bindings with value 1
    // The clause falsified exactly by assignments that agree with this one
    // on all bound variables.
    Clause negation_clause() const;

    // total satisfies this assignment iff the projection onto vars() equals it.
    bool satisfied_by(const Assignment& total) const;

    // Pointwise order over a common variable set; both must be total over it.
    static bool leq(const Assignment& a, const Assignment& b, const VarSet& over);

    auto operator<=>(const Assignment&) const = default;

private:
    std::map<Var, bool> bind_;
};

// An immutable CNF formula. A formula containing an empty clause is falsum.
class CnfFormula {
public:
    CnfFormula(int num_vars, std::vector<Clause> clauses);
    static CnfFormula falsum(int num_vars);

    int num_vars() const { return num_vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    bool is_falsum() const;

    // Variables occurring in at least one clause.
    VarSet occurring_vars() const;

    // total must bind every variable the formula mentions.
    bool satisfied_by(const Assignment& total) const;

    auto operator<=>(const CnfFormula&) const = default;

private:
    int num_vars_;
    std::vector<Clause> clauses_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace mmc
