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

#include "mmc/types.hpp"

#include <algorithm>

namespace mmc {

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end(), [](Lit a, Lit b) {
        if (a.var() != b.var()) return a.var() < b.var();
        return a.positive() < b.positive();
    });
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::contains(Lit l) const {
    return std::binary_search(
        lits_.begin(), lits_.end(), l, [](Lit a, Lit b) {
            if (a.var() != b.var()) return a.var() < b.var();
            return a.positive() < b.positive();
        });
}

bool Clause::tautological() const {
    for (std::size_t i = 1; i < lits_.size(); ++i)
        if (lits_[i].var() == lits_[i - 1].var()) return true;
    return false;
}

VarSet Clause::vars() const {
    VarSet out;
    for (Lit l : lits_) out.insert(l.var());
    return out;
}

VarSet Assignment::vars() const {
    VarSet out;
    for (const auto& [v, _] : bind_) out.insert(v);
    return out;
}

std::vector<Var> Assignment::true_vars() const {
    std::vector<Var> out;
    for (const auto& [v, val] : bind_)
        if (val) out.push_back(v);
    return out;
}

Assignment Assignment::restricted_to(const VarSet& x) const {
    Assignment out;
    for (const auto& [v, val] : bind_)
        if (x.count(v)) out.set(v, val);
    return out;
}

Assignment Assignment::positive_part() const {
    Assignment out;
    for (const auto& [v, val] : bind_)
        if (val) out.set(v, val);
    return out;
}

Clause Assignment::negation_clause() const {
    std::vector<Lit> lits;
    for (const auto& [v, val] : bind_) lits.emplace_back(v, !val);
    return Clause(std::move(lits));
}

bool Assignment::satisfied_by(const Assignment& total) const {
    for (const auto& [v, val] : bind_) {
        auto tv = total.value(v);
        if (!tv || *tv != val) return false;
    }
    return true;
}

bool Assignment::leq(const Assignment& a, const Assignment& b, const VarSet& over) {
    for (Var v : over) {
        auto av = a.value(v), bv = b.value(v);
        if (!av || !bv) throw std::invalid_argument("leq requires total assignments");
        if (*av && !*bv) return false;
    }
    return true;
}

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars_ < 0) throw std::invalid_argument("negative variable count");
    for (const Clause& c : clauses_)
        for (Lit l : c)
            if (l.var() > num_vars_)
                throw std::invalid_argument("literal exceeds declared variable count");
}

CnfFormula CnfFormula::falsum(int num_vars) {
    return CnfFormula(num_vars, {Clause()});
}

bool CnfFormula::is_falsum() const {
    return std::any_of(clauses_.begin(), clauses_.end(),
                       [](const Clause& c) { return c.empty(); });
}

VarSet CnfFormula::occurring_vars() const {
    VarSet out;
    for (const Clause& c : clauses_)
        for (Lit l : c) out.insert(l.var());
    return out;
}

bool CnfFormula::satisfied_by(const Assignment& total) const {
    for (const Clause& c : clauses_) {
        bool sat = false;
        for (Lit l : c) {
            auto v = total.value(l);
            if (!v) throw std::invalid_argument("assignment does not cover formula");
            if (*v) { sat = true; break; }
        }
        if (!sat) return false;
    }
    return true;
}

}  // namespace mmc
