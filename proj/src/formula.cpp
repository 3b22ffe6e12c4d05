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

#include "mmc/formula.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace mmc {

namespace {

struct Token {
    std::string text;
    int line;
};

std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == 'c') continue;  // comment
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) out.push_back({tok, lineno});
    }
    return out;
}

int parse_int(const Token& t, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(t.text, &pos);
    } catch (const std::exception&) {
        throw ParseError(t.line, std::string("expected ") + what + ", got '" + t.text + "'");
    }
    if (pos != t.text.size())
        throw ParseError(t.line, std::string("expected ") + what + ", got '" + t.text + "'");
    return value;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
    std::vector<Token> toks = tokenize(in);
    std::size_t i = 0;
    if (toks.size() < 4 || toks[0].text != "p" || toks[1].text != "cnf")
        throw ParseError(toks.empty() ? 1 : toks[0].line, "missing 'p cnf' header");
    int num_vars = parse_int(toks[2], "variable count");
    int num_clauses = parse_int(toks[3], "clause count");
    if (num_vars < 0 || num_clauses < 0)
        throw ParseError(toks[2].line, "negative count in header");
    i = 4;

    std::vector<Clause> clauses;
    std::vector<Lit> lits;
    int clause_line = toks.empty() ? 1 : toks.back().line;
    while (i < toks.size()) {
        if (lits.empty()) clause_line = toks[i].line;
        int code = parse_int(toks[i], "literal");
        ++i;
        if (code == 0) {
            Clause c(lits);
            if (c.tautological())
                throw ParseError(clause_line,
                                 "tautological clause (a variable occurs in both polarities)");
            clauses.push_back(std::move(c));
            lits.clear();
            continue;
        }
        if (std::abs(code) > num_vars)
            throw ParseError(toks[i - 1].line,
                             "literal " + std::to_string(code) + " exceeds declared " +
                                 std::to_string(num_vars) + " vars");
        lits.push_back(Lit::from_dimacs(code));
    }
    if (!lits.empty())
        throw ParseError(clause_line, "clause not terminated by 0");
    return CnfFormula(num_vars, std::move(clauses));
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

CnfFormula condition(const CnfFormula& f, const Assignment& tau) {
    for (Var v : tau.vars())
        if (v > f.num_vars())
            throw std::invalid_argument("assignment mentions variable outside the formula");

    std::vector<Clause> work = f.clauses();
    bool changed = true;
    while (changed) {
        changed = false;

        std::vector<Clause> next;
        next.reserve(work.size());
        for (const Clause& c : work) {
            bool satisfied = false;
            std::vector<Lit> kept;
            for (Lit l : c) {
                auto v = tau.value(l);
                if (v && *v) { satisfied = true; break; }
                if (v && !*v) { changed = true; continue; }
                kept.push_back(l);
            }
            if (satisfied) { changed = true; continue; }
            next.emplace_back(std::move(kept));
        }
        work = std::move(next);

        // Unit clauses already in the formula delete their negation elsewhere.
        std::set<Lit> units;
        for (const Clause& c : work)
            if (c.size() == 1) units.insert(*c.begin());
        if (!units.empty()) {
            for (Clause& c : work) {
                std::vector<Lit> kept;
                for (Lit l : c) {
                    if (units.count(l.negated())) { changed = true; continue; }
                    kept.push_back(l);
                }
                if (kept.size() != c.size()) c = Clause(std::move(kept));
            }
        }

        for (const Clause& c : work)
            if (c.empty()) return CnfFormula::falsum(f.num_vars());
    }

    // Set semantics: collapse duplicates, keeping the first occurrence.
    std::vector<Clause> out;
    std::set<Clause> seen;
    for (Clause& c : work)
        if (seen.insert(c).second) out.push_back(std::move(c));
    return CnfFormula(f.num_vars(), std::move(out));
}

Assignment justified_restriction(const Assignment& tau) {
    Assignment out;
    for (const auto& [v, val] : tau.bindings())
        if (!val) out.set(v, false);
    return out;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

std::vector<VarSet> components(const CnfFormula& f) {
    UnionFind uf(f.num_vars());
    for (const Clause& c : f.clauses()) {
        const auto& lits = c.literals();
        for (std::size_t i = 1; i < lits.size(); ++i)
            uf.unite(lits[0].var(), lits[i].var());
    }
    std::map<int, VarSet> groups;
    for (Var v : f.occurring_vars()) groups[uf.find(v)].insert(v);

    std::vector<VarSet> out;
    for (auto& [_, vars] : groups) out.push_back(std::move(vars));
    std::sort(out.begin(), out.end(),
              [](const VarSet& a, const VarSet& b) { return *a.begin() < *b.begin(); });
    return out;
}

namespace {

using AdjacencyMap = std::map<Var, VarSet>;

AdjacencyMap primal_graph(const CnfFormula& f) {
    AdjacencyMap adj;
    for (Var v : f.occurring_vars()) adj[v];
    for (const Clause& c : f.clauses()) {
        const auto& lits = c.literals();
        for (std::size_t i = 0; i < lits.size(); ++i)
            for (std::size_t j = i + 1; j < lits.size(); ++j) {
                adj[lits[i].var()].insert(lits[j].var());
                adj[lits[j].var()].insert(lits[i].var());
            }
    }
    return adj;
}

// Sizes of the connected components of the graph restricted to V minus sep.
std::vector<std::size_t> residual_component_sizes(const AdjacencyMap& adj, const VarSet& sep) {
    std::map<Var, bool> seen;
    std::vector<std::size_t> sizes;
    for (const auto& [v, _] : adj) {
        if (sep.count(v) || seen[v]) continue;
        std::size_t size = 0;
        std::vector<Var> stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            Var u = stack.back();
            stack.pop_back();
            ++size;
            for (Var w : adj.at(u)) {
                if (sep.count(w) || seen[w]) continue;
                seen[w] = true;
                stack.push_back(w);
            }
        }
        sizes.push_back(size);
    }
    return sizes;
}

bool separates(const AdjacencyMap& adj, const VarSet& sep) {
    std::size_t residual = 0;
    for (const auto& [v, _] : adj)
        if (!sep.count(v)) ++residual;
    if (residual == 0) return false;
    auto sizes = residual_component_sizes(adj, sep);
    for (std::size_t s : sizes)
        if (s >= residual) return false;
    return true;
}

}  // namespace

VarSet compute_cut(const CnfFormula& f) {
    if (f.is_falsum()) throw std::invalid_argument("compute_cut on falsum");
    AdjacencyMap adj = primal_graph(f);
    if (adj.empty()) return {};
    if (components(f).size() >= 2) return {};

    // Candidate separators: bags of a min-degree elimination ordering plus
    // every single vertex and every open neighborhood.
    std::vector<VarSet> candidates;
    for (const auto& [v, nbrs] : adj) {
        candidates.push_back({v});
        candidates.push_back(nbrs);
    }
    AdjacencyMap work = adj;
    while (!work.empty()) {
        Var best = work.begin()->first;
        std::size_t best_deg = work.begin()->second.size();
        for (const auto& [v, nbrs] : work)
            if (nbrs.size() < best_deg) { best = v; best_deg = nbrs.size(); }

        VarSet bag = work[best];
        bag.insert(best);
        candidates.push_back(bag);

        // Contract: neighbors of the eliminated vertex become a clique.
        for (Var a : work[best])
            for (Var b : work[best])
                if (a != b) work[a].insert(b);
        for (auto& [_, nbrs] : work) nbrs.erase(best);
        work.erase(best);
    }

    const VarSet* best = nullptr;
    for (const VarSet& cand : candidates) {
        if (cand.empty() || !separates(adj, cand)) continue;
        if (!best || cand.size() < best->size() ||
            (cand.size() == best->size() && cand < *best))
            best = &cand;
    }
    if (best) return *best;

    // Dense graph with no proper separator (e.g. a clique): all but the
    // largest vertex, which conditions the formula down to a single variable.
    VarSet all;
    for (const auto& [v, _] : adj) all.insert(v);
    all.erase(*all.rbegin());
    return all;
}

std::string dlp_export(const CnfFormula& f) {
    std::ostringstream out;
    for (const Clause& c : f.clauses()) {
        std::vector<Var> head, body;
        for (Lit l : c) (l.positive() ? head : body).push_back(l.var());
        std::string rule;
        for (std::size_t i = 0; i < head.size(); ++i) {
            if (i) rule += " ; ";
            rule += "x" + std::to_string(head[i]);
        }
        if (!body.empty()) {
            rule += rule.empty() ? ":- " : " :- ";
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (i) rule += ", ";
                rule += "x" + std::to_string(body[i]);
            }
        } else if (rule.empty()) {
            rule = ":-";  // empty clause: unconditional constraint
        }
        out << rule << ".\n";
    }
    return out.str();
}

}  // namespace mmc
