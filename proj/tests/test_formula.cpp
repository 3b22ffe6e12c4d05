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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mmc/formula.hpp"
#include "mmc/minmodel.hpp"
#include "testutil.hpp"

using namespace mmc;
using namespace mmctest;

TEST_CASE("parse_dimacs reads header and clauses") {
    CnfFormula f = parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 -2 0\n");
    CHECK(f.num_vars() == 3);
    REQUIRE(f.clauses().size() == 2);
    CHECK(f.clauses()[0] == Clause({Lit(1, true), Lit(2, true), Lit(3, true)}));
    CHECK(f.clauses()[1] == Clause({Lit(1, false), Lit(2, false)}));
}

TEST_CASE("parse_dimacs accepts an empty formula") {
    CnfFormula f = parse_dimacs("p cnf 1 0\n");
    CHECK(f.num_vars() == 1);
    CHECK(f.clauses().empty());
    CHECK_FALSE(f.is_falsum());
}

TEST_CASE("parse_dimacs rejects out-of-range literals") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
    try {
        parse_dimacs("p cnf 2 1\n1 3 0\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parse_dimacs rejects malformed input") {
    CHECK_THROWS_AS(parse_dimacs(""), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);     // missing 0
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 -1 0\n"), ParseError);  // tautology
}

TEST_CASE("parse_dimacs collapses duplicate literals and skips comments") {
    CnfFormula f = parse_dimacs("c header comment\np cnf 2 1\nc mid comment\n1 1 2 0\n");
    REQUIRE(f.clauses().size() == 1);
    CHECK(f.clauses()[0].size() == 2);
}

TEST_CASE("condition drops satisfied clauses") {
    // assignment {e}: the clause mentioning e disappears, others untouched
    Assignment tau;
    tau.set(5, true);
    CnfFormula g = condition(example1(), tau);
    CHECK(g == parse_dimacs("p cnf 5 2\n1 2 3 0\n-1 -2 4 0\n"));
}

TEST_CASE("condition on a=b=1 leaves the two unit clauses") {
    Assignment tau;
    tau.set(1, true);
    tau.set(2, true);
    CnfFormula g = condition(example1(), tau);
    REQUIRE(g.clauses().size() == 2);
    CHECK(g.clauses()[0] == Clause({Lit(4, true)}));
    CHECK(g.clauses()[1] == Clause({Lit(5, true)}));
}

TEST_CASE("condition shrinks falsified literals") {
    CnfFormula f = parse_dimacs("p cnf 3 2\n1 2 0\n-1 3 0\n");
    Assignment tau;
    tau.set(1, true);
    CnfFormula g = condition(f, tau);
    REQUIRE(g.clauses().size() == 1);
    CHECK(g.clauses()[0] == Clause({Lit(3, true)}));
}

TEST_CASE("condition reaching an empty clause returns falsum") {
    CnfFormula f = parse_dimacs("p cnf 1 1\n1 0\n");
    Assignment tau;
    tau.set(1, false);
    CHECK(condition(f, tau).is_falsum());
}

TEST_CASE("condition propagates unit clauses already in the formula") {
    CnfFormula f = parse_dimacs("p cnf 3 3\n-1 0\n1 2 0\n-2 3 0\n");
    CnfFormula g = condition(f, {});
    // -1 deletes 1 from the second clause, the resulting unit 2 deletes -2.
    std::set<Clause> got(g.clauses().begin(), g.clauses().end());
    std::set<Clause> want{Clause({Lit(1, false)}), Clause({Lit(2, true)}),
                          Clause({Lit(3, true)})};
    CHECK(got == want);
}

TEST_CASE("condition composes over disjoint assignments") {
    std::mt19937_64 rng(7001);
    for (int iter = 0; iter < 80; ++iter) {
        CnfFormula f = random_cnf(rng, 6, 8);
        Assignment t1, t2;
        for (Var v = 1; v <= 6; ++v) {
            switch (rng() % 4) {
                case 0: t1.set(v, rng() % 2); break;
                case 1: t2.set(v, rng() % 2); break;
                default: break;
            }
        }
        Assignment both = t1;
        for (const auto& [v, val] : t2.bindings()) both.set(v, val);
        CHECK(condition(condition(f, t1), t2) == condition(f, both));
    }
}

TEST_CASE("condition preserves models but not minimal models") {
    // Models of F satisfying tau agree with models of F|tau.
    std::mt19937_64 rng(7002);
    for (int iter = 0; iter < 50; ++iter) {
        CnfFormula f = random_cnf(rng, 5, 6);
        Assignment tau;
        for (Var v = 1; v <= 2; ++v)
            if (rng() % 2) tau.set(v, rng() % 2);
        CnfFormula g = condition(f, tau);
        if (g.is_falsum()) continue;
        for (const Assignment& mu : all_assignments(5)) {
            if (!tau.satisfied_by(mu)) continue;
            CHECK(f.satisfied_by(mu) == g.satisfied_by(mu));
        }
    }

    // The known counterexample: {a} is minimal for F|{e} but the extension
    // {a,e} is not a minimal model of F.
    Assignment tau_e;
    tau_e.set(5, true);
    CnfFormula g = condition(example1(), tau_e);
    Assignment a_only = total_from_true(5, {1});
    CHECK(g.satisfied_by(a_only));
    CHECK(as_set(brute_force_mm(g)).count(a_only) == 1);
    Assignment extended = total_from_true(5, {1, 5});
    CHECK(example1().satisfied_by(extended));
    CHECK_FALSE(is_minimal(example1(), extended));
}

TEST_CASE("justified_restriction keeps only false bindings") {
    Assignment tau;
    tau.set(1, true);
    tau.set(2, false);
    tau.set(3, true);
    Assignment expect;
    expect.set(2, false);
    CHECK(justified_restriction(tau) == expect);

    Assignment all_false;
    all_false.set(1, false);
    all_false.set(2, false);
    CHECK(justified_restriction(all_false) == all_false);

    Assignment one_true;
    one_true.set(1, true);
    CHECK(justified_restriction(one_true).empty());
}

TEST_CASE("components splits disconnected formulas") {
    CnfFormula f = parse_dimacs("p cnf 4 2\n1 2 0\n3 4 0\n");
    auto comps = components(f);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VarSet{1, 2});
    CHECK(comps[1] == VarSet{3, 4});

    CnfFormula chain = parse_dimacs("p cnf 3 2\n1 2 0\n2 3 0\n");
    auto chain_comps = components(chain);
    REQUIRE(chain_comps.size() == 1);
    CHECK(chain_comps[0] == VarSet{1, 2, 3});

    CHECK(components(parse_dimacs("p cnf 3 0\n")).empty());
}

TEST_CASE("components partition the occurring variables") {
    std::mt19937_64 rng(7003);
    for (int iter = 0; iter < 50; ++iter) {
        CnfFormula f = random_cnf(rng, 8, 6);
        auto comps = components(f);
        VarSet all;
        std::size_t total = 0;
        for (const VarSet& c : comps) {
            total += c.size();
            for (Var v : c) all.insert(v);
        }
        CHECK(total == all.size());  // pairwise disjoint
        CHECK(all == f.occurring_vars());
        // Every clause lives inside exactly one component.
        for (const Clause& c : f.clauses()) {
            int hit = 0;
            for (const VarSet& comp : comps) {
                bool inside = true;
                for (Lit l : c)
                    if (!comp.count(l.var())) { inside = false; break; }
                if (inside) ++hit;
            }
            CHECK(hit == 1);
        }
    }
}

TEST_CASE("compute_cut finds the shared variable") {
    CnfFormula f = parse_dimacs("p cnf 3 2\n2 1 0\n3 1 0\n");  // (a|x)(b|x), x=1
    CHECK(compute_cut(f) == VarSet{1});
}

TEST_CASE("compute_cut on the example formula is a valid separator") {
    CnfFormula f = example1();
    VarSet cut = compute_cut(f);
    CHECK_FALSE(cut.empty());
    std::vector<Var> cv(cut.begin(), cut.end());
    for (uint32_t m = 0; m < (1u << cv.size()); ++m) {
        Assignment tau;
        for (std::size_t i = 0; i < cv.size(); ++i) tau.set(cv[i], (m >> i) & 1);
        CnfFormula g = condition(f, tau);
        if (g.is_falsum()) continue;
        std::size_t rest = 5 - cut.size();
        for (const VarSet& comp : components(g)) CHECK(comp.size() < rest);
    }
}

TEST_CASE("compute_cut returns empty for already-disconnected formulas") {
    CHECK(compute_cut(parse_dimacs("p cnf 4 2\n1 2 0\n3 4 0\n")).empty());
}

TEST_CASE("compute_cut separator post-check on random formulas") {
    std::mt19937_64 rng(7004);
    int checked = 0;
    for (int iter = 0; iter < 40; ++iter) {
        CnfFormula f = random_cnf(rng, 9, 10);
        if (f.is_falsum()) continue;
        VarSet cut = compute_cut(f);
        VarSet occ = f.occurring_vars();
        if (occ.size() <= cut.size() + 1) continue;
        if (components(f).size() >= 2) {
            CHECK(cut.empty());
            continue;
        }
        ++checked;
        std::vector<Var> cv(cut.begin(), cut.end());
        for (int trial = 0; trial < 8; ++trial) {
            Assignment tau;
            for (Var v : cv) tau.set(v, rng() % 2);
            CnfFormula g = condition(f, tau);
            if (g.is_falsum()) continue;
            std::size_t rest = occ.size() - cut.size();
            for (const VarSet& comp : components(g)) CHECK(comp.size() < rest);
        }
    }
    CHECK(checked > 5);
}

namespace {

struct Rule {
    std::set<Var> head, body;
};

// Minimal reader for the exported rule syntax.
Rule parse_rule(std::string line) {
    Rule r;
    REQUIRE(!line.empty());
    REQUIRE(line.back() == '.');
    line.pop_back();
    auto read_atoms = [](const std::string& part, char sep) {
        std::set<Var> atoms;
        std::istringstream in(part);
        std::string tok;
        while (std::getline(in, tok, sep)) {
            std::string trimmed;
            for (char ch : tok)
                if (!isspace(static_cast<unsigned char>(ch))) trimmed += ch;
            if (trimmed.empty()) continue;
            REQUIRE(trimmed[0] == 'x');
            atoms.insert(std::stoi(trimmed.substr(1)));
        }
        return atoms;
    };
    auto arrow = line.find(":-");
    if (arrow == std::string::npos) {
        r.head = read_atoms(line, ';');
    } else {
        r.head = read_atoms(line.substr(0, arrow), ';');
        r.body = read_atoms(line.substr(arrow + 2), ',');
    }
    return r;
}

}  // namespace

TEST_CASE("dlp_export renders heads and bodies") {
    CnfFormula f(3, {Clause({Lit(1, true), Lit(2, true), Lit(3, false)})});
    CHECK(dlp_export(f) == "x1 ; x2 :- x3.\n");
    CnfFormula fact(1, {Clause({Lit(1, true)})});
    CHECK(dlp_export(fact) == "x1.\n");
    CnfFormula constraint(2, {Clause({Lit(1, false), Lit(2, false)})});
    CHECK(dlp_export(constraint) == ":- x1, x2.\n");
}

TEST_CASE("dlp_export round-trips heads and bodies") {
    std::mt19937_64 rng(7005);
    for (int iter = 0; iter < 40; ++iter) {
        CnfFormula f = random_cnf(rng, 7, 9);
        std::istringstream text(dlp_export(f));
        std::string line;
        std::size_t idx = 0;
        while (std::getline(text, line)) {
            REQUIRE(idx < f.clauses().size());
            Rule r = parse_rule(line);
            const Clause& c = f.clauses()[idx++];
            std::set<Var> pos, neg;
            for (Lit l : c) (l.positive() ? pos : neg).insert(l.var());
            CHECK(r.head == pos);
            CHECK(r.body == neg);
        }
        CHECK(idx == f.clauses().size());
    }
}
