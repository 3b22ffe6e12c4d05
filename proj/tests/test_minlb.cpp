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
#include "mmc/minlb.hpp"
#include "mmc/minmodel.hpp"
#include "testutil.hpp"

using namespace mmc;
using namespace mmctest;

namespace {

// A single wide clause: its primal graph is a clique over all variables.
CnfFormula clique_formula(int n) {
    std::vector<Lit> lits;
    for (Var v = 1; v <= n; ++v) lits.emplace_back(v, true);
    return CnfFormula(n, {Clause(std::move(lits))});
}

}  // namespace

TEST_CASE("minlb of falsum is exactly zero") {
    LowerBoundResult r = minlb(CnfFormula::falsum(3), {});
    CHECK(r.exact);
    CHECK(r.count == 0);
    CHECK(r.confidence == 1.0);
}

TEST_CASE("minlb of an unsatisfiable formula is exactly zero") {
    CnfFormula f = parse_dimacs("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
    LowerBoundResult r = minlb(f, {});
    CHECK(r.exact);
    CHECK(r.count == 0);
}

TEST_CASE("small cuts dispatch to the decomposition counter") {
    CnfFormula f = parse_dimacs("p cnf 4 2\n1 2 0\n3 4 0\n");
    LowerBoundResult r = minlb(f, {});
    CHECK(r.method == Method::ProjEnum);
    CHECK(r.exact);
    CHECK(r.count == 4);
}

TEST_CASE("a 60-variable clique dispatches to hashing") {
    CnfFormula f = clique_formula(60);
    CHECK(compute_cut(f).size() > 50);
    MinLbConfig cfg;
    cfg.budget = Budget::seconds(120);
    LowerBoundResult r = minlb(f, cfg);
    CHECK(r.method == Method::HashCount);
    CHECK_FALSE(r.exact);
    CHECK(r.confidence == doctest::Approx(0.8));
    // |MM| = 60: the probabilistic bound should stay below it here.
    CHECK(r.count <= 60.0);
}

TEST_CASE("the cut-limit flag flips the dispatch") {
    CnfFormula f = example1();  // heuristic cut {1,2}
    MinLbConfig small;
    small.cut_limit = 1;
    LowerBoundResult hashed = minlb(f, small);
    CHECK(hashed.method == Method::HashCount);

    MinLbConfig big;
    big.cut_limit = 2;
    LowerBoundResult counted = minlb(f, big);
    CHECK(counted.method == Method::ProjEnum);
    CHECK(counted.exact);
    CHECK(counted.count == 3);
}

TEST_CASE("dispatch is deterministic") {
    CnfFormula f = example1();
    for (int i = 0; i < 3; ++i) {
        LowerBoundResult r = minlb(f, {});
        CHECK(r.method == Method::ProjEnum);
        CHECK(r.count == 3);
    }
}

TEST_CASE("xor-over-all-vars mode still sounds on the hashing branch") {
    CnfFormula f = example1();
    MinLbConfig cfg;
    cfg.cut_limit = 0;  // force hashing
    cfg.xor_over_all_vars = true;
    cfg.seed = 5;
    LowerBoundResult r = minlb(f, cfg);
    CHECK(r.method == Method::HashCount);
    CHECK(r.count <= 3.0);
}

TEST_CASE("end-to-end soundness across seeds and instances") {
    std::mt19937_64 rng(12001);
    int runs = 0, sound = 0, hash_runs = 0;
    for (int iter = 0; iter < 12; ++iter) {
        int nv = 4 + static_cast<int>(rng() % 6);
        CnfFormula f = random_cnf(rng, nv, nv);
        double oracle = static_cast<double>(brute_force_mm(f).size());
        if (oracle == 0) continue;
        for (uint64_t seed = 0; seed < 10; ++seed) {
            MinLbConfig cfg;
            cfg.delta = 0.2;
            cfg.seed = seed;
            cfg.cut_limit = (seed % 2 == 0) ? 50 : 0;  // alternate branches
            LowerBoundResult r = minlb(f, cfg);
            ++runs;
            if (r.method == Method::HashCount) ++hash_runs;
            if (r.count <= oracle) ++sound;
            if (r.exact) CHECK(r.count == oracle);
        }
    }
    REQUIRE(runs > 50);
    CHECK(hash_runs > 0);
    // 1 - delta - sampling slack
    CHECK(static_cast<double>(sound) / runs >= 0.75);
}
