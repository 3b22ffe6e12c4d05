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

#include <random>

#include "mmc/mingen.hpp"
#include "mmc/minmodel.hpp"
#include "testutil.hpp"

using namespace mmc;
using namespace mmctest;

namespace {

// t1 = {A}, t2 = {A,B} with A=0, B=1.
TransactionDb a_ab_db() { return parse_transactions("0\n0 1\n"); }

TransactionDb random_db(std::mt19937_64& rng, int max_items, int max_txns) {
    int universe = 1 + static_cast<int>(rng() % max_items);
    int txns = 1 + static_cast<int>(rng() % max_txns);
    std::string text;
    for (int t = 0; t < txns; ++t) {
        std::string line;
        for (int a = 0; a < universe; ++a)
            if (rng() % 2) line += std::to_string(a) + " ";
        if (line.empty()) line = std::to_string(static_cast<int>(rng() % universe));
        text += line + "\n";
    }
    return parse_transactions(text);
}

}  // namespace

TEST_CASE("parse_transactions numbers lines and unions items") {
    TransactionDb db = parse_transactions("0 2\n1\n");
    CHECK(db.items == ItemSet{0, 1, 2});
    REQUIRE(db.transactions.size() == 2);
    CHECK(db.transactions[0].id == 1);
    CHECK(db.transactions[0].items == ItemSet{0, 2});
    CHECK(db.transactions[1].id == 2);
    CHECK(db.transactions[1].items == ItemSet{1});
}

TEST_CASE("parse_transactions edge cases") {
    CHECK(parse_transactions("").transactions.empty());
    TransactionDb dup = parse_transactions("0 0\n");
    REQUIRE(dup.transactions.size() == 1);
    CHECK(dup.transactions[0].items == ItemSet{0});
    TransactionDb blanks = parse_transactions("\n0\n\n1\n");
    REQUIRE(blanks.transactions.size() == 2);
    CHECK(blanks.transactions[0].id == 1);
    CHECK(blanks.transactions[1].id == 2);
    CHECK_THROWS_AS(parse_transactions("0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_transactions("-3\n"), ParseError);
}

TEST_CASE("encode_mingen builds one clause per transaction") {
    MingenEncoding enc = encode_mingen(a_ab_db());
    // variables: p_0, p_1, q_1, q_2
    CHECK(enc.formula.num_vars() == 4);
    REQUIRE(enc.formula.clauses().size() == 2);
    Var p_b = enc.item_var.at(1);
    Var q1 = enc.txn_var.at(1);
    Var q2 = enc.txn_var.at(2);
    CHECK(enc.formula.clauses()[0] == Clause({Lit(q1, true), Lit(p_b, true)}));
    CHECK(enc.formula.clauses()[1] == Clause({Lit(q2, true)}));
}

TEST_CASE("encode_mingen degenerates to a unit for a full transaction") {
    TransactionDb db = parse_transactions("0 1 2\n");
    MingenEncoding enc = encode_mingen(db);
    REQUIRE(enc.formula.clauses().size() == 1);
    CHECK(enc.formula.clauses()[0] == Clause({Lit(enc.txn_var.at(1), true)}));
}

TEST_CASE("encode_mingen of an empty transaction lists every item") {
    TransactionDb db = parse_transactions("0\n\n");
    db.transactions[0].items.clear();  // t1 = {} over universe {0}
    MingenEncoding enc = encode_mingen(db);
    REQUIRE(enc.formula.clauses().size() == 1);
    CHECK(enc.formula.clauses()[0] ==
          Clause({Lit(enc.item_var.at(0), true), Lit(enc.txn_var.at(1), true)}));
}

TEST_CASE("decode_generator reads items and cover off a model") {
    MingenEncoding enc = encode_mingen(a_ab_db());
    Assignment sigma;
    for (Var v = 1; v <= enc.formula.num_vars(); ++v) sigma.set(v, false);
    sigma.set(enc.txn_var.at(1), true);
    sigma.set(enc.txn_var.at(2), true);
    Generator g = decode_generator(sigma, enc);
    CHECK(g.items.empty());
    CHECK(g.cover_ids == std::set<int>{1, 2});

    Assignment sigma2;
    for (Var v = 1; v <= enc.formula.num_vars(); ++v) sigma2.set(v, false);
    sigma2.set(enc.item_var.at(1), true);
    sigma2.set(enc.txn_var.at(2), true);
    Generator g2 = decode_generator(sigma2, enc);
    CHECK(g2.items == ItemSet{1});
    CHECK(g2.cover_ids == std::set<int>{2});
}

TEST_CASE("cover follows the definition") {
    TransactionDb db = a_ab_db();
    CHECK(cover({}, db) == std::set<int>{1, 2});
    CHECK(cover({1}, db) == std::set<int>{2});
    CHECK(cover({0, 1}, db) == std::set<int>{2});
}

TEST_CASE("brute_force_min_generators on the A/AB example") {
    std::set<ItemSet> got = brute_force_min_generators(a_ab_db());
    CHECK(got == std::set<ItemSet>{{}, {1}});
}

TEST_CASE("brute_force_min_generators single transaction and empty db") {
    TransactionDb single = parse_transactions("0\n");
    CHECK(brute_force_min_generators(single) == std::set<ItemSet>{{}});
    TransactionDb empty = parse_transactions("");
    CHECK(brute_force_min_generators(empty) == std::set<ItemSet>{{}});
}

TEST_CASE("brute_force_min_generators refuses large universes") {
    std::string line;
    for (int a = 0; a < 17; ++a) line += std::to_string(a) + " ";
    TransactionDb db = parse_transactions(line + "\n");
    CHECK_THROWS_AS(brute_force_min_generators(db), std::invalid_argument);
}

TEST_CASE("minimal models of the encoding are in bijection with generators") {
    std::mt19937_64 rng(13001);
    for (int iter = 0; iter < 60; ++iter) {
        TransactionDb db = random_db(rng, 6, 6);
        MingenEncoding enc = encode_mingen(db);
        auto mm = brute_force_mm(enc.formula);
        std::set<ItemSet> decoded;
        for (const Assignment& sigma : mm)
            decoded.insert(decode_generator(sigma, enc).items);
        std::set<ItemSet> want = brute_force_min_generators(db);
        CHECK(decoded == want);
        CHECK(decoded.size() == mm.size());  // itemsets do not collide
    }
}

TEST_CASE("the true q-variables of a minimal model are exactly the cover") {
    std::mt19937_64 rng(13002);
    for (int iter = 0; iter < 40; ++iter) {
        TransactionDb db = random_db(rng, 5, 6);
        MingenEncoding enc = encode_mingen(db);
        for (const Assignment& sigma : brute_force_mm(enc.formula)) {
            Generator g = decode_generator(sigma, enc);
            CHECK(g.cover_ids == cover(g.items, db));
        }
    }
}
