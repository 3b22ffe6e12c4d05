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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mmc/types.hpp"

namespace mmc {

using Item = int;
using ItemSet = std::set<Item>;

struct Transaction {
    int id;  // 1-based position in the input
    ItemSet items;
};

struct TransactionDb {
    ItemSet items;  // the universe: every item seen in some transaction
    std::vector<Transaction> transactions;
};

// One transaction per line, whitespace-separated non-negative item ids;
// blank lines are skipped without consuming an id.
TransactionDb parse_transactions(std::istream& in);
TransactionDb parse_transactions(const std::string& text);

// CNF whose minimal models are in bijection with the minimal generators of
// the database: one clause per transaction, q_i or the items missing from it.
struct MingenEncoding {
    CnfFormula formula;
    std::map<Item, Var> item_var;  // p_a
    std::map<int, Var> txn_var;    // q_i
};

MingenEncoding encode_mingen(const TransactionDb& db);

struct Generator {
    ItemSet items;
    std::set<int> cover_ids;
};

// Reads the generator off a minimal model of the encoding: the itemset from
// true p-variables, its cover from true q-variables.
Generator decode_generator(const Assignment& model, const MingenEncoding& enc);

// Transaction ids whose itemset contains j.
std::set<int> cover(const ItemSet& j, const TransactionDb& db);

// Exact minimal generators by exhaustive search; refuses more than 16 items.
// Checking the immediate subsets suffices because cover is antitone.
std::set<ItemSet> brute_force_min_generators(const TransactionDb& db);

}  // namespace mmc
