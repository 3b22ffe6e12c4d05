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

#include "mmc/mingen.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace mmc {

TransactionDb parse_transactions(std::istream& in) {
    TransactionDb db;
    std::string line;
    int lineno = 0;
    int next_id = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        Transaction t{next_id, {}};
        bool any = false;
        while (ls >> tok) {
            std::size_t pos = 0;
            long value = -1;
            try {
                value = std::stol(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected item id, got '" + tok + "'");
            }
            if (pos != tok.size() || value < 0)
                throw ParseError(lineno, "expected non-negative item id, got '" + tok + "'");
            t.items.insert(static_cast<Item>(value));
            any = true;
        }
        if (!any) continue;  // blank line: no id consumed
        for (Item a : t.items) db.items.insert(a);
        db.transactions.push_back(std::move(t));
        ++next_id;
    }
    return db;
}

TransactionDb parse_transactions(const std::string& text) {
    std::istringstream in(text);
    return parse_transactions(in);
}

MingenEncoding encode_mingen(const TransactionDb& db) {
    std::map<Item, Var> item_var;
    std::map<int, Var> txn_var;
    Var next = 1;
    for (Item a : db.items) item_var[a] = next++;
    for (const Transaction& t : db.transactions) txn_var[t.id] = next++;

    std::vector<Clause> clauses;
    clauses.reserve(db.transactions.size());
    for (const Transaction& t : db.transactions) {
        std::vector<Lit> lits{Lit(txn_var.at(t.id), true)};
        for (Item a : db.items)
            if (!t.items.count(a)) lits.emplace_back(item_var.at(a), true);
        clauses.emplace_back(std::move(lits));
    }
    return {CnfFormula(next - 1, std::move(clauses)), std::move(item_var),
            std::move(txn_var)};
}

Generator decode_generator(const Assignment& model, const MingenEncoding& enc) {
    Generator g;
    for (const auto& [a, v] : enc.item_var)
        if (model.value(v).value_or(false)) g.items.insert(a);
    for (const auto& [i, v] : enc.txn_var)
        if (model.value(v).value_or(false)) g.cover_ids.insert(i);
    return g;
}

std::set<int> cover(const ItemSet& j, const TransactionDb& db) {
    std::set<int> out;
    for (const Transaction& t : db.transactions)
        if (std::includes(t.items.begin(), t.items.end(), j.begin(), j.end()))
            out.insert(t.id);
    return out;
}

std::set<ItemSet> brute_force_min_generators(const TransactionDb& db) {
    if (db.items.size() > 16)
        throw std::invalid_argument("brute-force miner refuses more than 16 items");
    std::vector<Item> items(db.items.begin(), db.items.end());

    std::set<ItemSet> out;
    for (uint32_t mask = 0; mask < (1u << items.size()); ++mask) {
        ItemSet candidate;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask & (1u << i)) candidate.insert(items[i]);
        std::set<int> c = cover(candidate, db);
        bool minimal = true;
        for (Item a : candidate) {
            ItemSet sub = candidate;
            sub.erase(a);
            if (cover(sub, db) == c) { minimal = false; break; }
        }
        if (minimal) out.insert(std::move(candidate));
    }
    return out;
}

}  // namespace mmc
