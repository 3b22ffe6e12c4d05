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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmc/bench.hpp"
#include "mmc/formula.hpp"
#include "mmc/hashcount.hpp"
#include "mmc/minlb.hpp"
#include "mmc/mingen.hpp"
#include "mmc/minmodel.hpp"
#include "mmc/projenum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNoResult = 3;

struct GlobalConfig {
    double timeout_s = 5000;
    uint64_t seed = 0;
    double delta = 0.2;
    int cut_limit = 50;
    uint64_t cap = 1'000'000;
    double log_base = 10;
    bool xor_over_all_vars = false;
};

void add_common_options(CLI::App* sub, GlobalConfig& cfg) {
    sub->add_option("--timeout-s", cfg.timeout_s, "wall-clock budget in seconds")
        ->envname("MMCOUNT_TIMEOUT_S");
    sub->add_option("--seed", cfg.seed, "random seed")->envname("MMCOUNT_SEED");
    sub->add_option("--delta", cfg.delta, "confidence parameter in (0,1)")
        ->envname("MMCOUNT_DELTA");
    sub->add_option("--cut-limit", cfg.cut_limit, "largest cut handled by decomposition")
        ->envname("MMCOUNT_CUT_LIMIT");
    sub->add_option("--cap", cfg.cap, "per-enumeration threshold")->envname("MMCOUNT_CAP");
    sub->add_option("--log-base", cfg.log_base, "logarithm base for metrics")
        ->envname("MMCOUNT_LOG_BASE");
}

mmc::CnfFormula load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mmc::ParseError(0, "cannot open '" + path + "'");
    return mmc::parse_dimacs(in);
}

nlohmann::json result_json(const mmc::LowerBoundResult& r, const std::string& instance,
                           const GlobalConfig& cfg) {
    nlohmann::json j;
    j["instance"] = instance;
    j["method"] = mmc::to_string(r.method);
    j["bound"] = r.count;
    if (r.count > 0)
        j["bound_log2"] = r.bound_log2;
    else
        j["bound_log2"] = nullptr;
    j["exact"] = r.exact;
    j["confidence"] = r.confidence;
    j["delta"] = cfg.delta;
    j["seed"] = cfg.seed;
    return j;
}

int emit(const mmc::LowerBoundResult& r, const std::string& instance,
         const GlobalConfig& cfg) {
    std::cout << result_json(r, instance, cfg).dump() << "\n";
    std::cerr << mmc::to_string(r.method) << ": bound=" << r.count
              << (r.exact ? " (exact)" : "") << " confidence=" << r.confidence
              << " elapsed=" << r.elapsed_s << "s\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal model counting and lower bounds"};
    app.require_subcommand(1);
    GlobalConfig cfg;

    std::string cnf_path, txn_path, out_path, csv_path, input_dir;
    bool enumerate = false;
    std::vector<std::string> methods{"projenum", "hashcount", "minlb"};

    CLI::App* cmd_minlb = app.add_subcommand("minlb", "hybrid lower bound / exact count");
    add_common_options(cmd_minlb, cfg);
    cmd_minlb->add_flag("--xor-over-all-vars", cfg.xor_over_all_vars,
                        "hash over every variable instead of the independent support");
    cmd_minlb->add_option("file", cnf_path, "DIMACS CNF input")->required();

    CLI::App* cmd_projenum = app.add_subcommand("projenum", "decomposition-based count");
    add_common_options(cmd_projenum, cfg);
    cmd_projenum->add_option("file", cnf_path, "DIMACS CNF input")->required();

    CLI::App* cmd_hashcount = app.add_subcommand("hashcount", "XOR-hashing lower bound");
    add_common_options(cmd_hashcount, cfg);
    cmd_hashcount->add_flag("--xor-over-all-vars", cfg.xor_over_all_vars,
                            "hash over every variable instead of the independent support");
    cmd_hashcount->add_option("file", cnf_path, "DIMACS CNF input")->required();

    CLI::App* cmd_bruteforce =
        app.add_subcommand("bruteforce", "exhaustive count (small formulas)");
    add_common_options(cmd_bruteforce, cfg);
    cmd_bruteforce->add_option("file", cnf_path, "DIMACS CNF input")->required();

    CLI::App* cmd_mingen = app.add_subcommand("mingen-count",
                                              "count minimal generators of a database");
    add_common_options(cmd_mingen, cfg);
    cmd_mingen->add_flag("--enumerate", enumerate, "list the generators");
    cmd_mingen->add_option("file", txn_path, "transaction database")->required();

    CLI::App* cmd_support = app.add_subcommand("indep-support", "independent support");
    add_common_options(cmd_support, cfg);
    cmd_support->add_option("file", cnf_path, "DIMACS CNF input")->required();

    CLI::App* cmd_dlp = app.add_subcommand("dlp-export",
                                           "write the formula as a disjunctive program");
    cmd_dlp->add_option("file", cnf_path, "DIMACS CNF input")->required();

    CLI::App* cmd_bench = app.add_subcommand("bench", "run a method suite over a directory");
    add_common_options(cmd_bench, cfg);
    cmd_bench->add_option("--methods", methods, "methods to run")->delimiter(',');
    cmd_bench->add_option("--out", out_path, "JSONL report path");
    cmd_bench->add_option("--csv", csv_path, "CSV report path");
    cmd_bench->add_option("dir", input_dir, "directory of .cnf instances")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        mmc::Budget budget = mmc::Budget::seconds(cfg.timeout_s);

        if (cmd_minlb->parsed()) {
            mmc::CnfFormula f = load_cnf(cnf_path);
            mmc::MinLbConfig ml{cfg.delta, cfg.cut_limit, cfg.cap,
                                cfg.seed,  cfg.xor_over_all_vars, budget};
            mmc::LowerBoundResult r = mmc::minlb(f, ml);
            if (!r.exact && r.count == 0 && r.method == mmc::Method::MinLB) {
                std::cerr << "budget exhausted before any bound was established\n";
                return kExitNoResult;
            }
            return emit(r, cnf_path, cfg);
        }
        if (cmd_projenum->parsed()) {
            mmc::CnfFormula f = load_cnf(cnf_path);
            mmc::ProjEnumConfig pe{cfg.cap, budget};
            return emit(mmc::proj_enum_count(f, mmc::compute_cut(f), pe), cnf_path, cfg);
        }
        if (cmd_hashcount->parsed()) {
            mmc::CnfFormula f = load_cnf(cnf_path);
            mmc::SolverSession probe(f);
            mmc::SatStatus sat =
                f.is_falsum() ? mmc::SatStatus::Unsat : probe.solve({}, budget).status;
            if (sat == mmc::SatStatus::BudgetExceeded) {
                std::cerr << "budget exhausted before any bound was established\n";
                return kExitNoResult;
            }
            if (sat == mmc::SatStatus::Unsat) {
                mmc::LowerBoundResult r =
                    mmc::LowerBoundResult::from_count(0, true, mmc::Method::HashCount);
                return emit(r, cnf_path, cfg);
            }
            mmc::VarSet x;
            if (cfg.xor_over_all_vars) {
                for (mmc::Var v = 1; v <= f.num_vars(); ++v) x.insert(v);
            } else {
                x = mmc::independent_support(f, budget);
            }
            mmc::HashCountConfig hc;
            hc.delta = cfg.delta;
            hc.seed = cfg.seed;
            hc.budget = budget;
            return emit(mmc::hashcount_lower_bound(f, x, hc), cnf_path, cfg);
        }
        if (cmd_bruteforce->parsed()) {
            mmc::CnfFormula f = load_cnf(cnf_path);
            auto models = mmc::brute_force_mm(f);
            mmc::LowerBoundResult r = mmc::LowerBoundResult::from_count(
                static_cast<double>(models.size()), true, mmc::Method::BruteForce);
            return emit(r, cnf_path, cfg);
        }
        if (cmd_mingen->parsed()) {
            std::ifstream in(txn_path);
            if (!in) throw mmc::ParseError(0, "cannot open '" + txn_path + "'");
            mmc::TransactionDb db = mmc::parse_transactions(in);
            mmc::MingenEncoding enc = mmc::encode_mingen(db);
            nlohmann::json j;
            j["instance"] = txn_path;
            j["method"] = "mingen-count";
            j["num_items"] = db.items.size();
            j["num_transactions"] = db.transactions.size();
            j["encoding_vars"] = enc.formula.num_vars();
            j["encoding_clauses"] = enc.formula.clauses().size();
            j["delta"] = cfg.delta;
            j["seed"] = cfg.seed;
            if (enumerate) {
                mmc::VarSet all;
                for (mmc::Var v = 1; v <= enc.formula.num_vars(); ++v) all.insert(v);
                mmc::ProjEnumOutput out =
                    mmc::proj_enum(enc.formula, {}, all, cfg.cap, budget);
                nlohmann::json gens = nlohmann::json::array();
                for (const mmc::Assignment& model : out.projections) {
                    mmc::Generator g = mmc::decode_generator(model, enc);
                    nlohmann::json gj;
                    gj["items"] = g.items;
                    gj["cover"] = g.cover_ids;
                    gens.push_back(gj);
                }
                j["generators"] = gens;
                j["bound"] = out.projections.size();
                j["exact"] = !out.truncated;
            } else {
                mmc::MinLbConfig ml{cfg.delta, cfg.cut_limit, cfg.cap,
                                    cfg.seed,  cfg.xor_over_all_vars, budget};
                mmc::LowerBoundResult r = mmc::minlb(enc.formula, ml);
                j["bound"] = r.count;
                j["exact"] = r.exact;
                j["confidence"] = r.confidence;
            }
            std::cout << j.dump() << "\n";
            return kExitOk;
        }
        if (cmd_support->parsed()) {
            mmc::CnfFormula f = load_cnf(cnf_path);
            mmc::VarSet x = mmc::independent_support(f, budget);
            nlohmann::json j;
            j["instance"] = cnf_path;
            j["method"] = "indep-support";
            j["num_vars"] = f.num_vars();
            j["support"] = x;
            j["size"] = x.size();
            std::cout << j.dump() << "\n";
            return kExitOk;
        }
        if (cmd_dlp->parsed()) {
            std::cout << mmc::dlp_export(load_cnf(cnf_path));
            return kExitOk;
        }
        if (cmd_bench->parsed()) {
            std::vector<std::string> paths;
            for (const auto& entry : std::filesystem::directory_iterator(input_dir))
                if (entry.path().extension() == ".cnf") paths.push_back(entry.path().string());
            std::sort(paths.begin(), paths.end());

            mmc::SuiteConfig sc;
            sc.methods = methods;
            sc.tqp = {cfg.timeout_s, cfg.log_base};
            sc.delta = cfg.delta;
            sc.seed = cfg.seed;
            sc.cut_limit = cfg.cut_limit;
            sc.cap = cfg.cap;
            mmc::SuiteReport report = mmc::run_suite(paths, sc);

            if (!out_path.empty()) {
                std::ofstream out(out_path);
                mmc::write_jsonl(report, out);
            } else {
                mmc::write_jsonl(report, std::cout);
            }
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                mmc::write_csv(report, out);
            }
            nlohmann::json j;
            j["instances"] = paths.size();
            j["tqp_totals"] = report.tqp_totals;
            std::cerr << j.dump() << "\n";
            return kExitOk;
        }
    } catch (const mmc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
