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

#include "mmc/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "mmc/formula.hpp"
#include "mmc/hashcount.hpp"
#include "mmc/minlb.hpp"
#include "mmc/minmodel.hpp"
#include "mmc/projenum.hpp"

namespace mmc {

namespace {

double log_with_base(double x, double base) { return std::log(x) / std::log(base); }

nlohmann::json record_json(const RunRecord& r) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["method"] = r.method;
    j["status"] = r.status;
    j["time_s"] = r.time_s;
    if (r.bound && *r.bound > 0)
        j["bound_log2"] = std::log2(*r.bound);
    else
        j["bound_log2"] = nullptr;
    j["bound"] = r.bound ? nlohmann::json(*r.bound) : nlohmann::json(nullptr);
    j["exact"] = r.exact;
    j["seed"] = r.seed;
    j["delta"] = r.delta;
    return j;
}

RunRecord run_one(const std::string& path, const std::string& method,
                  const SuiteConfig& cfg) {
    RunRecord rec;
    rec.instance = path;
    rec.method = method;
    rec.seed = cfg.seed;
    rec.delta = cfg.delta;

    auto start = std::chrono::steady_clock::now();
    auto stamp = [&] {
        rec.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    };

    std::ifstream in(path);
    if (!in) {
        rec.status = "parse_error";
        stamp();
        return rec;
    }
    try {
        CnfFormula f = parse_dimacs(in);
        Budget budget = Budget::seconds(cfg.tqp.timeout_s);
        if (method == "projenum") {
            ProjEnumConfig pe{cfg.cap, budget};
            LowerBoundResult r = proj_enum_count(f, compute_cut(f), pe);
            rec.bound = r.count;
            rec.exact = r.exact;
            rec.status = r.exact ? "ok" : "timeout";
        } else if (method == "hashcount") {
            SolverSession s(f);
            if (f.is_falsum() || s.solve({}, budget).status != SatStatus::Sat) {
                rec.bound = 0.0;
                rec.exact = true;
                rec.status = "ok";
            } else {
                HashCountConfig hc;
                hc.delta = cfg.delta;
                hc.seed = cfg.seed;
                hc.budget = budget;
                LowerBoundResult r = hashcount_lower_bound(f, independent_support(f, budget), hc);
                rec.bound = r.count;
                rec.exact = false;
                rec.status = "ok";
            }
        } else if (method == "minlb") {
            MinLbConfig ml;
            ml.delta = cfg.delta;
            ml.cut_limit = cfg.cut_limit;
            ml.cap = cfg.cap;
            ml.seed = cfg.seed;
            ml.budget = budget;
            LowerBoundResult r = minlb(f, ml);
            rec.bound = r.count;
            rec.exact = r.exact;
            rec.status = "ok";
        } else if (method == "bruteforce") {
            if (f.occurring_vars().size() > 22) {
                rec.status = "refused";
            } else {
                rec.bound = static_cast<double>(brute_force_mm(f).size());
                rec.exact = true;
                rec.status = "ok";
            }
        } else {
            throw std::invalid_argument("unknown method: " + method);
        }
    } catch (const ParseError&) {
        rec.status = "parse_error";
        rec.bound.reset();
    } catch (const std::invalid_argument&) {
        rec.status = "refused";
        rec.bound.reset();
    }
    stamp();
    return rec;
}

}  // namespace

double tqp_score(const RunRecord& rec, double c_min, const TqpConfig& cfg) {
    if (!rec.bound) return 2 * cfg.timeout_s;
    double num = 1 + log_with_base(c_min + 1, cfg.log_base);
    double den = 1 + log_with_base(*rec.bound + 1, cfg.log_base);
    return rec.time_s + cfg.timeout_s * num / den;
}

double relative_quality(double c_a, double c_b, const TqpConfig& cfg) {
    if (c_a < 0 || c_b < 0) throw std::invalid_argument("bounds must be non-negative");
    return (1 + log_with_base(c_a + 1, cfg.log_base)) /
           (1 + log_with_base(c_b + 1, cfg.log_base));
}

SuiteReport run_suite(const std::vector<std::string>& instance_paths,
                      const SuiteConfig& cfg) {
    SuiteReport report;
    report.config = cfg;

    for (const std::string& path : instance_paths)
        for (const std::string& method : cfg.methods)
            report.records.push_back(run_one(path, method, cfg));

    // c_min per instance: the smallest bound any method returned.
    std::map<std::string, double> c_min;
    for (const RunRecord& r : report.records) {
        if (!r.bound) continue;
        auto it = c_min.find(r.instance);
        if (it == c_min.end() || *r.bound < it->second) c_min[r.instance] = *r.bound;
    }
    for (const RunRecord& r : report.records) {
        double cm = c_min.count(r.instance) ? c_min.at(r.instance) : 0.0;
        report.tqp_totals[r.method] += tqp_score(r, cm, cfg.tqp);
    }

    for (const std::string& a : cfg.methods) {
        for (const std::string& b : cfg.methods) {
            if (a == b) continue;
            std::vector<double> series;
            for (const std::string& path : instance_paths) {
                double ca = 0, cb = 0;
                for (const RunRecord& r : report.records) {
                    if (r.instance != path || !r.bound) continue;
                    if (r.method == a) ca = *r.bound;
                    if (r.method == b) cb = *r.bound;
                }
                series.push_back(relative_quality(ca, cb, cfg.tqp));
            }
            report.relative_quality_series[a + "/" + b] = std::move(series);
        }
    }
    return report;
}

void write_jsonl(const SuiteReport& report, std::ostream& out) {
    for (const RunRecord& r : report.records) out << record_json(r).dump() << "\n";
    nlohmann::json summary;
    summary["summary"] = true;
    summary["log_base"] = report.config.tqp.log_base;
    summary["timeout_s"] = report.config.tqp.timeout_s;
    summary["tqp_totals"] = report.tqp_totals;
    summary["relative_quality"] = report.relative_quality_series;
    out << summary.dump() << "\n";
}

void write_csv(const SuiteReport& report, std::ostream& out) {
    out << "instance,method,status,time_s,bound_log2,exact,seed,delta\n";
    for (const RunRecord& r : report.records) {
        out << r.instance << "," << r.method << "," << r.status << "," << r.time_s << ",";
        if (r.bound && *r.bound > 0) out << std::log2(*r.bound);
        out << "," << (r.exact ? "true" : "false") << "," << r.seed << "," << r.delta
            << "\n";
    }
}

}  // namespace mmc
