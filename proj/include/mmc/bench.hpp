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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mmc {

struct RunRecord {
    std::string instance;
    std::string method;
    std::string status;  // "ok", "timeout", "refused" or "parse_error"
    double time_s = 0;
    std::optional<double> bound;  // linear-scale lower bound, absent if none
    bool exact = false;
    uint64_t seed = 0;
    double delta = 0;
};

struct TqpConfig {
    double timeout_s = 5000;
    double log_base = 10;
};

// Time-quality penalty: 2T without a bound, otherwise runtime plus the
// timeout scaled by how far the bound trails the best bound on the instance.
// Lower is better.
double tqp_score(const RunRecord& rec, double c_min, const TqpConfig& cfg);

// (1 + log(C_A + 1)) / (1 + log(C_B + 1)); above 1 iff A's bound is better.
double relative_quality(double c_a, double c_b, const TqpConfig& cfg);

struct SuiteConfig {
    std::vector<std::string> methods;  // of projenum, hashcount, minlb, bruteforce
    TqpConfig tqp;
    double delta = 0.2;
    uint64_t seed = 0;
    int cut_limit = 50;
    uint64_t cap = 1'000'000;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<RunRecord> records;  // ordered by (instance, method)
    std::map<std::string, double> tqp_totals;  // per method
    // Per ordered method pair, the per-instance relative qualities
    // (missing bounds enter as 0).
    std::map<std::string, std::vector<double>> relative_quality_series;  // "A/B"
};

// Runs every enabled method on every instance file. Per-instance failures
// are recorded as no-bound rows; the suite never aborts.
SuiteReport run_suite(const std::vector<std::string>& instance_paths,
                      const SuiteConfig& cfg);

// One JSON object per record, then a summary object.
void write_jsonl(const SuiteReport& report, std::ostream& out);
// Same rows as CSV with a header line.
void write_csv(const SuiteReport& report, std::ostream& out);

}  // namespace mmc
