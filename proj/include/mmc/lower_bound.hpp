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

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace mmc {

enum class Method { ProjEnum, HashCount, MinLB, BruteForce };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::ProjEnum: return "projenum";
        case Method::HashCount: return "hashcount";
        case Method::MinLB: return "minlb";
        case Method::BruteForce: return "bruteforce";
    }
    return "?";
}

// A count of minimal models, or a lower bound on it. Exact results carry
// confidence 1 and an integer-valued count; hashing-based results carry the
// bound on a log2 scale with confidence 1 - delta.
struct LowerBoundResult {
    double count = 0;       // linear-scale bound
    double bound_log2 = -std::numeric_limits<double>::infinity();
    bool exact = false;
    double confidence = 1.0;
    Method method = Method::ProjEnum;
    double elapsed_s = 0;
    std::optional<double> oracle_log2;  // log2 |MM(F)| when a reference is known

    static LowerBoundResult from_count(double count, bool exact, Method method) {
        LowerBoundResult r;
        r.count = count;
        r.bound_log2 = count > 0 ? std::log2(count)
                                 : -std::numeric_limits<double>::infinity();
        r.exact = exact;
        r.confidence = 1.0;
        r.method = method;
        return r;
    }

    static LowerBoundResult from_log2(double bound_log2, double confidence, Method method) {
        LowerBoundResult r;
        r.count = std::exp2(bound_log2);
        r.bound_log2 = bound_log2;
        r.exact = false;
        r.confidence = confidence;
        r.method = method;
        return r;
    }
};

}  // namespace mmc
