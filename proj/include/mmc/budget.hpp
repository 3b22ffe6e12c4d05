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

#include <algorithm>
#include <chrono>

namespace mmc {

// Wall-clock time budget shared across oracle calls. Copies share the same
// deadline, so handing a Budget down a call chain deducts from one pool.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    static Budget unlimited() { return Budget(Clock::time_point::max()); }
    static Budget seconds(double s) {
        if (s <= 0) return Budget(Clock::now());
        return Budget(Clock::now() +
                      std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(s)));
    }

    bool expired() const {
        return deadline_ != Clock::time_point::max() && Clock::now() >= deadline_;
    }

    double remaining_s() const {
        if (deadline_ == Clock::time_point::max()) return 1e18;
        return std::max(0.0, std::chrono::duration<double>(deadline_ - Clock::now()).count());
    }

    // The earlier of this deadline and `now + s`.
    Budget capped_at(double s) const {
        Budget sub = seconds(s);
        return Budget(std::min(deadline_, sub.deadline_));
    }

private:
    explicit Budget(Clock::time_point deadline) : deadline_(deadline) {}
    Clock::time_point deadline_;
};

}  // namespace mmc
