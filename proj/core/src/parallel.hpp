// SPDX-License-Identifier: Apache-2.0
//
// irsim - simulation and optimization toolkit for distributed-IRS assisted
// multi-user MISO downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSIM_SRC_PARALLEL_HPP
#define IRSIM_SRC_PARALLEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace irsim::detail
{

// Worker count: IRSIM_THREADS when set, otherwise hardware concurrency.
inline unsigned thread_count()
{
    if (const char* env = std::getenv("IRSIM_THREADS"))
    {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1)
            return (unsigned)n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

// Run fn(begin, end) over a partition of [0, n) into contiguous chunks, one
// per worker. Results must be written to per-index or per-chunk slots; the
// caller reduces them in canonical order so the outcome does not depend on
// the schedule. A worker exception is rethrown on the calling thread after
// every worker has joined (the lowest chunk's exception wins).
inline void parallel_chunks(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn)
{
    if (n == 0)
        return;
    const unsigned workers = (unsigned)std::min<std::uint64_t>(thread_count(), n);
    if (workers <= 1)
    {
        fn(0, n, 0);
        return;
    }
    const std::uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
    {
        const std::uint64_t begin = (std::uint64_t)w * chunk;
        const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, n);
        if (begin >= end)
            break;
        pool.emplace_back(
            [&fn, &errors, begin, end, w]
            {
                try
                {
                    fn(begin, end, w);
                }
                catch (...)
                {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto& t : pool)
        t.join();
    for (const auto& error : errors)
        if (error)
            std::rethrow_exception(error);
}

// Compensated (Neumaier) accumulator for order-stable reductions.
class CompensatedSum
{
  public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace irsim::detail

#endif
