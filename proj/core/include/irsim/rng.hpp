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

#ifndef IRSIM_RNG_HPP
#define IRSIM_RNG_HPP

#include <complex>
#include <cstdint>

#include "irsim/units.hpp"

namespace irsim
{

// Counter-based random stream keyed by (seed, trial, link). Every stream is an
// independent splitmix64 sequence whose initial state is derived by mixing the
// key, so Monte-Carlo trials can be scheduled on any number of threads and
// still reproduce the exact per-trial draws.
class RngStream
{
  public:
    RngStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t link)
        : state_(mix(mix(mix(seed) ^ golden(trial + 1)) ^ golden(link + 1)))
    {
    }

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1]; never returns 0 so it is safe under a logarithm.
    double next_uniform()
    {
        return (double)((next_u64() >> 11) + 1ULL) * 0x1.0p-53;
    }

    // Standard circularly-symmetric complex Gaussian CN(0,1): real and
    // imaginary parts each N(0, 1/2). Polar Box-Muller on two uniforms.
    std::complex<double> next_cgauss()
    {
        double radius = std::sqrt(-std::log(next_uniform()));
        double angle = 2.0 * pi * next_uniform();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    // Unbiased integer in [0, n)
    std::uint64_t next_below(std::uint64_t n)
    {
        const std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t draw;
        do
        {
            draw = next_u64();
        } while (draw >= limit);
        return draw % n;
    }

  private:
    static std::uint64_t golden(std::uint64_t x) { return x * 0x9E3779B97F4A7C15ULL; }

    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace irsim

#endif
