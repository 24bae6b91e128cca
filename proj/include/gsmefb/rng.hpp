// SPDX-License-Identifier: Apache-2.0
//
// gsmefb  GSM-aided mmWave MIMO link simulation with learned CSI feedback
// Copyright (C) 2026 gsmefb contributors
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

#ifndef GSMEFB_RNG_HPP
#define GSMEFB_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace gsmefb {

/// Deterministic random source. The engine is std::mt19937_64 (exactly
/// specified by the standard); all variate transforms are implemented here so
/// that streams are bit-identical across compilers and platforms.
///
/// Independent sub-streams are derived with fork(): forked generators depend
/// only on the parent seed and the stream id, never on how many draws the
/// parent has made, which keeps parallel generation independent of scheduling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal (Box-Muller, pair-cached).
    double normal();
    /// Circularly-symmetric complex Gaussian with E|z|^2 = 1.
    std::complex<double> cnormal();
    /// Zero-mean Laplace variate with the given standard deviation, truncated
    /// to |x| <= max_abs via inverse-CDF sampling (one uniform consumed).
    double truncated_laplace(double std_dev, double max_abs);

    /// Derived generator for sub-stream `stream` of this generator's seed.
    Rng fork(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 finalizer; used for seed derivation and stable hashing.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace gsmefb

#endif
