/******************************************************************************
 * Copyright 2026 The vidsim Authors                                          *
 *                                                                            *
 * Licensed under the Apache License, Version 2.0 (the "License");            *
 * you may not use this file except in compliance with the License.           *
 * You may obtain a copy of the License at                                    *
 *                                                                            *
 *     http://www.apache.org/licenses/LICENSE-2.0                             *
 *                                                                            *
 * Unless required by applicable law or agreed to in writing, software        *
 * distributed under the License is distributed on an "AS IS" BASIS,          *
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.   *
 * See the License for the specific language governing permissions and       *
 * limitations under the License.                                             *
 ******************************************************************************/

#ifndef VIDSIM_RNG_H_
#define VIDSIM_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>

namespace vidsim {

/// Seeded random stream with hand-rolled variate transforms so that a given
/// seed yields the same sequence on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t NextU64() { return gen_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double NextDouble() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in (0, 1], safe as a log() argument.
  double NextDoublePositive() { return 1.0 - NextDouble(); }

  double Exponential(double mean) {
    return -mean * std::log(NextDoublePositive());
  }

  /// Standard normal via Box-Muller. One fresh pair per draw; the second
  /// value is discarded to keep the stream position draw-count addressable.
  double Gaussian() {
    const double u1 = NextDoublePositive();
    const double u2 = NextDouble();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Lognormal with mean 1 and coefficient of variation `cv`.
  double LogNormalUnitMean(double cv) {
    if (cv <= 0.0) return 1.0;
    const double sigma2 = std::log1p(cv * cv);
    const double sigma = std::sqrt(sigma2);
    return std::exp(-0.5 * sigma2 + sigma * Gaussian());
  }

  bool Bernoulli(double p) { return NextDouble() < p; }

  /// Derives an independent stream seed from a base seed and a stream tag
  /// (splitmix64 finalizer).
  static std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace vidsim

#endif  // VIDSIM_RNG_H_
