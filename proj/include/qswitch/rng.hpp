// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Deterministic random numbers for the simulated counting experiments.
//
// Every sampled quantity draws from its own SplitMix64 stream, keyed by the
// user seed plus a tuple of structural indices (configuration, projector,
// trial, ...). Results are therefore bit-reproducible for a given seed and
// independent of evaluation order, which keeps multi-threaded runs identical
// to single-threaded ones.

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "qswitch/errors.hpp"

namespace qsw {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 output scrambler (Steele, Lea & Flood); also reused below as a
// hash for deriving substream keys.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// SplitMix64: tiny, fast, and statistically solid for this workload's stream
// counts. Not cryptographic.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return double(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Derives a stream seed from the user seed and a tuple of indices. Distinct
// tuples give unrelated streams; the mixing also decorrelates nearby user
// seeds.
inline std::uint64_t substream_key(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
  std::uint64_t k = detail::mix64(seed + detail::kGolden);
  for (std::uint64_t id : ids) {
    k = detail::mix64(k + detail::kGolden * (id + 1));
  }
  return k;
}

// Poisson sampling. Knuth's product-of-uniforms inversion below mean 10,
// Hormann's transformed rejection (PTRS) above, so both large and small
// expected counts stay O(1) per draw.
inline std::uint64_t poisson_sample(double mean, SplitMix64& rng) {
  if (!std::isfinite(mean)) throw validation_error("poisson_sample: mean must be finite");
  if (mean <= 0.0) return 0;

  if (mean < 10.0) {
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= rng.next_double();
    } while (p > limit);
    return k - 1;
  }

  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = rng.next_double() - 0.5;
    const double v = rng.next_double();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b);
    const double rhs = kf * loglam - mean - std::lgamma(kf + 1.0);
    if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace qsw
