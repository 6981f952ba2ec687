// Copyright 2026 The walsh-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WALSHFORGE_RNG_HPP_
#define WALSHFORGE_RNG_HPP_

#include <cstdint>

#include "walshforge/boolfn.hpp"

namespace wf {

// SplitMix64. State update s <- s + 0x9E3779B97F4A7C15, output
//   z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // next() mod n; n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Independent stream for item `index` of a corpus drawn from `seed`:
  // initial state mix(seed ^ mix(index + 1)).
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index + 1)));
  }

 private:
  std::uint64_t state_;
};

// a7 uniform in k* (1 + below(q - 1)), then b_0..b_s uniform in k.
TracePoly random_trace_poly(const FieldCtx& ctx, int s, SplitMix64& rng);

// Item `index` of the corpus (seed, s).
TracePoly corpus_poly(const FieldCtx& ctx, int s, std::uint64_t seed, std::uint64_t index);

// a uniform in k*, then b, c, d uniform in k.
QuinticCurve random_curve(const FieldCtx& ctx, SplitMix64& rng);

}  // namespace wf

#endif  // WALSHFORGE_RNG_HPP_
