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

#include "walshforge/rng.hpp"

#include <vector>

namespace wf {

TracePoly random_trace_poly(const FieldCtx& ctx, int s, SplitMix64& rng) {
  const FieldElem a7(static_cast<std::uint32_t>(1 + rng.below(ctx.q() - 1)));
  std::vector<FieldElem> b(static_cast<std::size_t>(s) + 1);
  for (auto& bi : b) bi = FieldElem(static_cast<std::uint32_t>(rng.below(ctx.q())));
  return TracePoly(a7, std::move(b));
}

TracePoly corpus_poly(const FieldCtx& ctx, int s, std::uint64_t seed, std::uint64_t index) {
  auto rng = SplitMix64::stream(seed, index);
  return random_trace_poly(ctx, s, rng);
}

QuinticCurve random_curve(const FieldCtx& ctx, SplitMix64& rng) {
  QuinticCurve c;
  c.a = FieldElem(static_cast<std::uint32_t>(1 + rng.below(ctx.q() - 1)));
  c.b = FieldElem(static_cast<std::uint32_t>(rng.below(ctx.q())));
  c.c = FieldElem(static_cast<std::uint32_t>(rng.below(ctx.q())));
  c.d = FieldElem(static_cast<std::uint32_t>(rng.below(ctx.q())));
  return c;
}

}  // namespace wf
