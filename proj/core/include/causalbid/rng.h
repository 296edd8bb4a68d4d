// Copyright 2026 The CausalBid Authors. All Rights Reserved.
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

#ifndef CAUSALBID_RNG_H_
#define CAUSALBID_RNG_H_

#include <cstdint>
#include <random>

namespace causalbid {

// Seedable random source used by every simulation in the library.
//
// Algorithm: the 64-bit Mersenne Twister (std::mt19937_64) whose state is
// initialized from SplitMix64(seed) and SplitMix64(stream) outputs through
// std::seed_seq. All variates are derived from raw 64-bit words by the
// transforms below (never from std:: distributions, whose output is
// implementation-defined):
//   Uniform()   : (word >> 11) * 2^-53, in [0, 1)
//   Normal()    : Box-Muller on two uniforms, no caching
//   Gamma(k)    : Marsaglia-Tsang squeeze, boosted by U^(1/k) for k < 1
//   Beta(a, b)  : X / (X + Y) with X ~ Gamma(a), Y ~ Gamma(b)
// A (seed, stream) pair fully determines the output sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t NextWord() { return engine_(); }

  double Uniform();
  double Normal();
  bool Bernoulli(double p);
  double Gamma(double shape);
  double Beta(double a, double b);

  // Independent child generator; deterministic in (parent seed, stream, tag).
  Rng Split(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

// One step of the SplitMix64 mixer.
std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace causalbid

#endif  // CAUSALBID_RNG_H_
