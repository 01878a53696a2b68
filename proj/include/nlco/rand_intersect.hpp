// Copyright 2026 The nlco Authors.
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

// Randomized optimization over common bases of two vectorial matroids:
// det(M1 diag(gamma) M2^T) expands as sum_u g_u(a) b^u over images u = Wx of
// common bases x, so its support (recovered by interpolation along the
// moment curve) is a random subset of the image set.

#ifndef NLCO_RAND_INTERSECT_HPP_
#define NLCO_RAND_INTERSECT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nlco/arith.hpp"
#include "nlco/lp.hpp"
#include "nlco/matroid.hpp"
#include "nlco/objective.hpp"
#include "nlco/random.hpp"

namespace nlco {

struct InterpolationOptions {
  std::size_t point_cap = 2048;    // max (z+1)^d
  std::size_t digit_cap = 1000000;  // max decimal digits of a gamma_j(t)
  std::size_t threads = 1;
};

// z = r * max W_ij.
std::size_t SupportBound(const VectorialMatroidPair& pair, const IntMatrix& w);

// det(M1 diag(gamma(t)) M2^T) with gamma_j = a_j prod_i t^(W_ij (z+1)^i).
// Throws kPrecondition for negative W or nonpositive a, t and kCapExceeded
// past the digit cap.
Integer gamma_subst_det(const VectorialMatroidPair& pair, const IntMatrix& w,
                        std::span<const Integer> a, const Integer& t,
                        const InterpolationOptions& options = {});

// g_u(a) for every u in Z = {0, ..., z}^d.
struct SupportPolynomial {
  std::size_t z = 0;
  std::size_t d = 0;
  IntVector a;
  std::vector<Integer> coefficients;  // at index sum_k u_k (z+1)^k

  std::size_t index(std::span<const Integer> u) const;  // u must lie in Z
  IntVector point(std::size_t index) const;
  Integer coefficient(std::span<const Integer> u) const;  // 0 outside Z
  // u with g_u != 0, in index order.
  std::vector<IntVector> support() const;
};

SupportPolynomial interpolate_support(const VectorialMatroidPair& pair,
                                      const IntMatrix& w,
                                      std::span<const Integer> a,
                                      const InterpolationOptions& options = {});

struct RandomRun {
  std::uint64_t seed = 0;
  std::uint64_t s = 0;
  IntVector draws;
  std::optional<IntVector> outcome;  // absent: empty support (virtual point)
};

// 2 r (n + 1).
std::uint64_t DefaultRange(std::size_t r, std::size_t n);

// Draws a in {1..s}^n from `rng`, then returns the f-best u of the support
// (ties to the lexicographically smallest u). `seed` is recorded only.
RandomRun random_image_optimum(const VectorialMatroidPair& pair,
                               const IntMatrix& w, const ObjectiveOracle& f,
                               Sense sense, Rng& rng, std::uint64_t s,
                               std::uint64_t seed,
                               const InterpolationOptions& options = {});
RandomRun random_image_optimum(const VectorialMatroidPair& pair,
                               const IntMatrix& w, const ObjectiveOracle& f,
                               Sense sense, std::uint64_t seed,
                               const InterpolationOptions& options = {});

// Image optimum of a subproblem (restricted pair and weights); nullopt stands
// for the virtual point at -infinity (+infinity when minimizing).
using ImageOptimum = std::function<std::optional<IntVector>(
    const VectorialMatroidPair& sub, const IntMatrix& w_sub, Rng& rng)>;

// `seed` is only recorded in the logged runs.
ImageOptimum RandomizedImageOptimum(const ObjectiveOracle& f, Sense sense,
                                    std::uint64_t s, std::uint64_t seed,
                                    const InterpolationOptions& options = {},
                                    std::vector<RandomRun>* log = nullptr);
// Exact optimum by enumerating common bases of the subproblem.
ImageOptimum BruteForceImageOptimum(const ObjectiveOracle& f, Sense sense);

struct CommonBaseResult {
  std::vector<std::size_t> base;  // sorted, 0-based
  IntVector x;
  IntVector u;  // W x for the caller's W
  ObjectiveValue value;
  std::uint64_t seed = 0;  // seed of the selected repeat
  std::size_t valid_repeats = 0;
  std::vector<RandomRun> runs;  // subproblem draws of the selected repeat
};

struct CommonBaseOptions {
  std::uint64_t seed = 0;
  std::size_t repeats = 1;
  std::optional<std::uint64_t> range;  // s; default 2 r (n + 1)
  InterpolationOptions interpolation;
};

// One pass of the deletion loop: S = N, u* = opt(N); for each j, T = S \ {j}
// is kept iff rank(M1.T) = rank(M2.T) = r and f(opt(T)) >= f(u*). Returns
// the final S.
std::vector<std::size_t> DeletionLoop(const VectorialMatroidPair& pair,
                                      const IntMatrix& w,
                                      const ObjectiveOracle& f, Sense sense,
                                      const ImageOptimum& opt, Rng& rng);

// Shifts W to be nonnegative, runs the deletion loop `repeats` times with
// derived seeds and randomized image optima, and returns the f-best final S
// that is a common base. Throws kRandomizedFailure if none is.
CommonBaseResult optimal_common_base(const VectorialMatroidPair& pair,
                                     const IntMatrix& w,
                                     const ObjectiveOracle& f, Sense sense,
                                     const CommonBaseOptions& options = {});

// Same loop with BruteForceImageOptimum; exact whenever the loop is.
CommonBaseResult optimal_common_base_deterministic(
    const VectorialMatroidPair& pair, const IntMatrix& w,
    const ObjectiveOracle& f, Sense sense);

// Seed of repeat k: the seed itself for k = 0, then a SplitMix64 chain.
std::uint64_t RepeatSeed(std::uint64_t seed, std::size_t k);

}  // namespace nlco

#endif  // NLCO_RAND_INTERSECT_HPP_
