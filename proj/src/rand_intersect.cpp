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

#include "nlco/rand_intersect.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "nlco/parallel.hpp"
#include "nlco/weights.hpp"

namespace nlco {

namespace {

void CheckWeights(const VectorialMatroidPair& pair, const IntMatrix& w) {
  if (w.cols() != pair.n() || w.rows() == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "W must have one column per ground-set element");
  }
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (const Integer& x : w.row(i))
      if (sgn(x) < 0) {
        throw Error(ErrorKind::kPrecondition,
                    "W must be nonnegative; shift it first");
      }
}

// Evaluates t -> det(M1 diag(gamma(t)) M2^T) for fixed pair, W, a.
class SubstitutedDeterminant {
 public:
  SubstitutedDeterminant(const VectorialMatroidPair& pair, const IntMatrix& w,
                         std::span<const Integer> a,
                         const InterpolationOptions& options)
      : pair_(pair), a_(a.begin(), a.end()), digit_cap_(options.digit_cap) {
    CheckWeights(pair, w);
    if (a.size() != pair.n()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "substitution needs one a_j per ground-set element");
    }
    for (const Integer& v : a_) {
      if (sgn(v) <= 0) {
        throw Error(ErrorKind::kPrecondition, "substituted a_j must be positive");
      }
    }
    const Integer base = Integer(static_cast<unsigned long>(SupportBound(pair, w))) + 1;
    exponents_.assign(pair.n(), Integer(0));
    Integer power = 1;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      for (std::size_t j = 0; j < pair.n(); ++j) exponents_[j] += w(i, j) * power;
      power *= base;
    }
    max_exponent_ = *std::max_element(exponents_.begin(), exponents_.end());
  }

  Integer operator()(const Integer& t) const {
    if (sgn(t) <= 0) throw Error(ErrorKind::kPrecondition, "t must be positive");
    std::vector<Integer> gamma(a_);
    if (t != 1) {
      const double digits =
          max_exponent_.get_d() * std::log10(t.get_d()) + 1.0;
      if (digits > static_cast<double>(digit_cap_) ||
          !max_exponent_.fits_ulong_p()) {
        throw Error(ErrorKind::kCapExceeded,
                    "substituted entries would have about " +
                        std::to_string(static_cast<long long>(digits)) +
                        " digits, cap is " + std::to_string(digit_cap_));
      }
      Integer tp;
      for (std::size_t j = 0; j < gamma.size(); ++j) {
        mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), exponents_[j].get_ui());
        gamma[j] *= tp;
      }
    }
    const std::size_t r = pair_.r();
    IntMatrix product(r, r, Integer(0));
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = 0; l < r; ++l) {
        Integer s = 0;
        for (std::size_t j = 0; j < pair_.n(); ++j) {
          if (sgn(pair_.m1()(k, j)) == 0 || sgn(pair_.m2()(l, j)) == 0) continue;
          s += pair_.m1()(k, j) * gamma[j] * pair_.m2()(l, j);
        }
        product(k, l) = std::move(s);
      }
    }
    return bigint_det(product);
  }

 private:
  const VectorialMatroidPair& pair_;
  IntVector a_;
  std::size_t digit_cap_;
  IntVector exponents_;
  Integer max_exponent_;
};

// Inverse of the K x K matrix V[t-1][k] = t^k (t = 1..K), stored as an integer
// matrix over the common denominator (K-1)!. Built from Lagrange basis
// polynomials prod_{s != t} (x - s) / (t - s).
struct VandermondeInverse {
  std::size_t size = 0;
  Integer denominator;
  IntMatrix numerators;  // [k][t-1]
};

std::shared_ptr<const VandermondeInverse> BuildInverse(std::size_t size) {
  auto inv = std::make_shared<VandermondeInverse>();
  inv->size = size;
  mpz_fac_ui(inv->denominator.get_mpz_t(), size - 1);
  inv->numerators = IntMatrix(size, size, Integer(0));

  std::vector<Integer> master{Integer(1)};  // prod_s (x - s), low degree first
  for (std::size_t s = 1; s <= size; ++s) {
    std::vector<Integer> next(master.size() + 1, Integer(0));
    for (std::size_t k = 0; k < master.size(); ++k) {
      next[k + 1] += master[k];
      next[k] -= master[k] * static_cast<unsigned long>(s);
    }
    master = std::move(next);
  }

  std::vector<Integer> quotient(size);
  for (std::size_t t = 1; t <= size; ++t) {
    // master / (x - t) by synthetic division.
    quotient[size - 1] = master[size];
    for (std::size_t k = size - 1; k > 0; --k) {
      quotient[k - 1] = master[k] + quotient[k] * static_cast<unsigned long>(t);
    }
    Integer node_product = 1;  // prod_{s != t} (t - s)
    for (std::size_t s = 1; s <= size; ++s) {
      if (s != t) node_product *= Integer(static_cast<long>(t) - static_cast<long>(s));
    }
    Integer scale;
    mpz_divexact(scale.get_mpz_t(), inv->denominator.get_mpz_t(),
                 node_product.get_mpz_t());
    for (std::size_t k = 0; k < size; ++k) {
      inv->numerators(k, t - 1) = quotient[k] * scale;
    }
  }
  return inv;
}

std::shared_ptr<const VandermondeInverse> CachedInverse(std::size_t size) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const VandermondeInverse>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(size);
    if (it != cache.end()) return it->second;
  }
  auto inv = BuildInverse(size);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(size, std::move(inv)).first->second;
}

// Is a at least as good as b, with nullopt as the worst possible value?
bool AtLeast(const std::optional<IntVector>& a, const std::optional<IntVector>& b,
             const ObjectiveOracle& f, Sense sense) {
  if (!b) return true;
  if (!a) return false;
  const std::strong_ordering c = f.compare(*a, *b);
  return sense == Sense::kMax ? c >= 0 : c <= 0;
}

// f-best u of `candidates` (ties to the lexicographically smallest).
std::optional<IntVector> BestImage(const std::vector<IntVector>& candidates,
                                   const ObjectiveOracle& f, Sense sense) {
  std::optional<IntVector> best;
  for (const IntVector& u : candidates) {
    if (!best) {
      best = u;
      continue;
    }
    std::strong_ordering c = f.compare(u, *best);
    if (sense == Sense::kMin) c = 0 <=> c;
    if (c > 0 || (c == 0 && LexLess(u, *best))) best = u;
  }
  return best;
}

CommonBaseResult RunRepeats(const VectorialMatroidPair& pair, const IntMatrix& w,
                            const ObjectiveOracle& f, Sense sense,
                            const CommonBaseOptions& options, bool randomized) {
  if (w.cols() != pair.n() || w.rows() == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "W must have one column per ground-set element");
  }
  if (options.repeats == 0) {
    throw Error(ErrorKind::kInvalidArgument, "repeats must be positive");
  }
  const ShiftedProblem shifted =
      nonneg_shift(w, Integer(static_cast<unsigned long>(pair.r())), f);
  const std::uint64_t s = options.range.value_or(DefaultRange(pair.r(), pair.n()));

  std::optional<CommonBaseResult> best;
  std::size_t valid = 0;
  for (std::size_t k = 0; k < options.repeats; ++k) {
    const std::uint64_t seed = RepeatSeed(options.seed, k);
    Rng rng(seed);
    std::vector<RandomRun> log;
    const ImageOptimum opt =
        randomized ? RandomizedImageOptimum(shifted.f, sense, s, seed,
                                            options.interpolation, &log)
                   : BruteForceImageOptimum(shifted.f, sense);
    std::vector<std::size_t> base =
        DeletionLoop(pair, shifted.w, shifted.f, sense, opt, rng);
    if (!is_common_base(pair, base)) continue;
    ++valid;

    CommonBaseResult candidate;
    candidate.x = CharacteristicVector(base, pair.n());
    candidate.u = Multiply(w, candidate.x);
    candidate.value = f.evaluate(candidate.u);
    candidate.base = std::move(base);
    candidate.seed = seed;
    candidate.runs = std::move(log);
    if (best) {
      std::strong_ordering c = candidate.value <=> best->value;
      if (sense == Sense::kMin) c = 0 <=> c;
      if (c < 0 || (c == 0 && !LexLess(candidate.u, best->u))) continue;
    }
    best = std::move(candidate);
  }
  if (!best) {
    throw Error(ErrorKind::kRandomizedFailure,
                "no repeat produced a common base (" +
                    std::to_string(options.repeats) + " repeats)");
  }
  best->valid_repeats = valid;
  return *best;
}

}  // namespace

std::size_t SupportBound(const VectorialMatroidPair& pair, const IntMatrix& w) {
  Integer max_w = 0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (const Integer& x : w.row(i)) max_w = std::max(max_w, x);
  const Integer z = max_w * static_cast<unsigned long>(pair.r());
  if (!z.fits_ulong_p()) {
    throw Error(ErrorKind::kCapExceeded, "weights too large for interpolation");
  }
  return z.get_ui();
}

Integer gamma_subst_det(const VectorialMatroidPair& pair, const IntMatrix& w,
                        std::span<const Integer> a, const Integer& t,
                        const InterpolationOptions& options) {
  return SubstitutedDeterminant(pair, w, a, options)(t);
}

std::size_t SupportPolynomial::index(std::span<const Integer> u) const {
  std::size_t idx = 0, power = 1;
  for (std::size_t k = 0; k < d; ++k) {
    idx += u[k].get_ui() * power;
    power *= z + 1;
  }
  return idx;
}

IntVector SupportPolynomial::point(std::size_t idx) const {
  IntVector u(d);
  for (std::size_t k = 0; k < d; ++k) {
    u[k] = static_cast<unsigned long>(idx % (z + 1));
    idx /= z + 1;
  }
  return u;
}

Integer SupportPolynomial::coefficient(std::span<const Integer> u) const {
  if (u.size() != d) return 0;
  for (const Integer& v : u) {
    if (sgn(v) < 0 || v > static_cast<unsigned long>(z)) return 0;
  }
  return coefficients[index(u)];
}

std::vector<IntVector> SupportPolynomial::support() const {
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (sgn(coefficients[k]) != 0) out.push_back(point(k));
  }
  return out;
}

SupportPolynomial interpolate_support(const VectorialMatroidPair& pair,
                                      const IntMatrix& w,
                                      std::span<const Integer> a,
                                      const InterpolationOptions& options) {
  const SubstitutedDeterminant det(pair, w, a, options);
  SupportPolynomial out;
  out.z = SupportBound(pair, w);
  out.d = w.rows();
  out.a.assign(a.begin(), a.end());

  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), out.z + 1, out.d);
  if (count > static_cast<unsigned long>(options.point_cap)) {
    throw Error(ErrorKind::kCapExceeded,
                "interpolation needs " + count.get_str() +
                    " points, cap is " + std::to_string(options.point_cap));
  }
  const std::size_t size = count.get_ui();

  std::vector<Integer> values(size);
  parallel_for(size, options.threads, [&](std::size_t k) {
    values[k] = det(Integer(static_cast<unsigned long>(k + 1)));
  });

  const auto inv = CachedInverse(size);
  out.coefficients.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    Integer acc = 0;
    for (std::size_t t = 0; t < size; ++t) {
      if (sgn(values[t]) != 0) acc += inv->numerators(k, t) * values[t];
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), inv->denominator.get_mpz_t())) {
      throw Error(ErrorKind::kInternal,
                  "interpolation produced a non-integer coefficient");
    }
    mpz_divexact(out.coefficients[k].get_mpz_t(), acc.get_mpz_t(),
                 inv->denominator.get_mpz_t());
  }
  return out;
}

std::uint64_t DefaultRange(std::size_t r, std::size_t n) {
  return 2 * static_cast<std::uint64_t>(r) * (static_cast<std::uint64_t>(n) + 1);
}

RandomRun random_image_optimum(const VectorialMatroidPair& pair,
                               const IntMatrix& w, const ObjectiveOracle& f,
                               Sense sense, Rng& rng, std::uint64_t s,
                               std::uint64_t seed,
                               const InterpolationOptions& options) {
  if (s == 0) throw Error(ErrorKind::kInvalidArgument, "range s must be positive");
  RandomRun run;
  run.seed = seed;
  run.s = s;
  run.draws.reserve(pair.n());
  for (std::size_t j = 0; j < pair.n(); ++j) {
    run.draws.emplace_back(static_cast<unsigned long>(UniformBelow(rng, s) + 1));
  }
  const SupportPolynomial poly = interpolate_support(pair, w, run.draws, options);
  run.outcome = BestImage(poly.support(), f, sense);
  return run;
}

RandomRun random_image_optimum(const VectorialMatroidPair& pair,
                               const IntMatrix& w, const ObjectiveOracle& f,
                               Sense sense, std::uint64_t seed,
                               const InterpolationOptions& options) {
  Rng rng(seed);
  return random_image_optimum(pair, w, f, sense, rng,
                              DefaultRange(pair.r(), pair.n()), seed, options);
}

ImageOptimum RandomizedImageOptimum(const ObjectiveOracle& f, Sense sense,
                                    std::uint64_t s, std::uint64_t seed,
                                    const InterpolationOptions& options,
                                    std::vector<RandomRun>* log) {
  return [f, sense, s, seed, options, log](const VectorialMatroidPair& sub,
                                           const IntMatrix& w_sub, Rng& rng) {
    RandomRun run = random_image_optimum(sub, w_sub, f, sense, rng, s, seed, options);
    std::optional<IntVector> outcome = run.outcome;
    if (log) log->push_back(std::move(run));
    return outcome;
  };
}

ImageOptimum BruteForceImageOptimum(const ObjectiveOracle& f, Sense sense) {
  return [f, sense](const VectorialMatroidPair& sub, const IntMatrix& w_sub,
                    Rng&) {
    std::vector<IntVector> images;
    for (const auto& base : common_bases(sub)) {
      images.push_back(Multiply(w_sub, CharacteristicVector(base, sub.n())));
    }
    return BestImage(images, f, sense);
  };
}

std::vector<std::size_t> DeletionLoop(const VectorialMatroidPair& pair,
                                      const IntMatrix& w,
                                      const ObjectiveOracle& f, Sense sense,
                                      const ImageOptimum& opt, Rng& rng) {
  std::vector<std::size_t> s(pair.n());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = j;
  const std::optional<IntVector> u_star = opt(pair, w, rng);
  for (std::size_t j = 0; j < pair.n(); ++j) {
    std::vector<std::size_t> t;
    for (std::size_t k : s) {
      if (k != j) t.push_back(k);
    }
    if (t.empty()) continue;
    const Restriction sub = restrict(pair, t);
    if (gaussian_rank(sub.pair.m1()) != pair.r() ||
        gaussian_rank(sub.pair.m2()) != pair.r()) {
      continue;
    }
    const std::optional<IntVector> u_t =
        opt(sub.pair, w.select_columns(sub.columns), rng);
    if (AtLeast(u_t, u_star, f, sense)) s = std::move(t);
  }
  return s;
}

std::uint64_t RepeatSeed(std::uint64_t seed, std::size_t k) {
  std::uint64_t out = seed;
  for (std::size_t i = 0; i < k; ++i) out = SplitMix64(out);
  return out;
}

CommonBaseResult optimal_common_base(const VectorialMatroidPair& pair,
                                     const IntMatrix& w,
                                     const ObjectiveOracle& f, Sense sense,
                                     const CommonBaseOptions& options) {
  return RunRepeats(pair, w, f, sense, options, /*randomized=*/true);
}

CommonBaseResult optimal_common_base_deterministic(
    const VectorialMatroidPair& pair, const IntMatrix& w,
    const ObjectiveOracle& f, Sense sense) {
  CommonBaseOptions options;
  try {
    return RunRepeats(pair, w, f, sense, options, /*randomized=*/false);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kRandomizedFailure) throw;
    throw Error(ErrorKind::kInternal, "deletion loop ended on a non-base");
  }
}

}  // namespace nlco
