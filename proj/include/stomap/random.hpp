#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "stomap/scalar.hpp"

namespace stomap {

/// Seeded, platform-independent random source.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives integers by rejection sampling, so draws do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  mpz_class below(const mpz_class& bound);
  /// True with probability p (0 <= p <= 1), decided by an exact integer draw.
  bool bernoulli(const Scalar& p);

 private:
  std::mt19937_64 engine_;
};

}  // namespace stomap

namespace stomap {

/// Random probability k/d with d uniform in [1, max_denominator] and k in [0, d].
Scalar random_probability(Rng& rng, std::uint64_t max_denominator = 12);

}  // namespace stomap
