#include "stomap/random.hpp"

#include "stomap/error.hpp"

namespace stomap {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

mpz_class Rng::below(const mpz_class& bound) {
  if (bound <= 0) throw DomainError("Rng::below of a non-positive bound");
  if (bound.fits_ulong_p()) {
    return mpz_class(static_cast<unsigned long>(below(std::uint64_t{bound.get_ui()})));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    mpz_class x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      const std::uint64_t v = next();
      x += mpz_class(static_cast<unsigned long>(v >> 32)) << 32;
      x += mpz_class(static_cast<unsigned long>(v & 0xffffffffULL));
    }
    // Trim to the bit length of bound, then reject overshoot.
    x >>= words * 64 - bits;
    if (x < bound) return x;
  }
}

bool Rng::bernoulli(const Scalar& p) {
  if (p.is_zero()) return false;
  if (p.is_one()) return true;
  return below(p.denominator()) < p.numerator();
}

}  // namespace stomap

namespace stomap {

Scalar random_probability(Rng& rng, std::uint64_t max_denominator) {
  const std::uint64_t den = 1 + rng.below(max_denominator);
  return Scalar(rng.below(den + 1), den);
}

}  // namespace stomap
