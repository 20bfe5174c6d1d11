#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stomap/diagram.hpp"
#include "stomap/matrix.hpp"

namespace stomap {

/// Matrix of a single generator.
StochasticMatrix eval(const Generator& g);

/// The structure-preserving evaluation of a term: identities to unit matrices,
/// tensor to block_diag, composition to matrix product. Result is cod x dom.
StochasticMatrix eval(const Diagram& d);

/// Evaluation of a slice form by applying each layer as a row operation to
/// the running matrix. Independent of eval(Diagram); both must agree.
StochasticMatrix eval_slices(const SliceForm& s);

/// Draws one output strand (1-based) for the given input strand (1-based) by
/// following a single token through the slices: s swaps it, e merges it,
/// c(λ) sends it left with probability λ. Throws NoInputError when dom == 0
/// and IndexError when input is out of range.
std::size_t sample(const Diagram& d, std::size_t input, std::uint64_t seed);

/// counts[k] is the number of draws that landed on output k+1.
std::vector<std::size_t> sample_histogram(const Diagram& d, std::size_t input,
                                          std::size_t draws, std::uint64_t seed);

/// Half the L1 distance between an empirical histogram and a distribution.
double total_variation(const std::vector<std::size_t>& counts,
                       std::span<const Scalar> expected);

}  // namespace stomap
