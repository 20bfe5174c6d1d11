#pragma once

#include <cstddef>
#include <span>

#include "stomap/diagram.hpp"
#include "stomap/scalar.hpp"

namespace stomap {

/// Cyclic permutation on n strands moving the leftmost strand to the right:
/// z(1) = id(1), z(n+1) = (id(n-1) * s) ∘ (z(n) * id(1)). Throws DomainError for n == 0.
Diagram z(std::size_t n);

/// Inverse of z(n), built by the mirrored recursion
/// zinv(n+1) = (zinv(n) * id(1)) ∘ (id(n-1) * s).
Diagram z_inv(std::size_t n);

/// Coalescer [m*n] -> [n] merging m groups of n strands pointwise.
///
/// p(2,0) = id(0), p(2,n+1) = (p(2,n) * e) ∘ (id(n) * z(n+2)),
/// p(m+1,n) = p(2,n) ∘ (p(m,n) * id(n)); p(1,n) = id(n), p(0,n) = del^n.
/// Results are memoized.
Diagram p(std::size_t m, std::size_t n);

/// Single-strand inclusion [1] -> [n] onto strand j (1-based):
/// del^(j-1) * id(1) * del^(n-j). Throws IndexError unless 1 <= j <= n.
Diagram iota(std::size_t j, std::size_t n);

/// Column diagram [1] -> [n] from n-1 branch probabilities:
/// (id(n-2) * c(λ[n-1])) ∘ ... ∘ (id(1) * c(λ[2])) ∘ c(λ[1]); id(1) for n == 1.
/// Throws ArityError if lambdas.size() != n-1 or n == 0.
Diagram column_diagram(std::span<const Scalar> lambdas, std::size_t n);

}  // namespace stomap
