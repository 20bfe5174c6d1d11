#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stomap/diagram.hpp"
#include "stomap/matrix.hpp"

namespace stomap {

/// Branch probabilities of a column diagram [1] -> [n].
///
/// Canonical form: once the mass above some position is exhausted, every later
/// probability is 0.
struct ColumnSpec {
  std::vector<Scalar> lambdas;  // size n - 1
  std::size_t n = 1;

  friend bool operator==(const ColumnSpec&, const ColumnSpec&) = default;
};

/// Solves λ_j = μ_j / (1 - μ_1 - ... - μ_{j-1}) for an n x 1 column, taking
/// 0 whenever the denominator vanishes. Throws NoSynthesisError for n == 0 and
/// DimensionError when the input has more than one column.
ColumnSpec synth_column(const StochasticMatrix& col);

/// column_diagram(spec.lambdas, spec.n).
Diagram to_diagram(const ColumnSpec& spec);

/// Canonical diagram with eval(synth_matrix(a)) == a:
///   cols == 0  ->  del^rows
///   cols == 1  ->  the column diagram
///   otherwise  ->  p(cols, rows) ∘ (col_1 * ... * col_cols)
Diagram synth_matrix(const StochasticMatrix& a);

/// Normalization by evaluation: synth_matrix(eval(d)).
Diagram normalize(const Diagram& d);

/// Printed canonical form of d; equal strings iff equal morphisms.
std::string canonical_text(const Diagram& d);

/// True iff both diagrams have the same shape and evaluate to the same matrix.
bool equal(const Diagram& a, const Diagram& b);

}  // namespace stomap
