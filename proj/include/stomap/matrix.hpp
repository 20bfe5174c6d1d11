#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stomap/scalar.hpp"

namespace stomap {

/// Exact column-stochastic matrix of shape rows x cols, a morphism [cols] -> [rows].
///
/// Entries are stored column-major. Every constructor validates that entries
/// are non-negative and each column sums to exactly 1; the shape 0 x m is only
/// admitted for m = 0, while n x 0 is admitted for every n.
class StochasticMatrix {
 public:
  /// The 0 x 0 matrix, identity of the object [0].
  StochasticMatrix() = default;

  /// Column-major entries; throws NotStochasticError on invalid data.
  StochasticMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  /// Builds from row vectors. An empty list yields 0 x 0; use empty() for n x 0.
  static StochasticMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static StochasticMatrix identity(std::size_t n);
  /// The unique n x 0 matrix.
  static StochasticMatrix empty(std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// 0-based access.
  const Scalar& at(std::size_t row, std::size_t col) const;
  std::span<const Scalar> entries() const noexcept { return entries_; }
  /// 0-based view of one column.
  std::span<const Scalar> column_view(std::size_t col) const;

  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

 private:
  struct Unchecked {};
  StochasticMatrix(Unchecked, std::size_t rows, std::size_t cols,
                   std::vector<Scalar> entries);
  void validate() const;

  friend StochasticMatrix multiply(const StochasticMatrix&, const StochasticMatrix&);
  friend StochasticMatrix block_diag(const StochasticMatrix&, const StochasticMatrix&);
  friend StochasticMatrix hjoin(std::span<const StochasticMatrix>,
                                std::optional<std::size_t>);
  friend StochasticMatrix column(const StochasticMatrix&, std::size_t);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Exact product left * right; requires left.cols() == right.rows().
StochasticMatrix multiply(const StochasticMatrix& left, const StochasticMatrix& right);

/// Block-diagonal sum, the monoidal product of two morphisms.
StochasticMatrix block_diag(const StochasticMatrix& a, const StochasticMatrix& b);

/// Horizontal juxtaposition. The row count is taken from `rows` when the list
/// is empty and must agree with every element otherwise.
StochasticMatrix hjoin(std::span<const StochasticMatrix> columns,
                       std::optional<std::size_t> rows = std::nullopt);

/// The j-th column (1-based) as an n x 1 matrix.
StochasticMatrix column(const StochasticMatrix& a, std::size_t j);

/// All columns, in order.
std::vector<StochasticMatrix> columns_of(const StochasticMatrix& a);

/// Rows separated by newlines, entries by spaces.
std::string to_string(const StochasticMatrix& m);
std::ostream& operator<<(std::ostream& os, const StochasticMatrix& m);

}  // namespace stomap
