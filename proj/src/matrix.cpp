#include "stomap/matrix.hpp"

#include <ostream>
#include <sstream>

#include "stomap/error.hpp"

namespace stomap {

namespace {

std::string shape(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

}  // namespace

StochasticMatrix::StochasticMatrix(std::size_t rows, std::size_t cols,
                                   std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  validate();
}

StochasticMatrix::StochasticMatrix(Unchecked, std::size_t rows, std::size_t cols,
                                   std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {}

void StochasticMatrix::validate() const {
  if (entries_.size() != rows_ * cols_) {
    throw NotStochasticError("entry count " + std::to_string(entries_.size()) +
                                 " does not match shape " + shape(rows_, cols_),
                             0);
  }
  if (rows_ == 0 && cols_ != 0) {
    throw NotStochasticError("no stochastic matrix of shape " + shape(rows_, cols_), 0);
  }
  // Scalars are non-negative by construction; only the sums need checking.
  for (std::size_t j = 0; j < cols_; ++j) {
    Scalar sum;
    for (std::size_t i = 0; i < rows_; ++i) sum += entries_[j * rows_ + i];
    if (!sum.is_one()) {
      throw NotStochasticError("column " + std::to_string(j + 1) + " sums to " +
                                   sum.to_string() + ", expected 1",
                               j + 1);
    }
  }
}

StochasticMatrix StochasticMatrix::from_rows(
    const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  std::vector<Scalar> entries(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) entries[j * n + i] = rows[i][j];
  }
  return StochasticMatrix(n, m, std::move(entries));
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  std::vector<Scalar> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Scalar::one();
  return StochasticMatrix(Unchecked{}, n, n, std::move(entries));
}

StochasticMatrix StochasticMatrix::empty(std::size_t rows) {
  return StochasticMatrix(Unchecked{}, rows, 0, {});
}

const Scalar& StochasticMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw IndexError("entry (" + std::to_string(row) + ", " + std::to_string(col) +
                     ") outside " + shape(rows_, cols_));
  }
  return entries_[col * rows_ + row];
}

std::span<const Scalar> StochasticMatrix::column_view(std::size_t col) const {
  if (col >= cols_) throw IndexError("column " + std::to_string(col) + " out of range");
  return std::span<const Scalar>(entries_).subspan(col * rows_, rows_);
}

StochasticMatrix multiply(const StochasticMatrix& left, const StochasticMatrix& right) {
  if (left.cols_ != right.rows_) {
    throw DimensionError("cannot multiply " + shape(left.rows_, left.cols_) + " by " +
                         shape(right.rows_, right.cols_));
  }
  const std::size_t n = left.rows_;
  const std::size_t k = left.cols_;
  const std::size_t m = right.cols_;
  std::vector<mpq_class> acc(n * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      const mpq_class& r = right.entries_[j * k + l].value();
      if (sgn(r) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const mpq_class& a = left.entries_[l * n + i].value();
        if (sgn(a) != 0) acc[j * n + i] += a * r;
      }
    }
  }
  std::vector<Scalar> entries;
  entries.reserve(acc.size());
  for (auto& q : acc) entries.emplace_back(std::move(q));
  // Products of stochastic matrices are stochastic; the check guards the kernel.
  return StochasticMatrix(n, m, std::move(entries));
}

StochasticMatrix block_diag(const StochasticMatrix& a, const StochasticMatrix& b) {
  const std::size_t n = a.rows_ + b.rows_;
  const std::size_t m = a.cols_ + b.cols_;
  std::vector<Scalar> entries(n * m);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) {
      entries[j * n + i] = a.entries_[j * a.rows_ + i];
    }
  }
  for (std::size_t j = 0; j < b.cols_; ++j) {
    for (std::size_t i = 0; i < b.rows_; ++i) {
      entries[(a.cols_ + j) * n + a.rows_ + i] = b.entries_[j * b.rows_ + i];
    }
  }
  return StochasticMatrix(n, m, std::move(entries));
}

StochasticMatrix hjoin(std::span<const StochasticMatrix> columns,
                       std::optional<std::size_t> rows) {
  if (columns.empty() && !rows) {
    throw DimensionError("hjoin of an empty list needs an explicit row count");
  }
  const std::size_t n = rows ? *rows : columns.front().rows_;
  std::size_t m = 0;
  for (const auto& c : columns) {
    if (c.rows_ != n) {
      throw DimensionError("hjoin row mismatch: " + std::to_string(c.rows_) + " vs " +
                           std::to_string(n));
    }
    m += c.cols_;
  }
  std::vector<Scalar> entries;
  entries.reserve(n * m);
  for (const auto& c : columns) {
    entries.insert(entries.end(), c.entries_.begin(), c.entries_.end());
  }
  return StochasticMatrix(n, m, std::move(entries));
}

StochasticMatrix column(const StochasticMatrix& a, std::size_t j) {
  if (j < 1 || j > a.cols_) {
    throw IndexError("column " + std::to_string(j) + " outside 1.." +
                     std::to_string(a.cols_));
  }
  auto view = a.column_view(j - 1);
  return StochasticMatrix(StochasticMatrix::Unchecked{}, a.rows_, 1,
                          std::vector<Scalar>(view.begin(), view.end()));
}

std::vector<StochasticMatrix> columns_of(const StochasticMatrix& a) {
  std::vector<StochasticMatrix> out;
  out.reserve(a.cols());
  for (std::size_t j = 1; j <= a.cols(); ++j) out.push_back(column(a, j));
  return out;
}

std::string to_string(const StochasticMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const StochasticMatrix& m) {
  os << "[" << m.rows() << "x" << m.cols() << "]";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "\n";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
  }
  return os;
}

}  // namespace stomap
