#include "stomap/semantics.hpp"

#include <cmath>

#include "stomap/error.hpp"
#include "stomap/random.hpp"

namespace stomap {

StochasticMatrix eval(const Generator& g) {
  switch (g.kind()) {
    case GenKind::Del: return StochasticMatrix::empty(1);
    case GenKind::E: return StochasticMatrix(1, 2, {Scalar::one(), Scalar::one()});
    case GenKind::S:
      return StochasticMatrix(2, 2, {Scalar::zero(), Scalar::one(), Scalar::one(), Scalar::zero()});
    case GenKind::C: return StochasticMatrix(2, 1, {g.param(), g.param().complement()});
  }
  throw DomainError("unknown generator");
}

StochasticMatrix eval(const Diagram& d) {
  return std::visit(
      [](const auto& node) -> StochasticMatrix {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IdNode>) {
          return StochasticMatrix::identity(node.n);
        } else if constexpr (std::is_same_v<T, GenNode>) {
          return eval(node.gen);
        } else if constexpr (std::is_same_v<T, TensorNode>) {
          return block_diag(eval(node.left), eval(node.right));
        } else {
          return multiply(eval(node.after), eval(node.before));
        }
      },
      d.node());
}

StochasticMatrix eval_slices(const SliceForm& s) {
  const std::size_t dom = s.dom();
  using Row = std::vector<mpq_class>;
  std::vector<Row> rows(dom, Row(dom));
  for (std::size_t i = 0; i < dom; ++i) rows[i][i] = 1;

  for (const auto& slice : s.slices()) {
    const auto k = static_cast<std::ptrdiff_t>(slice.left);
    switch (slice.gen.kind()) {
      case GenKind::Del:
        rows.insert(rows.begin() + k, Row(dom));
        break;
      case GenKind::E:
        for (std::size_t j = 0; j < dom; ++j) rows[slice.left][j] += rows[slice.left + 1][j];
        rows.erase(rows.begin() + k + 1);
        break;
      case GenKind::S:
        std::swap(rows[slice.left], rows[slice.left + 1]);
        break;
      case GenKind::C: {
        const mpq_class& lambda = slice.gen.param().value();
        Row right(dom);
        for (std::size_t j = 0; j < dom; ++j) {
          right[j] = rows[slice.left][j] - lambda * rows[slice.left][j];
          rows[slice.left][j] *= lambda;
        }
        rows.insert(rows.begin() + k + 1, std::move(right));
        break;
      }
    }
  }

  const std::size_t cod = rows.size();
  std::vector<Scalar> entries;
  entries.reserve(cod * dom);
  for (std::size_t j = 0; j < dom; ++j) {
    for (std::size_t i = 0; i < cod; ++i) entries.emplace_back(rows[i][j]);
  }
  return StochasticMatrix(cod, dom, std::move(entries));
}

namespace {

void check_input(const Diagram& d, std::size_t input) {
  if (d.dom() == 0) throw NoInputError("diagram has no input strands to sample from");
  if (input < 1 || input > d.dom()) {
    throw IndexError("input " + std::to_string(input) + " outside 1.." +
                     std::to_string(d.dom()));
  }
}

// Follows one token from 0-based strand `pos` to its output strand.
std::size_t walk(const SliceForm& slices, std::size_t pos, Rng& rng) {
  for (const auto& slice : slices.slices()) {
    const std::size_t k = slice.left;
    const std::size_t width = slice.gen.dom();
    if (pos < k) continue;
    if (pos >= k + width) {
      pos = pos + slice.gen.cod() - width;
      continue;
    }
    switch (slice.gen.kind()) {
      case GenKind::Del: break;  // never reached: del has no inputs
      case GenKind::E: pos = k; break;
      case GenKind::S: pos = pos == k ? k + 1 : k; break;
      case GenKind::C: pos = rng.bernoulli(slice.gen.param()) ? k : k + 1; break;
    }
  }
  return pos;
}

}  // namespace

std::size_t sample(const Diagram& d, std::size_t input, std::uint64_t seed) {
  check_input(d, input);
  Rng rng(seed);
  return walk(to_slices(d), input - 1, rng) + 1;
}

std::vector<std::size_t> sample_histogram(const Diagram& d, std::size_t input,
                                          std::size_t draws, std::uint64_t seed) {
  check_input(d, input);
  const SliceForm slices = to_slices(d);
  Rng rng(seed);
  std::vector<std::size_t> counts(d.cod(), 0);
  for (std::size_t i = 0; i < draws; ++i) ++counts[walk(slices, input - 1, rng)];
  return counts;
}

double total_variation(const std::vector<std::size_t>& counts,
                       std::span<const Scalar> expected) {
  if (counts.size() != expected.size()) {
    throw DimensionError("histogram and distribution differ in length");
  }
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  if (total == 0) return 0;
  double l1 = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    l1 += std::abs(static_cast<double>(counts[i]) / total - expected[i].to_double());
  }
  return l1 / 2;
}

}  // namespace stomap
