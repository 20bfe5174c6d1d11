#include "stomap/synthesis.hpp"

#include "stomap/constructions.hpp"
#include "stomap/error.hpp"
#include "stomap/expression.hpp"
#include "stomap/semantics.hpp"

namespace stomap {

ColumnSpec synth_column(const StochasticMatrix& col) {
  const std::size_t n = col.rows();
  if (n == 0) throw NoSynthesisError("there is no morphism [1] -> [0]");
  if (col.cols() != 1) {
    throw DimensionError("synth_column needs a single column, got " +
                         std::to_string(col.cols()));
  }

  ColumnSpec spec;
  spec.n = n;
  spec.lambdas.reserve(n - 1);
  Scalar residual = Scalar::one();  // 1 - sum of the entries consumed so far
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Scalar& mu = col.at(j, 0);
    if (residual.is_zero()) {
      spec.lambdas.push_back(Scalar::zero());  // 0/0: canonical filler
      continue;
    }
    spec.lambdas.push_back(mu / residual);
    residual -= mu;
  }
  return spec;
}

Diagram to_diagram(const ColumnSpec& spec) { return column_diagram(spec.lambdas, spec.n); }

Diagram synth_matrix(const StochasticMatrix& a) {
  if (a.cols() == 0) return del_power(a.rows());
  if (a.cols() == 1) return to_diagram(synth_column(a));
  std::vector<Diagram> columns;
  columns.reserve(a.cols());
  for (const auto& c : columns_of(a)) columns.push_back(to_diagram(synth_column(c)));
  return Diagram::compose(p(a.cols(), a.rows()), tensor_all(columns));
}

Diagram normalize(const Diagram& d) { return synth_matrix(eval(d)); }

std::string canonical_text(const Diagram& d) { return print_diagram(normalize(d)); }

bool equal(const Diagram& a, const Diagram& b) {
  return a.dom() == b.dom() && a.cod() == b.cod() && eval(a) == eval(b);
}

}  // namespace stomap
