// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "stomap/constructions.hpp"
#include "stomap/expression.hpp"
#include "stomap/rewriting.hpp"
#include "stomap/semantics.hpp"
#include "stomap/synthesis.hpp"
#include "support/generators.hpp"
#include "support/lemmas.hpp"

using namespace stomap;
using namespace stomap::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

// Relations written out independently of the rule table, in the textual
// syntax with λ and μ substituted. rhs parameters are derived here as well.
struct Relation {
  std::string name;
  int params;  // number of free parameters on the left side
  std::function<std::string(const std::vector<Scalar>&)> lhs;
  std::function<std::string(const std::vector<Scalar>&)> rhs;
  std::function<std::vector<Scalar>(const std::vector<Scalar>&)> rhs_params;
};

std::string c(const Scalar& x) { return "c(" + x.to_string() + ")"; }

// λ~ = λμ, μ~ = λ(1-μ)/(1-λμ), with 0 when λμ = 1.
std::vector<Scalar> r12_tilde(const std::vector<Scalar>& p) {
  const Scalar lm = p[0] * p[1];
  return {lm, lm.is_one() ? Scalar(0) : p[0] * p[1].complement() / lm.complement()};
}

std::vector<Relation> relations() {
  using P = std::vector<Scalar>;
  const auto none = [](const P&) { return P{}; };
  const auto fixed = [](std::string s) { return [s](const P&) { return s; }; };
  return {
      {"R1", 0, fixed("(e * id(1)) ; e"), fixed("(id(1) * e) ; e"), none},
      {"R2", 0, fixed("s ; e"), fixed("e"), none},
      {"R3", 0, fixed("(id(1) * e) ; s"), fixed("(s * id(1)) ; (id(1) * s) ; (e * id(1))"), none},
      {"R4", 0, fixed("s ; s"), fixed("id(2)"), none},
      {"R5", 0, fixed("(s * id(1)) ; (id(1) * s) ; (s * id(1))"),
       fixed("(id(1) * s) ; (s * id(1)) ; (id(1) * s)"), none},
      {"R6", 1, [](const P& p) { return "del ; " + c(p[0]); }, fixed("del * del"), none},
      {"R7", 0, fixed("c(0)"), fixed("del * id(1)"), none},
      {"R8", 1, [](const P& p) { return c(p[0]) + " ; e"; }, fixed("id(1)"), none},
      {"R9", 1, [](const P& p) { return c(p[0]) + " ; s"; },
       [](const P& p) { return c(p[0].complement()); },
       [](const P& p) { return P{p[0].complement()}; }},
      {"R10", 1, [](const P& p) { return "s ; (id(1) * " + c(p[0]) + ")"; },
       [](const P& p) { return "(" + c(p[0]) + " * id(1)) ; (id(1) * s) ; (s * id(1))"; },
       [](const P& p) { return p; }},
      {"R11", 1,
       [](const P& p) { return "(" + c(p[0]) + " * " + c(p[0]) + ") ; (id(1) * s * id(1)) ; (e * e)"; },
       [](const P& p) { return "e ; " + c(p[0]); }, [](const P& p) { return p; }},
      {"R12", 2, [](const P& p) { return c(p[0]) + " ; (" + c(p[1]) + " * id(1))"; },
       [](const P& p) {
         const P q = r12_tilde(p);
         return c(q[0]) + " ; (id(1) * " + c(q[1]) + ")";
       },
       r12_tilde},
      {"D13", 0, fixed("(del * id(1)) ; e"), fixed("id(1)"), none},
      {"D14", 0, fixed("(del * id(1)) ; s"), fixed("id(1) * del"), none},
  };
}

Outcome relation_soundness() {
  Outcome o;
  Rng rng(1001);
  std::size_t checks = 0;
  for (const auto& rel : relations()) {
    const RewriteRule& rule = find_rule(rel.name);
    const int count = rel.params == 0 ? 1 : 20;
    for (int k = 0; k < count; ++k) {
      std::vector<Scalar> params;
      for (int i = 0; i < rel.params; ++i) params.push_back(random_probability(rng, 12));
      std::ostringstream tag;
      tag << rel.name;
      for (const auto& p : params) tag << ' ' << p;
      const StochasticMatrix lhs = eval(parse_diagram(rel.lhs(params)));
      const StochasticMatrix rhs = eval(parse_diagram(rel.rhs(params)));
      o.expect(lhs == rhs, tag.str() + ": sides differ");

      // The table's patterns must denote the same two morphisms.
      std::vector<Scalar> slots(params.begin(),
                                params.begin() + static_cast<std::ptrdiff_t>(rule.lhs.slot_count()));
      std::vector<Scalar> fresh(params.begin() + static_cast<std::ptrdiff_t>(rule.lhs.slot_count()),
                                params.end());
      const Transfer t = rule.forward(slots, fresh);
      o.expect(t.params == rel.rhs_params(params), tag.str() + ": transferred parameters");
      o.expect(eval_slices(rule.lhs.form(slots)) == lhs, tag.str() + ": table lhs");
      o.expect(eval_slices(rule.rhs.form(t.params)) == rhs, tag.str() + ": table rhs");
      ++checks;
    }
  }
  o.detail = std::to_string(checks) + " instantiations over 14 rules";
  return o;
}

Outcome matrix_round_trip() {
  Outcome o;
  Rng rng(2002);
  const std::vector<std::pair<std::size_t, std::size_t>> forced = {{0, 0}, {1, 0}, {3, 0}, {5, 0}};
  for (std::size_t k = 0; k < 200; ++k) {
    std::size_t rows, cols;
    if (k < forced.size()) {
      std::tie(rows, cols) = forced[k];
    } else {
      rows = rng.below(6);
      cols = rows == 0 ? 0 : rng.below(6);
    }
    const StochasticMatrix a = random_matrix(rng, rows, cols);
    o.expect(eval(synth_matrix(a)) == a, "round trip of " + to_string(a));
  }
  o.detail = "200 matrices";
  return o;
}

Outcome diagram_round_trip() {
  Outcome o;
  Rng rng(3003);
  std::size_t generators = 0;
  for (int k = 0; k < 200; ++k) {
    const Diagram d = random_diagram(rng, rng.below(5), 1 + rng.below(25));
    generators += d.generator_count();
    o.expect(d.generator_count() <= 25, "generator budget exceeded");
    const Diagram n = normalize(d);
    o.expect(equal(n, d), "normalize changed " + print_diagram(d));
    o.expect(normalize(n) == n, "normalize not idempotent on " + print_diagram(d));
  }
  o.detail = "200 diagrams, " + std::to_string(generators) + " generators";
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) o.expect(z_closed_form(n), "z(" + std::to_string(n) + ")");
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      o.expect(p_closed_form(m, n), "p(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  }
  Rng rng(4004);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng.below(8);
    ColumnSpec spec{{}, n};
    for (std::size_t j = 0; j + 1 < n; ++j) spec.lambdas.push_back(random_probability(rng, 12));
    o.expect(eval(to_diagram(spec)) == column_oracle(spec.lambdas), "column spec");
  }
  o.detail = "8 cyclic, 35 coalescers, 100 columns";
  return o;
}

Outcome commutation_lemmas() {
  Outcome o;
  std::size_t checks = 0;
  const auto count = [&](bool ok, const std::string& what) {
    o.expect(ok, what);
    ++checks;
  };
  for (std::size_t n = 1; n <= 7; ++n) count(z_other_definition(n), "z alternative recursion " + std::to_string(n));
  for (std::size_t n = 1; n <= 6; ++n) {
    count(z_double(n), "z tensor z " + std::to_string(n));
    count(z_exchange(n), "z exchange " + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 7; ++n) count(z_absorbs_del(n), "z absorbs del " + std::to_string(n));
  for (std::size_t n = 0; n <= 6; ++n) count(p_other_definition(n), "p alternative recursion " + std::to_string(n));
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t m = 0; m <= n; ++m) count(p_absorbs_dels(m, n), "p absorbs dels");
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t m = 2; m <= n; ++m) count(p_of_inclusions(m, n), "p of inclusions");
  }

  Rng rng(5005);
  DiagramLimits lim;
  lim.max_arity = 4;
  const auto random_f = [&] {
    for (;;) {
      Diagram f = random_diagram(rng, rng.below(5), 1 + rng.below(10), lim);
      if (f.cod() <= 4) return f;
    }
  };
  for (int k = 0; k < 50; ++k) {
    const Diagram f = random_f();
    count(z_commutes(f), "z naturality " + print_diagram(f));
  }
  for (std::size_t power : {2, 3}) {
    for (int k = 0; k < 50; ++k) {
      const Diagram f = random_f();
      count(p_commutes(f, power), "p naturality k=" + std::to_string(power) + " " + print_diagram(f));
    }
  }
  o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome rewrite_fuzz() {
  Outcome o;
  Rng rng(6006);
  std::size_t steps = 0, fillers = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Diagram d = random_diagram(rng, 1 + rng.below(3), 4 + rng.below(10));
    const StochasticMatrix expected = eval(d);
    const SliceForm start = to_slices(d);
    const WalkResult w = random_walk_traced(start, 500, seed);
    o.expect(w.trace.size() == 500, "walk stopped early");
    SliceForm s = start;
    for (const auto& step : w.trace) {
      s = apply(s, step.redex);
      ++steps;
      fillers += step.filler_used;
      if (eval_slices(s) != expected) {
        o.expect(false, "seed " + std::to_string(seed) + " " + format_step(step));
        break;
      }
    }
    o.expect(s == w.form, "replay differs from walk, seed " + std::to_string(seed));
    o.expect(canonical_text(from_slices(w.form)) == canonical_text(d),
             "canonical form moved, seed " + std::to_string(seed));
  }
  o.detail = std::to_string(steps) + " steps replayed";
  if (fillers) o.detail += ", " + std::to_string(fillers) + " with filler";
  return o;
}

Outcome degenerate_columns() {
  Outcome o;
  Rng rng(7007);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + rng.below(6);
    const std::size_t support = 1 + rng.below(n - 1);  // mass confined to rows < support
    const StochasticMatrix head = random_matrix(rng, support, 1);
    std::vector<Scalar> entries(n);
    for (std::size_t i = 0; i < support; ++i) entries[i] = head.at(i, 0);
    const StochasticMatrix col(n, 1, entries);
    const ColumnSpec spec = synth_column(col);
    o.expect(eval(to_diagram(spec)) == col, "column " + to_string(col));
    o.expect(synth_column(eval(to_diagram(spec))) == spec, "column spec not stable");
    Scalar residual = Scalar::one();
    for (std::size_t j = 0; j < spec.lambdas.size(); ++j) {
      if (residual.is_zero()) o.expect(spec.lambdas[j].is_zero(), "filler is not 0");
      residual -= col.at(j, 0);
    }
  }
  const Diagram rhs = parse_diagram("c(1) ; (id(1) * c(1))");
  for (int k = 0; k < 20; ++k) {
    const Scalar lambda = random_probability(rng, 16);
    const Diagram lhs = parse_diagram("c(1) ; (id(1) * " + c(lambda) + ")");
    o.expect(eval(lhs) == eval(rhs), "exceptional equation at " + lambda.to_string());
  }
  o.detail = "100 columns, 20 values of λ";
  return o;
}

std::size_t branch_count(const Diagram& d) {
  std::size_t n = 0;
  const SliceForm s = to_slices(d);
  for (const auto& slice : s.slices()) n += slice.gen.kind() == GenKind::C;
  return n;
}

Outcome sampler() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(8008);
  double worst = 0;
  std::size_t branches = 0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    // Only inputs whose column is spread over two or more outputs.
    Diagram d;
    std::size_t input = 0;
    while (input == 0) {
      d = random_diagram_bounded(rng, 1 + rng.below(3), 6 + rng.below(12), 8);
      const StochasticMatrix m = eval(d);
      for (std::size_t j = 0; j < m.cols() && input == 0; ++j) {
        const auto col = m.column_view(j);
        if (std::count_if(col.begin(), col.end(), [](const Scalar& x) { return !x.is_zero(); }) > 1) {
          input = j + 1;
        }
      }
    }
    branches += branch_count(d);
    const StochasticMatrix m = eval(d);
    const auto h = sample_histogram(d, input, 100000, 9000 + k);
    const double tv = total_variation(h, m.column_view(input - 1));
    worst = std::max(worst, tv);
    o.expect(tv <= 0.02, "tv " + std::to_string(tv) + " for " + print_diagram(d));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(seconds < 30, "took " + std::to_string(seconds) + " s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "10 diagrams, %zu branches, worst tv %.4f, %.2f s", branches,
                worst, seconds);
  o.detail = buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 relation soundness", relation_soundness},
      {"2 matrix round trip", matrix_round_trip},
      {"3 diagram round trip", diagram_round_trip},
      {"4 closed forms", closed_forms},
      {"5 commutation lemmas", commutation_lemmas},
      {"6 rewrite fuzz", rewrite_fuzz},
      {"7 degenerate columns", degenerate_columns},
      {"8 sampler", sampler},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
    failed += !o.passed;
  }
  if (failed) {
    std::cout << failed << " of " << criteria.size() << " criteria failed\n";
  } else {
    std::cout << "all " << criteria.size() << " criteria passed\n";
  }
  return failed ? 1 : 0;
}
