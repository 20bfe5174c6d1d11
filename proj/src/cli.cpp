#include "stomap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "stomap/error.hpp"
#include "stomap/expression.hpp"
#include "stomap/matrix_json.hpp"
#include "stomap/render.hpp"
#include "stomap/rewriting.hpp"
#include "stomap/semantics.hpp"
#include "stomap/synthesis.hpp"

namespace stomap {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string output;
  std::string expr;
  std::string expr2;
  std::string matrix_file;
  std::vector<std::string> rules;
  std::string format = "ascii";
  std::size_t input = 1;
  std::size_t draws = 0;
  std::optional<std::uint64_t> seed_positional;
  std::uint64_t seed = 0;
  std::size_t count = 20;
  std::optional<std::size_t> slice;
  std::size_t offset = 0;
  bool reverse = false;
  std::vector<std::string> params;
  std::optional<std::size_t> steps;
};

int cmd_eval(const Options& o, std::ostream& out) {
  out << matrix_to_json(eval(parse_diagram(o.expr))).dump() << '\n';
  return kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
  out << print_diagram(synth_matrix(matrix_from_json_text(read_file(o.matrix_file)))) << '\n';
  return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  out << canonical_text(parse_diagram(o.expr)) << '\n';
  return kExitOk;
}

int cmd_check_equal(const Options& o, std::ostream& out) {
  const Diagram a = parse_diagram(o.expr);
  const Diagram b = parse_diagram(o.expr2);
  if (a.dom() != b.dom() || a.cod() != b.cod()) {
    throw ArityError("shapes differ: " + std::to_string(a.dom()) + " -> " +
                     std::to_string(a.cod()) + " versus " + std::to_string(b.dom()) + " -> " +
                     std::to_string(b.cod()));
  }
  const std::string ca = canonical_text(a);
  const std::string cb = canonical_text(b);
  const bool same = ca == cb;
  out << "canonical 1: " << ca << '\n' << "canonical 2: " << cb << '\n';
  out << (same ? "equal" : "not equal") << '\n';
  return same ? kExitOk : kExitFalse;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<const RewriteRule*> rules;
  if (o.rules.empty()) {
    for (const auto& r : rule_table()) {
      if (!r.is_interchange()) rules.push_back(&r);
    }
  } else {
    for (const auto& name : o.rules) rules.push_back(&find_rule(name));
  }
  bool all = true;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (const auto& c : verify_rule(*rules[i], o.count, o.seed + i)) {
      out << (c.passed ? "PASS " : "FAIL ") << c.rule;
      if (!c.params.empty()) out << ' ' << c.params;
      out << '\n';
      all = all && c.passed;
      ++checks;
    }
  }
  out << (all ? "all " : "FAILED: ") << checks << " checks" << (all ? " passed" : "") << '\n';
  return all ? kExitOk : kExitFalse;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const Diagram d = parse_diagram(o.expr);
  const std::uint64_t seed = o.seed_positional.value_or(o.seed);
  const auto counts = sample_histogram(d, o.input, o.draws, seed);
  const auto expected = column(eval(d), o.input);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    out << "output " << k + 1 << ": " << counts[k] << " expected "
        << expected.at(k, 0).to_string() << '\n';
  }
  out << "tv " << total_variation(counts, expected.entries()) << '\n';
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format != "ascii" && o.format != "dot") {
    err << "unknown format '" << o.format << "' (expected ascii or dot)\n";
    return kExitParse;
  }
  const Diagram d = parse_diagram(o.expr);
  out << (o.format == "ascii" ? render_ascii(d) : render_dot(d));
  return kExitOk;
}

int cmd_rewrite(const Options& o, std::ostream& out) {
  const SliceForm form = to_slices(parse_diagram(o.expr));
  if (o.steps) {
    const WalkResult walk = random_walk_traced(form, *o.steps, o.seed);
    for (const auto& step : walk.trace) out << format_step(step) << '\n';
    out << "result: " << print_diagram(from_slices(walk.form)) << '\n';
    return kExitOk;
  }
  if (o.rules.empty()) {
    for (const auto& r : find_redexes(form)) {
      out << r.rule << (r.direction == Direction::Backward ? "^-1" : "") << " @ slice "
          << r.slice_index << " offset " << r.whisker_offset << '\n';
    }
    return kExitOk;
  }
  const RewriteRule& rule = find_rule(o.rules.front());
  const Direction dir = o.reverse ? Direction::Backward : Direction::Forward;
  const std::size_t slice = o.slice.value_or(0);
  std::optional<Redex> chosen;
  for (auto& r : find_redexes(form, RedexQuery{{rule.name}, true})) {
    if (r.direction == dir && r.slice_index == slice && r.whisker_offset == o.offset) {
      chosen = std::move(r);
      break;
    }
  }
  if (!chosen) {
    throw InvalidRedexError("rule " + rule.name + (o.reverse ? "^-1" : "") +
                            " does not match at slice " + std::to_string(slice) + " offset " +
                            std::to_string(o.offset));
  }
  if (!o.params.empty()) {
    if (o.params.size() != chosen->fresh.size()) {
      throw InvalidRedexError("rule takes " + std::to_string(chosen->fresh.size()) +
                              " free parameters, got " + std::to_string(o.params.size()));
    }
    for (std::size_t i = 0; i < o.params.size(); ++i) {
      try {
        chosen->fresh[i] = Scalar::parse(o.params[i]);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
      }
    }
  }
  const ApplyResult applied = apply_step(form, *chosen);
  out << format_step(TraceStep{1, *chosen, applied.filler_used}) << '\n';
  out << "result: " << print_diagram(from_slices(applied.form)) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stochastic-matrix string diagrams"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--output", o.output, "Write results to this file instead of stdout");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a diagram to its matrix (JSON)");
  eval_cmd->add_option("expr", o.expr, "Diagram expression")->required();

  auto* synth_cmd = app.add_subcommand("synth", "Synthesize a canonical diagram from a matrix");
  synth_cmd->add_option("matrix", o.matrix_file, "Matrix JSON file, or - for stdin")->required();

  auto* norm_cmd = app.add_subcommand("normalize", "Print the canonical form of a diagram");
  norm_cmd->add_option("expr", o.expr, "Diagram expression")->required();

  auto* eq_cmd = app.add_subcommand("check-equal", "Decide whether two diagrams are equal");
  eq_cmd->add_option("expr1", o.expr, "First diagram")->required();
  eq_cmd->add_option("expr2", o.expr2, "Second diagram")->required();

  auto* verify_cmd = app.add_subcommand("verify-relations", "Check every relation under evaluation");
  verify_cmd->add_option("--rule", o.rules, "Restrict to these rules (e.g. R12)");
  verify_cmd->add_option("--seed", o.seed, "Random seed");
  verify_cmd->add_option("--count", o.count, "Instantiations per parameterized rule");

  auto* sample_cmd = app.add_subcommand("sample", "Monte-Carlo histogram of one input strand");
  sample_cmd->add_option("expr", o.expr, "Diagram expression")->required();
  sample_cmd->add_option("input", o.input, "Input strand (1-based)")->required();
  sample_cmd->add_option("draws", o.draws, "Number of samples")->required();
  sample_cmd->add_option("rng_seed", o.seed_positional, "Random seed (same as --seed)");
  sample_cmd->add_option("--seed", o.seed, "Random seed");

  auto* render_cmd = app.add_subcommand("render", "Draw a diagram slice by slice");
  render_cmd->add_option("expr", o.expr, "Diagram expression")->required();
  render_cmd->add_option("--format", o.format, "ascii or dot");

  auto* rewrite_cmd = app.add_subcommand(
      "rewrite", "List redexes, apply one rule, or run a random rewrite walk");
  rewrite_cmd->add_option("expr", o.expr, "Diagram expression")->required();
  rewrite_cmd->add_option("--rule", o.rules, "Rule to apply (e.g. R4)")->expected(1);
  rewrite_cmd->add_option("--slice", o.slice, "Slice index of the match");
  rewrite_cmd->add_option("--offset", o.offset, "Strand offset of the match");
  rewrite_cmd->add_flag("--reverse", o.reverse, "Rewrite right-hand side to left-hand side");
  rewrite_cmd->add_option("--param", o.params, "Values for free parameters");
  rewrite_cmd->add_option("--steps", o.steps, "Random walk length");
  rewrite_cmd->add_option("--seed", o.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitParse;
  }

  std::ostringstream buffer;
  std::ostream& sink = o.output.empty() ? out : buffer;
  int code = kExitOk;
  try {
    if (*eval_cmd) code = cmd_eval(o, sink);
    else if (*synth_cmd) code = cmd_synth(o, sink);
    else if (*norm_cmd) code = cmd_normalize(o, sink);
    else if (*eq_cmd) code = cmd_check_equal(o, sink);
    else if (*verify_cmd) code = cmd_verify(o, sink);
    else if (*sample_cmd) code = cmd_sample(o, sink);
    else if (*render_cmd) code = cmd_render(o, sink, err);
    else if (*rewrite_cmd) code = cmd_rewrite(o, sink);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitParse;
  } catch (const NotStochasticError& e) {
    err << "not stochastic: " << e.what() << '\n';
    return kExitNotStochastic;
  } catch (const InvalidRedexError& e) {
    err << e.what() << '\n';
    return kExitInvalidRedex;
  } catch (const ArityError& e) {
    err << e.what() << '\n';
    return kExitArity;
  } catch (const NoInputError& e) {
    err << e.what() << '\n';
    return kExitArity;
  } catch (const IndexError& e) {
    err << e.what() << '\n';
    return kExitArity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFalse;
  }
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) {
      err << "cannot write '" << o.output << "'\n";
      return kExitFalse;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace stomap
