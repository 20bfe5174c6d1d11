#include "stomap/rewriting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "stomap/error.hpp"
#include "stomap/random.hpp"
#include "stomap/semantics.hpp"

namespace stomap {

// ---------------------------------------------------------------------------
// Patterns

std::vector<Slice> Pattern::instantiate(std::span<const Scalar> params, std::size_t offset,
                                        std::size_t context) const {
  std::vector<Slice> out;
  out.reserve(slices.size());
  for (const auto& ps : slices) {
    std::optional<Scalar> param;
    if (const auto* slot = std::get_if<std::size_t>(&ps.param)) {
      param = params[*slot];
    } else if (const auto* value = std::get_if<Scalar>(&ps.param)) {
      param = *value;
    }
    out.push_back(Slice{offset + ps.left, Generator::make(ps.kind, param), context + ps.right});
  }
  return out;
}

SliceForm Pattern::form(std::span<const Scalar> params) const {
  return SliceForm(dom, instantiate(params));
}

namespace {

// ---------------------------------------------------------------------------
// Rule table

constexpr GenKind kDel = GenKind::Del;
constexpr GenKind kE = GenKind::E;
constexpr GenKind kS = GenKind::S;
constexpr GenKind kC = GenKind::C;

PatternSlice g(std::size_t left, GenKind kind, std::size_t right) {
  return {left, kind, std::monostate{}, right};
}
PatternSlice c(std::size_t left, std::size_t slot, std::size_t right) {
  return {left, kC, slot, right};
}
PatternSlice c_const(std::size_t left, Scalar value, std::size_t right) {
  return {left, kC, std::move(value), right};
}

Transfer same(std::span<const Scalar> matched, std::span<const Scalar>) {
  return {std::vector<Scalar>(matched.begin(), matched.end()), false};
}
Transfer nothing(std::span<const Scalar>, std::span<const Scalar>) { return {}; }
Transfer take_fresh(std::span<const Scalar>, std::span<const Scalar> fresh) {
  return {std::vector<Scalar>(fresh.begin(), fresh.end()), false};
}
Transfer complement(std::span<const Scalar> matched, std::span<const Scalar>) {
  return {{matched[0].complement()}, false};
}

// (c_μ * id) ∘ c_λ  ->  (id * c_μ̃) ∘ c_λ̃  with λ̃ = λμ, μ̃ = λ(1-μ)/(1-λμ).
Transfer r12_forward(std::span<const Scalar> matched, std::span<const Scalar>) {
  const Scalar& lambda = matched[0];
  const Scalar& mu = matched[1];
  const Scalar lt = lambda * mu;
  if (lt.is_one()) return {{lt, Scalar::zero()}, true};
  return {{lt, lambda * mu.complement() / lt.complement()}, false};
}

// Inverse: λ = λ̃ + μ̃(1-λ̃), μ = λ̃/λ (filler 0 when λ = 0).
Transfer r12_backward(std::span<const Scalar> matched, std::span<const Scalar>) {
  const Scalar& lt = matched[0];
  const Scalar& mt = matched[1];
  const Scalar lambda = lt + mt * lt.complement();
  if (lambda.is_zero()) return {{lambda, Scalar::zero()}, true};
  return {{lambda, lt / lambda}, false};
}

RewriteRule rule(std::string name, std::string equation, Pattern lhs, Pattern rhs,
                 TransferFn forward = same, TransferFn backward = same,
                 std::vector<std::string> forward_fresh = {},
                 std::vector<std::string> backward_fresh = {}) {
  return RewriteRule{std::move(name),          std::move(equation),      std::move(lhs),
                     std::move(rhs),           std::move(forward),       std::move(backward),
                     std::move(forward_fresh), std::move(backward_fresh)};
}

bool independent(const Slice& a, const Slice& b) {
  return b.left + b.gen.dom() <= a.left || b.left >= a.left + a.gen.cod();
}

// Slides b (applied after a) below a. Requires independent(a, b).
std::pair<Slice, Slice> interchange(const Slice& a, const Slice& b) {
  const std::size_t a_dom = a.gen.dom(), a_cod = a.gen.cod();
  const std::size_t b_dom = b.gen.dom(), b_cod = b.gen.cod();
  if (b.left + b_dom <= a.left) {
    Slice b2{b.left, b.gen, a.input_arity() - b.left - b_dom};
    Slice a2{a.left - b_dom + b_cod, a.gen, a.right};
    return {b2, a2};
  }
  Slice b2{b.left - a_cod + a_dom, b.gen, b.right};
  Slice a2{a.left, a.gen, a.right - b_dom + b_cod};
  return {b2, a2};
}

std::vector<RewriteRule> build_table() {
  const Scalar zero = Scalar::zero();
  std::vector<RewriteRule> t;
  t.push_back(rule("R1", "e(e*id) = e(id*e)",
                   {3, {g(0, kE, 1), g(0, kE, 0)}, {}},
                   {3, {g(1, kE, 0), g(0, kE, 0)}, {}}));
  t.push_back(rule("R2", "e s = e",
                   {2, {g(0, kS, 0), g(0, kE, 0)}, {}},
                   {2, {g(0, kE, 0)}, {}}));
  t.push_back(rule("R3", "s(id*e) = (e*id)(id*s)(s*id)",
                   {3, {g(1, kE, 0), g(0, kS, 0)}, {}},
                   {3, {g(0, kS, 1), g(1, kS, 0), g(0, kE, 1)}, {}}));
  t.push_back(rule("R4", "s s = id(2)",
                   {2, {g(0, kS, 0), g(0, kS, 0)}, {}},
                   {2, {}, {}}));
  t.push_back(rule("R5", "(s*id)(id*s)(s*id) = (id*s)(s*id)(id*s)",
                   {3, {g(0, kS, 1), g(1, kS, 0), g(0, kS, 1)}, {}},
                   {3, {g(1, kS, 0), g(0, kS, 1), g(1, kS, 0)}, {}}));
  t.push_back(rule("R6", "c(λ) del = del * del",
                   {0, {g(0, kDel, 0), c(0, 0, 0)}, {"λ"}},
                   {0, {g(0, kDel, 0), g(1, kDel, 0)}, {}},
                   nothing, take_fresh, {}, {"λ"}));
  t.push_back(rule("R7", "c(0) = del * id(1)",
                   {1, {c_const(0, zero, 0)}, {}},
                   {1, {g(0, kDel, 1)}, {}}));
  t.push_back(rule("R8", "e c(λ) = id(1)",
                   {1, {c(0, 0, 0), g(0, kE, 0)}, {"λ"}},
                   {1, {}, {}},
                   nothing, take_fresh, {}, {"λ"}));
  t.push_back(rule("R9", "s c(λ) = c(1-λ)",
                   {1, {c(0, 0, 0), g(0, kS, 0)}, {"λ"}},
                   {1, {c(0, 0, 0)}, {"ν"}},
                   complement, complement));
  t.push_back(rule("R10", "(id*c(λ)) s = (s*id)(id*s)(c(λ)*id)",
                   {2, {g(0, kS, 0), c(1, 0, 0)}, {"λ"}},
                   {2, {c(0, 0, 1), g(1, kS, 0), g(0, kS, 1)}, {"λ"}}));
  t.push_back(rule("R11", "(e*e)(id*s*id)(c(λ)*c(λ)) = c(λ) e",
                   {2, {c(0, 0, 1), c(2, 0, 0), g(1, kS, 1), g(0, kE, 2), g(1, kE, 0)}, {"λ"}},
                   {2, {g(0, kE, 0), c(0, 0, 0)}, {"λ"}}));
  t.push_back(rule("R12", "(c(μ)*id) c(λ) = (id*c(μ~)) c(λ~)",
                   {1, {c(0, 0, 0), c(0, 1, 1)}, {"λ", "μ"}},
                   {1, {c(0, 0, 0), c(1, 1, 0)}, {"λ~", "μ~"}},
                   r12_forward, r12_backward));
  t.push_back(rule("D13", "e(del*id) = id(1)",
                   {1, {g(0, kDel, 1), g(0, kE, 0)}, {}},
                   {1, {}, {}}));
  t.push_back(rule("D14", "s(del*id) = id(1)*del",
                   {1, {g(0, kDel, 1), g(0, kS, 0)}, {}},
                   {1, {g(1, kDel, 0)}, {}}));
  t.push_back(rule("X", "interchange of independent adjacent slices", {}, {}, same, same));
  return t;
}

struct Orientation {
  const Pattern& source;
  const Pattern& target;
  const TransferFn& transfer;
  const std::vector<std::string>& fresh;
};

Orientation orient(const RewriteRule& r, Direction d) {
  if (d == Direction::Forward) return {r.lhs, r.rhs, r.forward, r.forward_fresh};
  return {r.rhs, r.lhs, r.backward, r.backward_fresh};
}

std::vector<Scalar> sample_params(std::size_t count, Rng& rng) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_probability(rng));
  return out;
}

// Both sides evaluate equally for one orientation and parameter choice.
bool check_orientation(const RewriteRule& r, Direction d, std::span<const Scalar> matched,
                       std::span<const Scalar> fresh) {
  const Orientation o = orient(r, d);
  const Transfer t = o.transfer(matched, fresh);
  return eval(from_slices(o.source.form(matched))) == eval(from_slices(o.target.form(t.params)));
}

void self_check(const std::vector<RewriteRule>& table) {
  const std::vector<std::vector<Scalar>> samples = {
      {Scalar(1, 3), Scalar(2, 5)}, {Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1, 2)}};
  for (const auto& r : table) {
    if (r.is_interchange()) continue;
    for (const auto& params : samples) {
      for (Direction d : {Direction::Forward, Direction::Backward}) {
        const Orientation o = orient(r, d);
        std::span<const Scalar> matched(params.data(), o.source.slot_count());
        std::span<const Scalar> fresh(params.data(), o.fresh.size());
        // Constant-parameter patterns are only instantiable as written.
        if (!check_orientation(r, d, matched, fresh)) {
          throw std::logic_error("rule " + r.name + " is unsound");
        }
      }
    }
  }
}

// Matches a non-empty source pattern at slice index i. Returns the offset
// and the slot values.
std::optional<std::pair<std::size_t, std::vector<Scalar>>> match_at(const SliceForm& s,
                                                                    std::size_t i,
                                                                    const Pattern& pat) {
  const auto& slices = s.slices();
  if (pat.slices.empty() || i + pat.slices.size() > slices.size()) return std::nullopt;
  const Slice& first = slices[i];
  if (first.left < pat.slices[0].left || first.right < pat.slices[0].right) return std::nullopt;
  const std::size_t offset = first.left - pat.slices[0].left;
  const std::size_t context = first.right - pat.slices[0].right;
  std::vector<std::optional<Scalar>> bound(pat.slot_count());
  for (std::size_t t = 0; t < pat.slices.size(); ++t) {
    const Slice& actual = slices[i + t];
    const PatternSlice& want = pat.slices[t];
    if (actual.gen.kind() != want.kind || actual.left != offset + want.left ||
        actual.right != context + want.right) {
      return std::nullopt;
    }
    if (const auto* slot = std::get_if<std::size_t>(&want.param)) {
      if (bound[*slot] && *bound[*slot] != actual.gen.param()) return std::nullopt;
      bound[*slot] = actual.gen.param();
    } else if (const auto* value = std::get_if<Scalar>(&want.param)) {
      if (actual.gen.param() != *value) return std::nullopt;
    }
  }
  std::vector<Scalar> params;
  for (auto& b : bound) params.push_back(b.value_or(Scalar::zero()));
  return std::make_pair(offset, std::move(params));
}

std::string direction_name(const Redex& r) {
  return r.direction == Direction::Forward ? r.rule : r.rule + "^-1";
}

}  // namespace

const std::vector<RewriteRule>& rule_table() {
  static const std::vector<RewriteRule> table = [] {
    auto t = build_table();
    self_check(t);
    return t;
  }();
  return table;
}

const RewriteRule& find_rule(std::string_view name) {
  for (const auto& r : rule_table()) {
    if (r.name == name) return r;
  }
  throw IndexError("unknown rule '" + std::string(name) + "'");
}

std::vector<Redex> find_redexes(const SliceForm& s, const RedexQuery& query) {
  std::vector<const RewriteRule*> rules;
  for (const auto& r : rule_table()) {
    if (query.rules.empty() ||
        std::find(query.rules.begin(), query.rules.end(), r.name) != query.rules.end()) {
      rules.push_back(&r);
    }
  }
  const Scalar half(1, 2);
  const auto& slices = s.slices();
  std::vector<Redex> out;
  for (std::size_t i = 0; i <= slices.size(); ++i) {
    for (const RewriteRule* r : rules) {
      if (r->is_interchange()) {
        if (i + 1 < slices.size() && independent(slices[i], slices[i + 1])) {
          out.push_back(Redex{r->name, Direction::Forward, i, slices[i].left, {}, {}});
        }
        continue;
      }
      for (Direction d : {Direction::Forward, Direction::Backward}) {
        const Orientation o = orient(*r, d);
        const std::vector<Scalar> fresh(o.fresh.size(), half);
        if (o.source.slices.empty()) {
          if (!query.insertions) continue;
          const std::size_t arity = s.arity_before(i);
          for (std::size_t j = 0; j + o.source.dom <= arity; ++j) {
            out.push_back(Redex{r->name, d, i, j, {}, fresh});
          }
        } else if (auto m = match_at(s, i, o.source)) {
          out.push_back(Redex{r->name, d, i, m->first, std::move(m->second), fresh});
        }
      }
    }
  }
  return out;
}

ApplyResult apply_step(const SliceForm& s, const Redex& redex) {
  const RewriteRule* rule = nullptr;
  try {
    rule = &find_rule(redex.rule);
  } catch (const IndexError& e) {
    throw InvalidRedexError(e.what());
  }
  const auto& slices = s.slices();
  const auto stale = [&](const std::string& why) {
    return InvalidRedexError("redex " + direction_name(redex) + " @ slice " +
                             std::to_string(redex.slice_index) + " offset " +
                             std::to_string(redex.whisker_offset) + " does not apply: " + why);
  };
  if (redex.slice_index > slices.size()) throw stale("slice index out of range");

  if (rule->is_interchange()) {
    const std::size_t i = redex.slice_index;
    if (redex.direction != Direction::Forward || i + 1 >= slices.size() ||
        slices[i].left != redex.whisker_offset || !independent(slices[i], slices[i + 1])) {
      throw stale("slices are not independent");
    }
    auto [b2, a2] = interchange(slices[i], slices[i + 1]);
    std::vector<Slice> next = slices;
    next[i] = b2;
    next[i + 1] = a2;
    return {SliceForm(s.dom(), std::move(next)), false};
  }

  const Orientation o = orient(*rule, redex.direction);
  if (redex.fresh.size() != o.fresh.size()) throw stale("wrong number of free parameters");
  for (const auto& f : redex.fresh) {
    if (!f.is_probability()) throw stale("free parameter " + f.to_string() + " exceeds 1");
  }
  const std::size_t i = redex.slice_index;
  const std::size_t arity = s.arity_before(i);
  std::size_t offset = redex.whisker_offset;
  if (o.source.slices.empty()) {
    if (offset + o.source.dom > arity) throw stale("offset out of range");
    if (!redex.matched.empty()) throw stale("unexpected matched parameters");
  } else {
    auto m = match_at(s, i, o.source);
    if (!m || m->first != offset || m->second != redex.matched) throw stale("pattern mismatch");
  }
  const std::size_t context = arity - offset - o.source.dom;
  const Transfer t = o.transfer(redex.matched, redex.fresh);
  std::vector<Slice> replacement = o.target.instantiate(t.params, offset, context);

  std::vector<Slice> next;
  next.reserve(slices.size() - o.source.slices.size() + replacement.size());
  next.insert(next.end(), slices.begin(), slices.begin() + static_cast<std::ptrdiff_t>(i));
  next.insert(next.end(), replacement.begin(), replacement.end());
  next.insert(next.end(),
              slices.begin() + static_cast<std::ptrdiff_t>(i + o.source.slices.size()),
              slices.end());
  return {SliceForm(s.dom(), std::move(next)), t.filler_used};
}

SliceForm apply(const SliceForm& s, const Redex& r) { return apply_step(s, r).form; }

std::string format_step(const TraceStep& step) {
  const Redex& r = step.redex;
  std::string line = "step " + std::to_string(step.step) + ": " + direction_name(r) +
                     " @ slice " + std::to_string(r.slice_index) + " offset " +
                     std::to_string(r.whisker_offset);
  const RewriteRule& rule = find_rule(r.rule);
  std::vector<std::string> params;
  if (!rule.is_interchange()) {
    const Orientation o = orient(rule, r.direction);
    for (std::size_t k = 0; k < r.matched.size() && k < o.source.slot_names.size(); ++k) {
      params.push_back(o.source.slot_names[k] + "=" + r.matched[k].to_string());
    }
    for (std::size_t k = 0; k < r.fresh.size() && k < o.fresh.size(); ++k) {
      params.push_back(o.fresh[k] + "=" + r.fresh[k].to_string());
    }
  }
  if (!params.empty()) {
    line += " params ";
    for (std::size_t k = 0; k < params.size(); ++k) {
      if (k) line += ", ";
      line += params[k];
    }
  }
  if (step.filler_used) line += " [filler 0]";
  return line;
}

WalkResult random_walk_traced(const SliceForm& s, std::size_t steps, std::uint64_t seed) {
  Rng rng(seed);
  WalkResult result{s, {}};
  for (std::size_t k = 1; k <= steps; ++k) {
    const auto redexes = find_redexes(result.form, RedexQuery{{}, true});
    if (redexes.empty()) break;
    // Group by rule orientation so that insertion moves, which match at
    // every position, do not dominate the walk.
    std::map<std::pair<std::string, Direction>, std::vector<std::size_t>> groups;
    for (std::size_t idx = 0; idx < redexes.size(); ++idx) {
      groups[{redexes[idx].rule, redexes[idx].direction}].push_back(idx);
    }
    auto group = groups.begin();
    std::advance(group, static_cast<std::ptrdiff_t>(rng.below(groups.size())));
    Redex chosen = redexes[group->second[rng.below(group->second.size())]];
    chosen.fresh = sample_params(chosen.fresh.size(), rng);
    ApplyResult applied = apply_step(result.form, chosen);
    result.form = std::move(applied.form);
    result.trace.push_back(TraceStep{k, std::move(chosen), applied.filler_used});
  }
  return result;
}

SliceForm random_walk(const SliceForm& s, std::size_t steps, std::uint64_t seed) {
  return random_walk_traced(s, steps, seed).form;
}

std::vector<RuleCheck> verify_rule(const RewriteRule& rule, std::size_t instantiations,
                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RuleCheck> out;
  if (rule.is_interchange()) {
    // Every pair of generators placed side by side, slid both ways.
    const std::vector<Generator> gens = {Generator::del(), Generator::merge(),
                                         Generator::swap(),
                                         Generator::branch(random_probability(rng))};
    bool ok = true;
    for (const auto& a : gens) {
      for (const auto& b : gens) {
        const std::size_t width = a.dom() + b.dom();
        SliceForm a_first(width, {Slice{0, a, b.dom()}, Slice{a.cod(), b, 0}});
        SliceForm b_first(width, {Slice{a.dom(), b, 0}, Slice{0, a, b.cod()}});
        for (const SliceForm* f : {&a_first, &b_first}) {
          auto [x, y] = interchange(f->slices()[0], f->slices()[1]);
          ok = ok && eval(from_slices(*f)) == eval(from_slices(SliceForm(width, {x, y})));
        }
      }
    }
    out.push_back(RuleCheck{rule.name, "all generator pairs", ok});
    return out;
  }
  const std::size_t count = rule.has_parameters() ? instantiations : 1;
  for (std::size_t k = 0; k < count; ++k) {
    bool ok = true;
    std::string described;
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const Orientation o = orient(rule, d);
      const auto matched = sample_params(o.source.slot_count(), rng);
      const auto fresh = sample_params(o.fresh.size(), rng);
      ok = ok && check_orientation(rule, d, matched, fresh);
      if (d == Direction::Forward) {
        for (std::size_t i = 0; i < matched.size(); ++i) {
          if (!described.empty()) described += ", ";
          described += o.source.slot_names[i] + "=" + matched[i].to_string();
        }
        for (std::size_t i = 0; i < fresh.size(); ++i) {
          if (!described.empty()) described += ", ";
          described += o.fresh[i] + "=" + fresh[i].to_string();
        }
      }
    }
    out.push_back(RuleCheck{rule.name, described, ok});
  }
  return out;
}

}  // namespace stomap
