#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stomap/diagram.hpp"

namespace stomap {

/// Parameter of a c slice inside a pattern: none (other generators), a
/// binding slot, or a fixed value.
using ParamRef = std::variant<std::monostate, std::size_t, Scalar>;

struct PatternSlice {
  std::size_t left;
  GenKind kind;
  ParamRef param;
  std::size_t right;
};

/// A short slice form over `dom` strands with parameter slots. Slices that
/// share a slot must carry the same value.
struct Pattern {
  std::size_t dom = 0;
  std::vector<PatternSlice> slices;
  std::vector<std::string> slot_names;

  std::size_t slot_count() const noexcept { return slot_names.size(); }
  /// The slices with slots filled in, embedded between `offset` strands on
  /// the left and `context` strands on the right.
  std::vector<Slice> instantiate(std::span<const Scalar> params, std::size_t offset = 0,
                                 std::size_t context = 0) const;
  /// Standalone slice form of the instantiated pattern.
  SliceForm form(std::span<const Scalar> params) const;
};

/// Parameters for the target side, computed from the matched source side and
/// any free parameters the source side does not determine.
struct Transfer {
  std::vector<Scalar> params;
  bool filler_used = false;  // an arbitrary value was fixed to the filler 0
};
using TransferFn =
    std::function<Transfer(std::span<const Scalar> matched, std::span<const Scalar> fresh)>;

/// A local equation lhs = rhs usable in both directions.
struct RewriteRule {
  std::string name;
  std::string equation;
  Pattern lhs;
  Pattern rhs;
  TransferFn forward;   // lhs params -> rhs params
  TransferFn backward;  // rhs params -> lhs params
  std::vector<std::string> forward_fresh;
  std::vector<std::string> backward_fresh;

  /// The interchange move X sliding two independent adjacent slices past
  /// each other. It has no patterns and is matched structurally.
  bool is_interchange() const noexcept { return name == "X"; }
  bool has_parameters() const noexcept {
    return lhs.slot_count() + rhs.slot_count() + forward_fresh.size() +
               backward_fresh.size() > 0;
  }
};

enum class Direction { Forward, Backward };

/// A place where a rule applies.
struct Redex {
  std::string rule;
  Direction direction = Direction::Forward;
  std::size_t slice_index = 0;
  std::size_t whisker_offset = 0;
  std::vector<Scalar> matched;  // source-side slot values
  std::vector<Scalar> fresh;    // free parameters, one per name in *_fresh

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// Relations R1..R12, derived D13 and D14, and the interchange move X, in
/// that order. Each equation is checked under evaluation when the table is
/// first built; the table is immutable afterwards.
const std::vector<RewriteRule>& rule_table();

/// Looks up a rule by name; throws IndexError for unknown names.
const RewriteRule& find_rule(std::string_view name);

struct RedexQuery {
  /// Rule names to consider; all rules when empty.
  std::vector<std::string> rules;
  /// Also report matches of empty sides (e.g. inserting s;s anywhere). These
  /// exist at every position and are off by default.
  bool insertions = false;
};

/// All matches of rule sides against contiguous slice runs, ordered by slice
/// index, then rule table order, forward before backward. Free parameters of
/// the returned redexes are preset to 1/2.
std::vector<Redex> find_redexes(const SliceForm& s, const RedexQuery& query = {});

struct ApplyResult {
  SliceForm form;
  bool filler_used = false;
};

/// Replaces the matched run by the instantiated other side. Throws
/// InvalidRedexError when the redex does not match `s` as recorded.
ApplyResult apply_step(const SliceForm& s, const Redex& r);
SliceForm apply(const SliceForm& s, const Redex& r);

struct TraceStep {
  std::size_t step;  // 1-based
  Redex redex;
  bool filler_used;
};

/// `step <k>: <rule> @ slice <i> offset <j> [params name=p/q, ...]`; reverse
/// applications are named `<rule>^-1`.
std::string format_step(const TraceStep& step);

struct WalkResult {
  SliceForm form;
  std::vector<TraceStep> trace;
};

/// `steps` uniformly chosen rule applications (choose a rule orientation,
/// then a position), free parameters drawn at random. Reproducible from seed.
/// Stops early only if no rule applies at all.
WalkResult random_walk_traced(const SliceForm& s, std::size_t steps, std::uint64_t seed);
SliceForm random_walk(const SliceForm& s, std::size_t steps, std::uint64_t seed);

/// One instantiation of a rule under evaluation.
struct RuleCheck {
  std::string rule;
  std::string params;  // "λ=1/2, μ=1/3" or empty
  bool passed;
};

/// Evaluates both sides for `instantiations` random parameter choices (one
/// check for parameter-free rules), in both orientations.
std::vector<RuleCheck> verify_rule(const RewriteRule& rule, std::size_t instantiations,
                                   std::uint64_t seed);

}  // namespace stomap
