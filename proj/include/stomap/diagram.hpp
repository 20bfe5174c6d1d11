#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "stomap/scalar.hpp"

namespace stomap {

enum class GenKind { Del, E, S, C };

/// One of the four generating morphisms: create (0->1), merge (2->1),
/// swap (2->2) and the probabilistic branch c(λ) (1->2).
class Generator {
 public:
  static Generator del() { return Generator(GenKind::Del, {}); }
  static Generator merge() { return Generator(GenKind::E, {}); }
  static Generator swap() { return Generator(GenKind::S, {}); }
  /// Throws DomainError unless 0 <= lambda <= 1.
  static Generator branch(Scalar lambda);
  /// `param` must be given exactly when kind == C.
  static Generator make(GenKind kind, std::optional<Scalar> param = std::nullopt);

  GenKind kind() const noexcept { return kind_; }
  /// Branch probability; zero for parameter-free generators.
  const Scalar& param() const noexcept { return param_; }
  std::size_t dom() const noexcept;
  std::size_t cod() const noexcept;

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  Generator(GenKind kind, Scalar param) : kind_(kind), param_(std::move(param)) {}
  GenKind kind_;
  Scalar param_;
};

struct IdNode;
struct GenNode;
struct TensorNode;
struct ComposeNode;

/// Immutable term over the generators, identities, tensor and composition.
///
/// Cheap to copy: subterms are shared. Every constructor checks arities, so a
/// Diagram value is always well typed.
class Diagram {
 public:
  using Node = std::variant<IdNode, GenNode, TensorNode, ComposeNode>;

  /// id(0).
  Diagram();

  static Diagram id(std::size_t n);
  static Diagram gen(Generator g);
  static Diagram del() { return gen(Generator::del()); }
  static Diagram merge() { return gen(Generator::merge()); }
  static Diagram swap() { return gen(Generator::swap()); }
  static Diagram branch(Scalar lambda) { return gen(Generator::branch(std::move(lambda))); }
  static Diagram tensor(Diagram left, Diagram right);
  /// after ∘ before; throws ArityError unless before.cod() == after.dom().
  static Diagram compose(Diagram after, Diagram before);

  std::size_t dom() const noexcept;
  std::size_t cod() const noexcept;
  std::size_t generator_count() const noexcept;
  const Node& node() const noexcept;

  /// Structural equality of the term trees.
  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  struct Impl;
  explicit Diagram(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct IdNode {
  std::size_t n;
};
struct GenNode {
  Generator gen;
};
struct TensorNode {
  Diagram left;
  Diagram right;
};
struct ComposeNode {
  Diagram after;
  Diagram before;
};

// Free-function spellings of the constructors.
Diagram make_gen(GenKind kind, std::optional<Scalar> param = std::nullopt);
Diagram make_id(std::size_t n);
Diagram tensor(Diagram a, Diagram b);
Diagram compose(Diagram after, Diagram before);

/// id(k) * d * id(l), leaving out zero-width identities.
Diagram whisker(std::size_t k, Diagram d, std::size_t l);
/// Left-nested tensor of all parts; id(0) for an empty list.
Diagram tensor_all(std::span<const Diagram> parts);
/// d * d * ... * d (count factors), right-nested; id(0) when count is 0.
Diagram tensor_power(const Diagram& d, std::size_t count);
/// Left-nested tensor of `count` copies of del.
Diagram del_power(std::size_t count);

/// One whiskered generator: id(left) * gen * id(right).
struct Slice {
  std::size_t left;
  Generator gen;
  std::size_t right;

  std::size_t input_arity() const noexcept { return left + gen.dom() + right; }
  std::size_t output_arity() const noexcept { return left + gen.cod() + right; }
  friend bool operator==(const Slice&, const Slice&) = default;
};

/// A diagram as a list of slices applied input to output.
class SliceForm {
 public:
  explicit SliceForm(std::size_t dom = 0) : dom_(dom) {}
  /// Throws ArityError if the slices do not thread from `dom`.
  SliceForm(std::size_t dom, std::vector<Slice> slices);

  std::size_t dom() const noexcept { return dom_; }
  std::size_t cod() const noexcept;
  const std::vector<Slice>& slices() const noexcept { return slices_; }
  std::size_t size() const noexcept { return slices_.size(); }
  bool empty() const noexcept { return slices_.empty(); }
  /// Arity before slice i (i == size() gives the codomain).
  std::size_t arity_before(std::size_t i) const;

  friend bool operator==(const SliceForm&, const SliceForm&) = default;

 private:
  std::size_t dom_;
  std::vector<Slice> slices_;
};

/// Layers a term. Tensor factors are sequenced left factor first.
SliceForm to_slices(const Diagram& d);
/// Right-nested composition of whiskered generators.
Diagram from_slices(const SliceForm& s);

}  // namespace stomap
