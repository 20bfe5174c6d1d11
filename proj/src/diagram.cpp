#include "stomap/diagram.hpp"

#include "stomap/error.hpp"

namespace stomap {

Generator Generator::branch(Scalar lambda) {
  if (!lambda.is_probability()) {
    throw DomainError("branch probability " + lambda.to_string() + " outside [0,1]");
  }
  return Generator(GenKind::C, std::move(lambda));
}

Generator Generator::make(GenKind kind, std::optional<Scalar> param) {
  if (kind == GenKind::C) {
    if (!param) throw DomainError("c requires a probability parameter");
    return branch(std::move(*param));
  }
  if (param) throw DomainError("only c takes a parameter");
  return Generator(kind, {});
}

std::size_t Generator::dom() const noexcept {
  switch (kind_) {
    case GenKind::Del: return 0;
    case GenKind::E: return 2;
    case GenKind::S: return 2;
    case GenKind::C: return 1;
  }
  return 0;
}

std::size_t Generator::cod() const noexcept {
  switch (kind_) {
    case GenKind::Del: return 1;
    case GenKind::E: return 1;
    case GenKind::S: return 2;
    case GenKind::C: return 2;
  }
  return 0;
}

struct Diagram::Impl {
  Node node;
  std::size_t dom;
  std::size_t cod;
  std::size_t generators;
};

Diagram::Diagram() : Diagram(id(0)) {}

Diagram Diagram::id(std::size_t n) {
  return Diagram(std::make_shared<const Impl>(Impl{IdNode{n}, n, n, 0}));
}

Diagram Diagram::gen(Generator g) {
  const auto dom = g.dom();
  const auto cod = g.cod();
  return Diagram(std::make_shared<const Impl>(Impl{GenNode{std::move(g)}, dom, cod, 1}));
}

Diagram Diagram::tensor(Diagram left, Diagram right) {
  const auto dom = left.dom() + right.dom();
  const auto cod = left.cod() + right.cod();
  const auto count = left.generator_count() + right.generator_count();
  return Diagram(std::make_shared<const Impl>(
      Impl{TensorNode{std::move(left), std::move(right)}, dom, cod, count}));
}

Diagram Diagram::compose(Diagram after, Diagram before) {
  if (before.cod() != after.dom()) {
    throw ArityError("cannot compose: first part has " + std::to_string(before.cod()) +
                     " outputs, second part has " + std::to_string(after.dom()) +
                     " inputs");
  }
  const auto dom = before.dom();
  const auto cod = after.cod();
  const auto count = after.generator_count() + before.generator_count();
  return Diagram(std::make_shared<const Impl>(
      Impl{ComposeNode{std::move(after), std::move(before)}, dom, cod, count}));
}

std::size_t Diagram::dom() const noexcept { return impl_->dom; }
std::size_t Diagram::cod() const noexcept { return impl_->cod; }
std::size_t Diagram::generator_count() const noexcept { return impl_->generators; }
const Diagram::Node& Diagram::node() const noexcept { return impl_->node; }

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.dom() != b.dom() || a.cod() != b.cod() ||
      a.generator_count() != b.generator_count() ||
      a.node().index() != b.node().index()) {
    return false;
  }
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, IdNode>) {
          return x.n == y.n;
        } else if constexpr (std::is_same_v<T, GenNode>) {
          return x.gen == y.gen;
        } else if constexpr (std::is_same_v<T, TensorNode>) {
          return x.left == y.left && x.right == y.right;
        } else {
          return x.after == y.after && x.before == y.before;
        }
      },
      a.node());
}

Diagram make_gen(GenKind kind, std::optional<Scalar> param) {
  return Diagram::gen(Generator::make(kind, std::move(param)));
}
Diagram make_id(std::size_t n) { return Diagram::id(n); }
Diagram tensor(Diagram a, Diagram b) { return Diagram::tensor(std::move(a), std::move(b)); }
Diagram compose(Diagram after, Diagram before) {
  return Diagram::compose(std::move(after), std::move(before));
}

Diagram whisker(std::size_t k, Diagram d, std::size_t l) {
  if (k > 0) d = Diagram::tensor(Diagram::id(k), std::move(d));
  if (l > 0) d = Diagram::tensor(std::move(d), Diagram::id(l));
  return d;
}

Diagram tensor_all(std::span<const Diagram> parts) {
  if (parts.empty()) return Diagram::id(0);
  Diagram acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Diagram::tensor(acc, parts[i]);
  return acc;
}

Diagram tensor_power(const Diagram& d, std::size_t count) {
  if (count == 0) return Diagram::id(0);
  Diagram acc = d;
  for (std::size_t i = 1; i < count; ++i) acc = Diagram::tensor(d, acc);
  return acc;
}

Diagram del_power(std::size_t count) {
  const std::vector<Diagram> parts(count, Diagram::del());
  return tensor_all(parts);
}

SliceForm::SliceForm(std::size_t dom, std::vector<Slice> slices)
    : dom_(dom), slices_(std::move(slices)) {
  std::size_t arity = dom_;
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    if (slices_[i].input_arity() != arity) {
      throw ArityError("slice " + std::to_string(i) + " expects " +
                       std::to_string(slices_[i].input_arity()) + " strands, has " +
                       std::to_string(arity));
    }
    arity = slices_[i].output_arity();
  }
}

std::size_t SliceForm::cod() const noexcept {
  return slices_.empty() ? dom_ : slices_.back().output_arity();
}

std::size_t SliceForm::arity_before(std::size_t i) const {
  if (i > slices_.size()) throw IndexError("slice index " + std::to_string(i));
  return i == 0 ? dom_ : slices_[i - 1].output_arity();
}

namespace {

void append_slices(const Diagram& d, std::size_t left, std::size_t right,
                   std::vector<Slice>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IdNode>) {
          // identities contribute no layers
        } else if constexpr (std::is_same_v<T, GenNode>) {
          out.push_back(Slice{left, node.gen, right});
        } else if constexpr (std::is_same_v<T, TensorNode>) {
          // Left factor runs first while the right factor's inputs wait.
          append_slices(node.left, left, right + node.right.dom(), out);
          append_slices(node.right, left + node.left.cod(), right, out);
        } else {
          append_slices(node.before, left, right, out);
          append_slices(node.after, left, right, out);
        }
      },
      d.node());
}

}  // namespace

SliceForm to_slices(const Diagram& d) {
  std::vector<Slice> slices;
  append_slices(d, 0, 0, slices);
  return SliceForm(d.dom(), std::move(slices));
}

Diagram from_slices(const SliceForm& s) {
  if (s.empty()) return Diagram::id(s.dom());
  Diagram acc;
  bool first = true;
  for (const auto& slice : s.slices()) {
    Diagram layer = whisker(slice.left, Diagram::gen(slice.gen), slice.right);
    acc = first ? std::move(layer) : Diagram::compose(std::move(layer), std::move(acc));
    first = false;
  }
  return acc;
}

}  // namespace stomap
