#include "stomap/constructions.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "stomap/error.hpp"

namespace stomap {

namespace {

// Families are memoized; Diagram values are immutable so sharing is safe.
template <class Key>
class Memo {
 public:
  template <class Build>
  Diagram get(const Key& key, Build&& build) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Diagram d = build();
    std::lock_guard lock(mutex_);
    return table_.emplace(key, std::move(d)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Diagram> table_;
};

Memo<std::size_t>& z_memo() {
  static Memo<std::size_t> memo;
  return memo;
}
Memo<std::size_t>& z_inv_memo() {
  static Memo<std::size_t> memo;
  return memo;
}
Memo<std::pair<std::size_t, std::size_t>>& p_memo() {
  static Memo<std::pair<std::size_t, std::size_t>> memo;
  return memo;
}

// a * b without zero-width identity factors.
Diagram join(Diagram a, Diagram b) {
  if (a.dom() == 0 && a.cod() == 0 && a.generator_count() == 0) return b;
  if (b.dom() == 0 && b.cod() == 0 && b.generator_count() == 0) return a;
  return Diagram::tensor(std::move(a), std::move(b));
}

}  // namespace

Diagram z(std::size_t n) {
  if (n == 0) throw DomainError("z(n) requires n >= 1");
  if (n == 1) return Diagram::id(1);
  return z_memo().get(n, [n] {
    // z(n) = (id(n-2) * s) ∘ (z(n-1) * id(1))
    return Diagram::compose(whisker(n - 2, Diagram::swap(), 0),
                            Diagram::tensor(z(n - 1), Diagram::id(1)));
  });
}

Diagram z_inv(std::size_t n) {
  if (n == 0) throw DomainError("zinv(n) requires n >= 1");
  if (n == 1) return Diagram::id(1);
  return z_inv_memo().get(n, [n] {
    return Diagram::compose(Diagram::tensor(z_inv(n - 1), Diagram::id(1)),
                            whisker(n - 2, Diagram::swap(), 0));
  });
}

Diagram p(std::size_t m, std::size_t n) {
  if (m == 0) return del_power(n);
  if (m == 1) return Diagram::id(n);
  if (m == 2 && n == 0) return Diagram::id(0);
  return p_memo().get({m, n}, [m, n] {
    if (m == 2) {
      // p(2,n) = (p(2,n-1) * e) ∘ (id(n-1) * z(n+1))
      return Diagram::compose(join(p(2, n - 1), Diagram::merge()),
                              whisker(n - 1, z(n + 1), 0));
    }
    // p(m,n) = p(2,n) ∘ (p(m-1,n) * id(n))
    return Diagram::compose(p(2, n), join(p(m - 1, n), Diagram::id(n)));
  });
}

Diagram iota(std::size_t j, std::size_t n) {
  if (j < 1 || j > n) {
    throw IndexError("iota(" + std::to_string(j) + "," + std::to_string(n) +
                     ") requires 1 <= j <= n");
  }
  std::vector<Diagram> parts(j - 1, Diagram::del());
  parts.push_back(Diagram::id(1));
  parts.insert(parts.end(), n - j, Diagram::del());
  return tensor_all(parts);
}

Diagram column_diagram(std::span<const Scalar> lambdas, std::size_t n) {
  if (n == 0 || lambdas.size() != n - 1) {
    throw ArityError("column diagram of arity " + std::to_string(n) + " needs " +
                     (n == 0 ? std::string("n >= 1") : std::to_string(n - 1)) +
                     " parameters, got " + std::to_string(lambdas.size()));
  }
  if (n == 1) return Diagram::id(1);
  Diagram acc = Diagram::branch(lambdas[0]);
  for (std::size_t j = 1; j < lambdas.size(); ++j) {
    acc = Diagram::compose(whisker(j, Diagram::branch(lambdas[j]), 0), std::move(acc));
  }
  return acc;
}

}  // namespace stomap
