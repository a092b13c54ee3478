#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace bcl {

/// Dense column vectors over an arithmetic domain D (Fp or Rationals).
/// Everything the graded-algebra kernels need: incremental column spans,
/// membership tests, and kernel solving. Desk-scale dense is deliberate.
template <class D>
using Col = std::vector<typename D::Elem>;

/// Incrementally maintained column echelon basis of a subspace of F^n.
template <class D>
class ColumnSpace {
 public:
  ColumnSpace(const D& dom, std::size_t n) : dom_(&dom), n_(n) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }

  /// Reduces v against the basis in place; afterwards v has zeros in all
  /// pivot rows of the basis.
  void reduce(Col<D>& v) const {
    for (const auto& [piv, col] : basis_) {
      auto f = v[piv];  // basis columns are pivot-normalized to 1
      if (dom_->is_zero(f)) continue;
      for (std::size_t i = 0; i < n_; ++i)
        if (!dom_->is_zero(col[i])) v[i] = dom_->sub(v[i], dom_->mul(f, col[i]));
    }
  }

  /// Returns true (and grows the span) iff v was independent.
  bool insert(Col<D> v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && dom_->is_zero(v[piv])) ++piv;
    if (piv == n_) return false;
    auto inv = dom_->inv(v[piv]);
    for (auto& x : v) x = dom_->mul(x, inv);
    basis_.emplace_back(piv, std::move(v));
    return true;
  }

  bool contains(Col<D> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!dom_->is_zero(x)) return false;
    return true;
  }

 private:
  const D* dom_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, Col<D>>> basis_;
};

template <class D>
std::size_t rank_of_columns(const D& dom, std::size_t n, const std::vector<Col<D>>& cols) {
  ColumnSpace<D> cs(dom, n);
  for (const auto& c : cols) cs.insert(c);
  return cs.dim();
}

/// Kernel of the map F^m -> F^n whose matrix columns are `cols` (m of them).
/// Returned vectors live in F^m. Column reduction with an identity tail.
template <class D>
std::vector<Col<D>> kernel_basis(const D& dom, std::size_t n, const std::vector<Col<D>>& cols) {
  const std::size_t m = cols.size();
  // augmented columns: top n entries = image part, bottom m = combination
  std::vector<std::pair<std::size_t, Col<D>>> echelon;  // (pivot in [0,n), column)
  std::vector<Col<D>> kernel;
  for (std::size_t j = 0; j < m; ++j) {
    Col<D> v(n + m, dom.zero());
    for (std::size_t i = 0; i < n; ++i) v[i] = cols[j][i];
    v[n + j] = dom.one();
    for (const auto& [piv, col] : echelon) {
      const auto c = v[piv];
      if (dom.is_zero(c)) continue;
      for (std::size_t i = 0; i < n + m; ++i)
        if (!dom.is_zero(col[i])) v[i] = dom.sub(v[i], dom.mul(c, col[i]));
    }
    std::size_t piv = 0;
    while (piv < n && dom.is_zero(v[piv])) ++piv;
    if (piv == n) {
      kernel.emplace_back(v.begin() + static_cast<long>(n), v.end());
    } else {
      auto inv = dom.inv(v[piv]);
      for (auto& x : v) x = dom.mul(x, inv);
      echelon.emplace_back(piv, std::move(v));
    }
  }
  return kernel;
}

}  // namespace bcl
