#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bcl/field.hpp"

namespace bcl {

/// Sparse integer matrix with exact rank over a chosen field.
/// Row-major storage; elimination densifies below kDenseCols columns.
/// Over F_p: modular row elimination. Over Q: integer-preserving
/// (fraction-free) elimination with per-row content removal, so entries stay
/// integers throughout.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Accumulates into (r, c); entries may legitimately cancel to zero.
  void add(std::size_t r, std::size_t c, long long v);

  std::size_t rank(const FieldSpec& field) const;

  std::size_t nnz() const;

  /// Matrix product check helper (for the d∘d = 0 invariant in tests).
  static bool product_is_zero(const ExactMatrix& a, const ExactMatrix& b);

  static constexpr std::size_t kDenseCols = 512;

 private:
  std::size_t rows_, cols_;
  // per row: sorted (col, value) with value != 0 after normalize()
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> data_;

  std::vector<std::vector<std::pair<std::uint32_t, long long>>> normalized_rows() const;
  std::size_t rank_mod_p(std::uint32_t p) const;
  std::size_t rank_over_q() const;
};

}  // namespace bcl
