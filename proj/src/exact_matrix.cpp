#include "bcl/exact_matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bcl {

void ExactMatrix::add(std::size_t r, std::size_t c, long long v) {
  if (v == 0) return;
  data_[r].emplace_back(static_cast<std::uint32_t>(c), v);
}

std::size_t ExactMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : normalized_rows()) n += row.size();
  return n;
}

std::vector<std::vector<std::pair<std::uint32_t, long long>>> ExactMatrix::normalized_rows()
    const {
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].empty()) continue;
    std::map<std::uint32_t, long long> acc;
    for (auto [c, v] : data_[r]) acc[c] += v;
    auto& row = out[r];
    row.reserve(acc.size());
    for (auto [c, v] : acc)
      if (v != 0) row.emplace_back(c, v);
  }
  return out;
}

std::size_t ExactMatrix::rank(const FieldSpec& field) const {
  if (rows_ == 0 || cols_ == 0) return 0;
  if (field.is_prime_field()) return rank_mod_p(field.p);
  return rank_over_q();
}

std::size_t ExactMatrix::rank_mod_p(std::uint32_t p) const {
  Fp F(p);
  if (cols_ < kDenseCols) {
    // dense row echelon
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows_);
    for (const auto& row : normalized_rows()) {
      if (row.empty()) continue;
      std::vector<std::uint64_t> dense(cols_, 0);
      bool nz = false;
      for (auto [c, v] : row) {
        dense[c] = F.from_int(v);
        nz |= dense[c] != 0;
      }
      if (nz) m.push_back(std::move(dense));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < m.size(); ++col) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][col] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[rank], m[piv]);
      std::uint64_t inv = F.inv(m[rank][col]);
      for (std::size_t i = rank + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        std::uint64_t f = F.mul(m[i][col], inv);
        for (std::size_t c = col; c < cols_; ++c)
          m[i][c] = F.sub(m[i][c], F.mul(f, m[rank][c]));
      }
      ++rank;
    }
    return rank;
  }

  // sparse elimination, min-fill-ish pivoting (shortest row first)
  using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<Row> live;
  for (const auto& row : normalized_rows()) {
    Row r;
    for (auto [c, v] : row) {
      auto e = F.from_int(v);
      if (e) r.emplace_back(c, e);
    }
    if (!r.empty()) live.push_back(std::move(r));
  }
  std::size_t rank = 0;
  while (!live.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < live.size(); ++i)
      if (live[i].size() < live[best].size()) best = i;
    Row piv = std::move(live[best]);
    live.erase(live.begin() + static_cast<long>(best));
    ++rank;
    std::uint32_t pc = piv.front().first;
    std::uint64_t pinv = F.inv(piv.front().second);
    std::vector<Row> next;
    next.reserve(live.size());
    for (auto& row : live) {
      auto it = std::lower_bound(row.begin(), row.end(), pc,
                                 [](const auto& a, std::uint32_t c) { return a.first < c; });
      if (it == row.end() || it->first != pc) {
        next.push_back(std::move(row));
        continue;
      }
      std::uint64_t f = F.mul(it->second, pinv);
      Row merged;
      merged.reserve(row.size() + piv.size());
      auto a = row.begin();
      auto b = piv.begin();
      while (a != row.end() || b != piv.end()) {
        if (b == piv.end() || (a != row.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
          merged.emplace_back(b->first, F.neg(F.mul(f, b->second)));
          ++b;
        } else {
          std::uint64_t v = F.sub(a->second, F.mul(f, b->second));
          if (v) merged.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      if (!merged.empty()) next.push_back(std::move(merged));
    }
    live = std::move(next);
  }
  return rank;
}

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void divide_by_content(std::vector<std::pair<std::uint32_t, BigInt>>& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (auto& [c, v] : row) {
    g = big_gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

}  // namespace

std::size_t ExactMatrix::rank_over_q() const {
  // Fraction-free: rows stay integral, contents divided out after each
  // combination. Dense and sparse share the row combination; only pivot
  // bookkeeping differs, so a single sparse loop suffices here.
  using Row = std::vector<std::pair<std::uint32_t, BigInt>>;
  std::vector<Row> live;
  for (const auto& row : normalized_rows()) {
    if (row.empty()) continue;
    Row r;
    r.reserve(row.size());
    for (auto [c, v] : row) r.emplace_back(c, BigInt(v));
    divide_by_content(r);
    live.push_back(std::move(r));
  }
  std::size_t rank = 0;
  while (!live.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < live.size(); ++i)
      if (live[i].size() < live[best].size()) best = i;
    Row piv = std::move(live[best]);
    live.erase(live.begin() + static_cast<long>(best));
    ++rank;
    std::uint32_t pc = piv.front().first;
    const BigInt& pv = piv.front().second;
    std::vector<Row> next;
    next.reserve(live.size());
    for (auto& row : live) {
      auto it = std::lower_bound(row.begin(), row.end(), pc,
                                 [](const auto& a, std::uint32_t c) { return a.first < c; });
      if (it == row.end() || it->first != pc) {
        next.push_back(std::move(row));
        continue;
      }
      BigInt f = it->second;
      // row := pv*row - f*piv  (kills column pc), then divide by content
      Row merged;
      merged.reserve(row.size() + piv.size());
      auto a = row.begin();
      auto b = piv.begin();
      while (a != row.end() || b != piv.end()) {
        if (b == piv.end() || (a != row.end() && a->first < b->first)) {
          merged.emplace_back(a->first, pv * a->second);
          ++a;
        } else if (a == row.end() || b->first < a->first) {
          merged.emplace_back(b->first, -f * b->second);
          ++b;
        } else {
          BigInt v = pv * a->second - f * b->second;
          if (v != 0) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      divide_by_content(merged);
      if (!merged.empty()) next.push_back(std::move(merged));
    }
    live = std::move(next);
  }
  return rank;
}

bool ExactMatrix::product_is_zero(const ExactMatrix& a, const ExactMatrix& b) {
  // (a*b)[r][c] over Z; b column access via transpose build
  if (a.cols() != b.rows()) return false;
  auto arows = a.normalized_rows();
  auto brows = b.normalized_rows();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::map<std::uint32_t, BigInt> acc;
    for (auto [k, av] : arows[r])
      for (auto [c, bv] : brows[k]) acc[c] += BigInt(av) * bv;
    for (auto& [c, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

}  // namespace bcl
