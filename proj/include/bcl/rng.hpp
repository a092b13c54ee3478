#pragma once

#include <cstdint>

namespace bcl {

/// SplitMix64. Deterministic across platforms, unlike the standard
/// distributions; traces and reports must replay bit-exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform in [1, n).
  std::uint64_t nonzero_below(std::uint64_t n) { return 1 + below(n - 1); }

  bool coin() { return next() & 1; }

  /// Derive an independent stream (for per-instance determinism in parallel runs).
  Rng fork(std::uint64_t salt) {
    Rng r(state_ ^ (0xa0761d6478bd642fULL * (salt + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace bcl
