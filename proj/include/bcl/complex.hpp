#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bcl/error.hpp"

namespace bcl {

using Vertex = int;              // non-negative label, not necessarily contiguous
using Face = std::vector<Vertex>;  // strictly increasing labels; {} is the empty face

Face sorted_face(Face f);  // sorts, rejects duplicate vertices

/// Multi-word bitset over the dense vertex indices of one complex.
/// Caps at 4096 vertices (64 words); barycentric subdivisions grow fast.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : w_((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= (1ULL << (i & 63)); }
  void clear(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const;
  bool subset_of(const Bits& o) const;
  bool intersects(const Bits& o) const;
  Bits minus(const Bits& o) const;
  Bits unite(const Bits& o) const;
  bool operator==(const Bits& o) const { return w_ == o.w_; }
  std::size_t hash() const;
  template <class F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

/// A finite simplicial complex stored by facets, immutable after
/// construction. Faces are exposed as sorted label lists; internally faces
/// are bitsets over a dense re-indexing of the labels. The per-dimension
/// face cache is built lazily and is safe under concurrent readers.
class Complex {
 public:
  /// Validates and normalizes. Facets contained in other facets are dropped
  /// and recorded in dropped_nonmaximal(). An empty list yields the void
  /// complex; [{}] yields the empty complex {∅}.
  static Complex from_facets(const std::vector<Face>& facets);

  static Complex void_complex();
  static Complex empty_complex();

  bool is_void() const { return void_; }
  bool is_empty_complex() const { return !void_ && facet_bits_.empty(); }

  /// -1 for {∅}, -2 for the void complex.
  int dim() const { return dim_; }
  bool pure() const { return pure_; }
  bool dropped_nonmaximal() const { return dropped_nonmaximal_; }

  const std::vector<Vertex>& vertices() const { return labels_; }
  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_facets() const { return void_ ? 0 : std::max<std::size_t>(facet_bits_.size(), 1); }

  /// Facets as label faces, canonical (lex) order. {∅} reports one empty facet.
  std::vector<Face> facet_list() const;

  bool contains(const Face& f) const;

  /// All k-faces as label faces in lex order; k = -1 gives {∅} (empty for
  /// the void complex); out-of-range k gives {}.
  const std::vector<Face>& faces(int k) const;
  /// Index of a k-face in faces(k); face must exist.
  std::size_t face_index(int k, const Face& f) const;

  /// (f_-1, f_0, ..., f_{dim}).
  std::vector<long long> f_vector() const;

  Complex link(const Face& f) const;
  Complex star(const Face& f) const;

  std::vector<Complex> connected_components() const;

  /// Classical h-vector (h_0..h_d), d = dim+1.
  std::vector<long long> h_vector() const;

  std::string summary() const;

  // --- internal-facing helpers used by the algorithm modules ---
  int vertex_index(Vertex v) const;  // -1 if absent
  Vertex label_of(std::size_t idx) const { return labels_[idx]; }
  const std::vector<Bits>& facet_bits() const { return facet_bits_; }
  Bits to_bits(const Face& f) const;       // throws if a label is absent
  Face to_face(const Bits& b) const;
  const std::vector<Bits>& faces_bits(int k) const;

 private:
  Complex() = default;
  static Complex build(std::vector<Face> facets, bool tolerate_nonmaximal);

  bool void_ = false;
  int dim_ = -2;
  bool pure_ = true;
  bool dropped_nonmaximal_ = false;
  std::vector<Vertex> labels_;                     // sorted
  std::unordered_map<Vertex, int> index_;          // label -> dense index
  std::vector<Bits> facet_bits_;                   // canonical order; empty for {∅} and void

  struct Cache {
    std::mutex mu;
    // per dimension k (offset by +1): faces in lex order + index map
    std::vector<std::optional<std::vector<Bits>>> bits;
    std::vector<std::optional<std::vector<Face>>> label_faces;
    std::vector<std::unordered_map<Bits, std::size_t, BitsHash>> index;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

  void ensure_dim_cached(int k) const;
};

/// A relative pair (Δ, Γ): Γ a subcomplex of Δ (possibly void). The faces of
/// the pair are Δ \ Γ.
struct RelativePair {
  Complex ambient;
  Complex sub;

  static RelativePair make(Complex ambient, Complex sub);

  bool sub_is_void() const { return sub.is_void(); }
  bool sub_contains(const Face& f) const { return !sub.is_void() && sub.contains(f); }
};

}  // namespace bcl
