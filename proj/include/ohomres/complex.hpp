#pragma once

#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "ohomres/vertex_set.hpp"

namespace ohomres {

namespace detail {
struct FaceCache;
}

/// A finite simplicial complex on the ordered vertex set 1..n, stored by its facets.
///
/// The void complex (no faces at all) and the irrelevant complex {∅} are distinct
/// values; both report dim() == -1, use is_void() to tell them apart. Vertices in
/// 1..n that lie in no face are allowed. Values are immutable; copies share the
/// lazily built face list.
class Complex {
 public:
  /// The void complex on zero vertices.
  Complex();

  /// Builds the downward closure of `facets`. Non-maximal input sets are absorbed.
  /// Throws std::invalid_argument for vertices outside 1..n, for n outside 0..64,
  /// and for n == 0 unless the facet list is empty or [[]].
  static Complex from_facets(int n, const std::vector<std::vector<int>>& facets);
  static Complex from_sets(int n, std::vector<VertexSet> facets);
  static Complex void_complex(int n = 0);
  /// {∅}
  static Complex irrelevant(int n = 0);
  /// The full simplex on 1..n.
  static Complex simplex(int n);

  int n() const { return n_; }
  bool is_void() const { return facets_.empty(); }
  /// Largest face size minus one; -1 for {∅} and for the void complex.
  int dim() const;
  /// True when there is exactly one facet (this includes {∅}).
  bool is_simplex() const { return facets_.size() == 1; }

  /// Facets in increasing revlex order.
  std::span<const VertexSet> facets() const { return facets_; }
  /// All faces, ordered by size, then revlex. Built on first use.
  const std::vector<VertexSet>& faces() const;
  std::vector<std::size_t> f_vector() const;

  bool contains(VertexSet face) const;
  /// Union of all faces.
  VertexSet vertices() const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.n_ == b.n_ && a.facets_ == b.facets_; }
  /// Subcomplex test (same vertex range not required).
  bool subcomplex_of(const Complex& other) const;

 private:
  Complex(int n, std::vector<VertexSet> facets, bool already_reduced);

  int n_ = 0;
  std::vector<VertexSet> facets_;
  std::shared_ptr<detail::FaceCache> cache_;
};

/// lk_H(σ) = {τ ∈ H : σ ∩ τ = ∅, σ ∪ τ ∈ H}. Throws std::invalid_argument when σ ∉ H.
Complex link(const Complex& h, VertexSet sigma);

/// The link of σ restricted to vertices strictly greater than max(σ).
/// Throws std::invalid_argument when σ is empty or not a face.
Complex rlk(const Complex& h, VertexSet sigma);
inline Complex rlk(const Complex& h, int vertex) { return rlk(h, VertexSet::singleton(vertex)); }

/// Faces of H contained in W.
Complex induced(const Complex& h, VertexSet w);

/// H∖{x}: the faces not containing x.
Complex deletion(const Complex& h, int x);

/// Renames vertex v to perm[v-1]; perm must be a permutation of 1..n.
Complex relabel(const Complex& h, std::span<const int> perm);

/// Revlex order on vertex sets: F < G iff max(F Δ G) ∈ G.
std::strong_ordering revlex_set_cmp(VertexSet f, VertexSet g);

}  // namespace ohomres
