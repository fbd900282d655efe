#pragma once

#include <optional>
#include <vector>

#include "ohomres/complex.hpp"

namespace ohomres {

/// A failure of the right-link containment rule.
///
/// Inside the complex K = rlk(...rlk(rlk(H, context[0]), context[1])..., context.back())
/// we have i < j, both vertices of K, `face` ∈ rlk_K(j) and `face` ∉ rlk_K(i).
struct CointervalViolation {
  std::vector<int> context;
  int i = 0;
  int j = 0;
  VertexSet face;
};

struct CointervalWitness {
  bool verdict = true;
  std::optional<CointervalViolation> violation;
};

/// Decides cointervality under the vertex order 1 < 2 < ... < n.
/// The void complex and {∅} are cointerval. When the answer is no, the first
/// violation found is reported: recursion into rlk(i) for increasing i comes
/// before the containment checks, pairs (i, j) are scanned lexicographically and
/// the reported face is the first missing face in size-then-revlex order.
CointervalWitness is_cointerval(const Complex& h);

/// Re-checks a violation against the definition.
bool violation_holds(const Complex& h, const CointervalViolation& v);

bool is_shifted(const Complex& h);

/// Searches S_n for a relabeling perm (vertex v becomes perm[v-1]) under which the
/// complex is cointerval. Permutations are tried in lexicographic order, so the
/// identity comes first. Throws std::out_of_range when n > max_vertices.
std::optional<std::vector<int>> exists_cointerval_order(const Complex& h, int max_vertices = 10);

/// Certificate of vertex decomposability. Leaves are simplices (including {∅});
/// an internal node records its shedding vertex x and has exactly two children,
/// the deletion H∖{x} followed by the link lk_H(x).
struct SheddingTree {
  Complex complex;
  int shedding_vertex = 0;
  std::vector<SheddingTree> children;

  bool is_leaf() const { return children.empty(); }
  std::size_t node_count() const;
};

/// Depth-first search over shedding vertices in increasing order, memoized on the
/// support-compressed facet list. Returns the first certificate found.
/// The void complex is accepted as a leaf.
std::optional<SheddingTree> is_vertex_decomposable(const Complex& h);

/// Re-validates every node: leaves are simplices, internal nodes hold a vertex x of
/// their complex, children equal H∖{x} and lk_H(x), and no facet of lk_H(x) is a
/// facet of H∖{x}.
bool validate_shedding_tree(const SheddingTree& tree);

/// True when x is a vertex of H and no facet of lk_H(x) is a facet of H∖{x}.
bool satisfies_shedding_condition(const Complex& h, int x);

/// Why a vertex fails to be a shedding vertex at the top level.
struct SheddingFailure {
  enum class Reason { SharedFacet, DeletionNotDecomposable, LinkNotDecomposable };
  int vertex = 0;
  Reason reason = Reason::SharedFacet;
  /// The facet of lk(x) that is also a facet of H∖{x} when reason == SharedFacet.
  VertexSet shared_facet;
};

/// One entry per vertex of H explaining why no vertex sheds. Empty when H is
/// vertex decomposable.
std::vector<SheddingFailure> shedding_failures(const Complex& h);

/// The largest element of the revlex-smallest subset of V(H) that is not a face.
/// For cointerval H this vertex is always a shedding vertex. Throws
/// std::invalid_argument when H has no vertices, is a simplex, or is not cointerval.
int theorem_shedding_vertex(const Complex& h);

}  // namespace ohomres
