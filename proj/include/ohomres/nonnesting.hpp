#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ohomres/homcomplex.hpp"
#include "ohomres/resolution.hpp"

namespace ohomres {

/// A set partition of 1..r. Blocks are sorted internally and ordered by their minima.
struct Partition {
  int r = 0;
  std::vector<std::vector<int>> blocks;

  /// Validates and normalizes; throws std::invalid_argument when the blocks do not
  /// partition 1..r.
  Partition(int r, std::vector<std::vector<int>> blocks);
  /// Parses "1,4|2,5,6|3"; r is the largest element. Throws std::invalid_argument.
  static Partition parse(const std::string& text);
  static Partition singletons(int r);

  friend bool operator==(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

/// Literal test: blocks P_i ≠ P_j nest when some a<b<c<d has {a,d} ⊆ P_i,
/// {b,c} ⊆ P_j and no e ∈ P_i lies strictly between b and c.
bool is_nonnesting(const Partition& p);

/// All nonnesting partitions of [r], in restricted-growth-string order.
/// Throws std::out_of_range unless 1 <= r <= max_r.
std::vector<Partition> enumerate_nonnesting(int r, int max_r = 10);

using Arc = std::pair<int, int>;

/// Graph on 1..r given by arcs i < j, kept sorted.
struct ArcDiagram {
  int r = 0;
  std::vector<Arc> arcs;

  ArcDiagram() = default;
  /// Normalizes and validates (1 <= i < j <= r, no duplicates); throws std::invalid_argument.
  ArcDiagram(int r, std::vector<Arc> arcs);

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
  friend auto operator<=>(const ArcDiagram& a, const ArcDiagram& b) {
    if (auto c = a.r <=> b.r; c != 0) return c;
    return a.arcs <=> b.arcs;
  }
};

/// "{1,3},{2,4}", or "{}" for the empty diagram.
std::string to_string(const ArcDiagram& d);

/// Arcs between consecutive block elements. Throws std::invalid_argument if p nests.
ArcDiagram arc_diagram(const Partition& p);
/// Blocks are the connected components.
Partition partition_of(const ArcDiagram& d);
/// True when d is the arc diagram of a nonnesting partition.
bool is_arc_diagram(const ArcDiagram& d);

/// Deletes arcs {a,d} spanning another arc {b,c} (a <= b < c <= d) until none is left.
ArcDiagram reduce_graph(const ArcDiagram& g);
/// Same, with `choose(k)` picking which of the k currently deletable arcs (in sorted
/// order) goes next.
ArcDiagram reduce_graph(const ArcDiagram& g, const std::function<std::size_t(std::size_t)>& choose);

/// The 1-complex on r vertices with the given arcs as edges; vertices not on an arc
/// become singleton facets.
Complex graph_complex(const ArcDiagram& d);
/// Complete graph on n vertices as a 1-complex.
Complex complete_graph(int n);

IdealGens nonnesting_ideal(const Partition& p, int n);

/// True when every arc of q spans some arc of p.
bool poset_leq(const ArcDiagram& p, const ArcDiagram& q);

struct DiagramPoset {
  int r = 0;
  /// Sorted so that x < y in the order implies x comes first.
  std::vector<ArcDiagram> elements;
  /// leq[i][j] iff elements[i] <= elements[j].
  std::vector<std::vector<bool>> leq;
  /// mobius[i][j] = μ(elements[i], elements[j]), zero when not comparable.
  std::vector<std::vector<std::int64_t>> mobius;

  std::size_t index_of(const ArcDiagram& d) const;
};

/// Throws std::out_of_range unless 1 <= r <= max_r.
DiagramPoset build_poset(int r, int max_r = 8);

/// The generator of the upper set {Q : τ ∈ ohom(G_Q, K_n)} for a cell of
/// ohom(G_e, K_n) on r = τ.size() vertices. Throws std::invalid_argument when τ is not
/// such a cell.
ArcDiagram utau_generator(const Cell& tau);

/// Cells of ohom(G_e, K_n) for the edgeless graph on r vertices: tuples of nonempty
/// subsets with max W_i <= min W_{i+1}. Ordered as in PComplex.
std::vector<Cell> empty_diagram_cells(int r, int n);

/// weights[P][k] = ω_k(P, n) for k = 0..max_k, over all diagrams P of 𝒟_r.
using WeightTable = std::map<ArcDiagram, std::vector<std::uint64_t>>;

/// Buckets the k-cells of ohom(G_e, K_n) by utau_generator.
/// Throws std::out_of_range when r or n exceeds max_rn.
WeightTable weights(int r, int n, int max_k, int max_rn = 6);
/// The same table obtained by Möbius inversion of face counts of ohom(G_Q, K_n).
WeightTable weights_by_inversion(int r, int n, int max_k, int max_rn = 6);

/// binom(n, ĉ) when every arc is {i, i+1}, where ĉ counts the components of the full
/// path with those arcs removed; 0 otherwise.
std::uint64_t omega0_closed_form(const ArcDiagram& p, int n);

/// Arc diagrams of nonnesting partitions with every arc of span at most 2.
std::vector<ArcDiagram> small_diagrams(int r, int max_r = 10);

std::uint64_t binomial(int n, int k);

}  // namespace ohomres
