#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ohomres/complex.hpp"
#include "ohomres/monomial.hpp"

namespace ohomres {

/// An ordered simplicial homomorphism G -> H, stored as the images of 1..n.
struct Hom {
  std::vector<int> images;

  int operator()(int vertex) const { return images[static_cast<std::size_t>(vertex - 1)]; }
  std::size_t size() const { return images.size(); }
  friend bool operator==(const Hom&, const Hom&) = default;
};

/// x_{φ(1)} * ... * x_{φ(n)} in m variables.
Monomial hom_monomial(const Hom& phi, int num_vars);

/// True when phi is weakly increasing and maps every face of G injectively onto a face of H.
bool is_ordered_hom(const Complex& g, const Complex& h, const Hom& phi);

/// All ordered simplicial homomorphisms, sorted by their monomials in revlex order,
/// largest first.
std::vector<Hom> ordered_homs(const Complex& g, const Complex& h);

/// A cell of the product of simplices: one nonempty subset of 1..m per vertex of G.
struct Cell {
  std::vector<VertexSet> parts;

  int dim() const;
  std::size_t size() const { return parts.size(); }
  /// ∏_i ∏_{j ∈ W_i} x_j
  Monomial label(int num_vars) const;
  /// Every selection of one element per part, in lexicographic order.
  std::vector<Hom> vertices() const;
  /// The selection taking the largest element of every part. For cells of an ohom
  /// complex this is the revlex-smallest vertex.
  Hom max_vertex() const;
  bool contains(const Hom& phi) const;
  bool face_of(const Cell& other) const;

  static Cell of(const Hom& phi);
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Orders cells by the concatenated sorted parts.
bool cell_key_less(const Cell& a, const Cell& b);

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept;
};

/// True when every selection from the parts is an ordered homomorphism. Uses the
/// max/min test for the order condition and a product-of-choices scan per facet of G.
bool is_multihom(const Complex& g, const Complex& h, const Cell& c);

inline constexpr int kNoCap = std::numeric_limits<int>::max();

/// Restrictions applied to an ohom complex.
///  - alpha: per-variable degree caps on cell labels (kNoCap for ∞);
///  - beta: keep cells all of whose vertices are revlex >= beta (beta has degree n);
///  - leq: keep cells whose labels divide this monomial.
struct RestrictionSpec {
  std::optional<std::vector<int>> alpha;
  std::optional<Monomial> beta;
  std::optional<Monomial> leq;

  bool empty() const { return !alpha && !beta && !leq; }
};

/// Throws std::invalid_argument when the spec does not fit m variables and degree-n labels.
void validate_spec(const RestrictionSpec& spec, int n, int m);

/// A labeled prodsimplicial complex. Cells are grouped by dimension and each group is
/// kept in cell_key_less order. Labels are stored per cell.
class PComplex {
 public:
  struct CellRef {
    int dim = 0;
    std::size_t index = 0;
    friend bool operator==(const CellRef&, const CellRef&) = default;
  };

  PComplex() = default;
  /// Arbitrary labeled cell family; face-closure is not enforced (see is_face_closed).
  PComplex(int n, int m, std::vector<Cell> cells, std::vector<Monomial> labels);
  /// Labels every cell by its product label ∏_{i, j∈W_i} x_j.
  static PComplex with_product_labels(int n, int m, std::vector<Cell> cells);

  int n() const { return n_; }
  int m() const { return m_; }
  bool empty() const { return cells_.empty(); }
  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t num_cells() const;
  std::vector<std::size_t> f_vector() const;

  std::span<const Cell> cells(int d) const;
  const Cell& cell(CellRef r) const { return cells_[static_cast<std::size_t>(r.dim)][r.index]; }
  const Monomial& label(CellRef r) const { return labels_[static_cast<std::size_t>(r.dim)][r.index]; }
  std::optional<CellRef> find(const Cell& c) const;
  bool contains_vertex(const Hom& phi) const { return find(Cell::of(phi)).has_value(); }
  /// Vertices (0-cells) as homomorphisms, in revlex order of labels, largest first.
  std::vector<Hom> vertex_homs() const;

  bool is_face_closed() const;

  /// Codimension-one faces of a cell with their incidence numbers: deleting the k-th
  /// smallest element of part i gives sign (-1)^(s+k-1) with s = Σ_{j<i}(|W_j|-1).
  std::vector<std::pair<Cell, int>> boundary(const Cell& c) const;

  /// The subcomplex of cells for which keep(cell, label) holds.
  template <class Pred>
  PComplex filter(Pred keep) const {
    std::vector<Cell> cs;
    std::vector<Monomial> ls;
    for (std::size_t d = 0; d < cells_.size(); ++d)
      for (std::size_t i = 0; i < cells_[d].size(); ++i)
        if (keep(cells_[d][i], labels_[d][i])) {
          cs.push_back(cells_[d][i]);
          ls.push_back(labels_[d][i]);
        }
    return PComplex(n_, m_, std::move(cs), std::move(ls));
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::vector<Monomial>> labels_;
  std::unordered_map<Cell, CellRef, CellHash> index_;
};

/// The ohom complex of G and H restricted by spec. Vertices are the surviving
/// homomorphisms; cells are grown one element at a time and kept when every
/// selection is a surviving homomorphism, so the result is face-closed.
PComplex build_ohom(const Complex& g, const Complex& h, const RestrictionSpec& spec = {});

/// Applies a restriction to an existing labeled complex: alpha and leq act on cell
/// labels, beta on the revlex-smallest vertex label of each cell.
PComplex restrict(const PComplex& x, const RestrictionSpec& spec);

/// The swap move: with k the first index where gamma and phi disagree and
/// gamma(k) > phi(k), returns gamma with gamma(k) replaced by phi(k). Throws
/// std::invalid_argument unless gamma and phi are distinct vertices of delta meeting
/// that condition.
Hom swap_vertex(const Hom& gamma, const Hom& phi, const PComplex& delta);

}  // namespace ohomres
