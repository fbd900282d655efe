#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ohomres/homcomplex.hpp"
#include "ohomres/rank.hpp"

namespace ohomres {

/// Cellular chain complex of a labeled prodsimplicial complex.
/// boundaries[i] is ∂_i : C_i -> C_{i-1} with rows and columns indexed in the
/// complex's cell order. boundaries[0] is the augmentation C_0 -> 𝕜 (a 1 x f_0 row
/// of ones) when reduced, and a 0 x f_0 matrix otherwise.
struct ChainComplex {
  FieldTag field = FieldTag::Rationals;
  bool reduced = true;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundaries;
};

/// Builds the boundary matrices and checks ∂_{i-1}∘∂_i = 0. Throws
/// std::invalid_argument if the complex is not face-closed, std::logic_error if the
/// composite check fails.
ChainComplex boundary_matrices(const PComplex& x, FieldTag field, bool reduced = true);

/// Incidence data of a face-closed complex, reusable across subcomplexes.
class BoundaryStructure {
 public:
  explicit BoundaryStructure(const PComplex& x);

  /// Reduced homology ranks (degrees 0..dim) of the subcomplex of cells flagged in
  /// keep[d][i]; keep must be face-closed. nullptr means the whole complex.
  /// Empty subcomplexes yield an empty vector.
  std::vector<std::size_t> reduced_homology(FieldTag field,
                                            const std::vector<std::vector<bool>>* keep = nullptr) const;

  /// Codimension-one faces of cell (d, i): pairs (index in dimension d-1, sign).
  const std::vector<std::pair<std::size_t, int>>& facets(int d, std::size_t i) const {
    return facets_[static_cast<std::size_t>(d)][i];
  }
  std::size_t count(int d) const { return facets_[static_cast<std::size_t>(d)].size(); }
  int dim() const { return static_cast<int>(facets_.size()) - 1; }

 private:
  std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> facets_;
};

/// Reduced homology ranks dim H̃_i(X; 𝕜) for i = 0..dim X. Throws
/// std::invalid_argument for the empty complex.
std::vector<std::size_t> homology_ranks(const PComplex& x, FieldTag field);

/// True when all reduced homology vanishes; the empty complex counts as acyclic.
bool is_acyclic(const PComplex& x, FieldTag field);

/// An elementary collapse: `face` is properly contained only in `coface`.
struct CollapsePair {
  Cell face;
  Cell coface;
};

/// Greedy elementary collapses, always taking the smallest free face (dimension,
/// then cell order). Returns the sequence when it reduces the complex to a single
/// vertex and nullopt when it stalls; a stall proves nothing. Throws
/// std::invalid_argument for the empty complex.
std::optional<std::vector<CollapsePair>> collapse_certificate(const PComplex& x);

struct RemovalStep {
  Hom vertex;
  /// The unique facet properly containing `vertex` at the time of removal.
  Cell facet;
};

struct RemovalCert {
  std::vector<RemovalStep> steps;
  Hom terminal;
};

struct RemovalOutcome {
  std::optional<RemovalCert> certificate;
  /// Set when the procedure fails: the revlex-smallest remaining vertex that is
  /// properly contained in zero or several facets.
  std::optional<Hom> offending_vertex;

  explicit operator bool() const { return certificate.has_value(); }
};

/// Repeatedly removes the revlex-smallest vertex together with every cell containing
/// it, after checking that exactly one facet properly contains that vertex.
/// Throws std::invalid_argument for the empty complex.
RemovalOutcome removal_certificate(const PComplex& delta);
RemovalOutcome removal_certificate(const Complex& g, const Complex& h, const RestrictionSpec& spec = {});

}  // namespace ohomres
