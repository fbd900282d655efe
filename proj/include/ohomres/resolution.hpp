#pragma once

#include <optional>
#include <vector>

#include "ohomres/homcomplex.hpp"
#include "ohomres/homology.hpp"

namespace ohomres {

/// Minimal generators of an equigenerated monomial ideal.
struct IdealGens {
  int m = 0;
  int degree = 0;
  /// Distinct, listed in revlex order, largest first.
  std::vector<Monomial> gens;
};

/// Monomials of all ordered homomorphisms G -> H.
IdealGens ideal_generators(const Complex& g, const Complex& h);
/// Generators of the restricted ideal: labels of the vertices of build_ohom(g, h, spec).
IdealGens ideal_generators(const Complex& g, const Complex& h, const RestrictionSpec& spec);

/// All distinct lcms of nonempty sets of vertex labels.
std::vector<Monomial> lcm_lattice(const PComplex& x);

/// Acyclicity of X_{≤a} for every a in the lcm lattice of the vertex labels. The
/// subcomplexes are deduplicated by their cell sets. `threads` > 1 splits the checks
/// across worker threads. Throws std::invalid_argument for the empty complex.
bool verify_supports_resolution(const PComplex& x, FieldTag field, unsigned threads = 1);
bool verify_supports_resolution(const Complex& g, const Complex& h, const RestrictionSpec& spec, FieldTag field,
                                unsigned threads = 1);

/// No covering pair of cells shares a label.
bool verify_minimality(const PComplex& x);
/// Every covering pair has a label quotient of degree exactly one.
bool verify_linearity(const PComplex& x);

struct BettiTable {
  std::vector<std::size_t> values;
  /// False when the target was not cointerval and the numbers were accepted only
  /// after an explicit resolution check.
  bool cointerval_target = true;
};

/// β_k = f_k(Δ). Throws std::invalid_argument when H is not cointerval unless
/// override_check is set; with the override the support and minimality checks run and
/// std::runtime_error is thrown if either fails.
BettiTable betti_numbers(const Complex& g, const Complex& h, const RestrictionSpec& spec = {},
                         bool override_check = false);

struct ExportEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int sign = 1;
  Monomial monomial;
};

/// One homological degree. Layer 0 maps the generators to the ring (a 1 x f_0 row of
/// generator monomials); layer i >= 1 is ∂_i with entries [τ:σ]·x_τ/x_σ.
struct ExportLayer {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<ExportEntry> entries;
  /// Cells indexing the columns (the rows are the previous layer's columns).
  std::vector<Cell> col_cells;
};

struct ResolutionExport {
  int m = 0;
  std::vector<ExportLayer> layers;
};

/// Throws std::invalid_argument for an empty complex and std::runtime_error when the
/// support check fails.
ResolutionExport export_resolution(const PComplex& x);
ResolutionExport export_resolution(const Complex& g, const Complex& h, const RestrictionSpec& spec = {});

}  // namespace ohomres
