#pragma once

#include <cstddef>
#include <vector>

namespace ohomres {

enum class FieldTag { Rationals, GF2 };

struct SparseEntry {
  std::size_t row = 0;
  long long value = 0;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Column-major sparse integer matrix; each column is sorted by row with no zeros.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<SparseEntry>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  /// Adds value at (row, col); entries must be pushed in increasing row order per column.
  void push(std::size_t row, std::size_t col, long long value) { columns[col].push_back({row, value}); }
  std::size_t nonzeros() const;
};

/// a * b as integers, or over GF(2) when field == GF2.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, FieldTag field);
bool is_zero(const SparseMatrix& m, FieldTag field);

/// Exact rank over ℚ. Fraction-free column reduction: columns are combined as
/// a*col - b*pivot_col and divided by their content, in 64-bit arithmetic with a
/// fallback to arbitrary precision on overflow.
std::size_t rank_rational(const SparseMatrix& m);
/// Rank over GF(2); entries are reduced mod 2.
std::size_t rank_gf2(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m, FieldTag field);

}  // namespace ohomres
