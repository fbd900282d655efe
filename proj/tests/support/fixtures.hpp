#pragma once

#include <random>
#include <vector>

#include "ohomres/complex.hpp"
#include "ohomres/homcomplex.hpp"

namespace fixtures {

using ohomres::Complex;

// K read on four vertices; the fifth vertex of the printed version never contributes.
inline Complex K() { return Complex::from_facets(4, {{1, 2, 4}, {3, 4}}); }
inline Complex L() { return Complex::from_facets(5, {{1, 2, 4}, {1, 2, 5}, {3, 4}, {3, 5}}); }
inline Complex L_prime() { return Complex::from_facets(5, {{1, 2, 4}, {3, 4}, {3, 5}}); }

// Facets {2,5,6} and {1,a,b} for a,b in {3,4,5,6}.
inline Complex equivalence_example() {
  std::vector<std::vector<int>> f{{2, 5, 6}};
  for (int a = 3; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) f.push_back({1, a, b});
  return Complex::from_facets(6, f);
}
inline Complex equivalence_example_fixed() {
  std::vector<std::vector<int>> f{{2, 5, 6}, {2, 4, 6}};
  for (int a = 3; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) f.push_back({1, a, b});
  return Complex::from_facets(6, f);
}

inline Complex not_shifted() { return Complex::from_facets(4, {{1, 3}, {2, 4}, {1, 4}}); }
inline Complex two_edges() { return Complex::from_facets(4, {{1, 2}, {3, 4}}); }
inline Complex points(int n) {
  std::vector<std::vector<int>> f;
  for (int i = 1; i <= n; ++i) f.push_back({i});
  return Complex::from_facets(n, f);
}
inline Complex complete(int n) {
  std::vector<std::vector<int>> f;
  if (n == 1) f.push_back({1});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) f.push_back({i, j});
  return Complex::from_facets(n, f);
}
inline Complex edge() { return Complex::from_facets(2, {{1, 2}}); }
inline Complex path3() { return Complex::from_facets(3, {{1, 2}, {2, 3}}); }

/// Every complex on [n] with all n vertices, n = 1..max_n (max_n <= 6).
std::vector<Complex> all_complexes(int max_n);
/// Cointerval complexes on [m] with all m vertices, m = 1..max_m, found by the
/// face-mask filter.
std::vector<Complex> cointerval_complexes(int max_m);

/// Random restriction: each alpha entry is a cap in 0..n or unbounded, beta a random
/// degree-n monomial; either may be absent.
ohomres::RestrictionSpec random_spec(std::mt19937& rng, int n, int m);

}  // namespace fixtures
