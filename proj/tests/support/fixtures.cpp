#include "fixtures.hpp"

#include "oracles.hpp"

namespace fixtures {

std::vector<Complex> all_complexes(int max_n) {
  std::vector<Complex> out;
  for (int n = 1; n <= max_n; ++n)
    oracle::for_each_complex(n, [&](oracle::FaceMask f) { out.push_back(oracle::mask_to_complex(n, f)); });
  return out;
}

std::vector<Complex> cointerval_complexes(int max_m) {
  std::vector<Complex> out;
  for (int m = 1; m <= max_m; ++m)
    oracle::for_each_complex(m, [&](oracle::FaceMask f) {
      if (oracle::mask_is_cointerval(f)) out.push_back(oracle::mask_to_complex(m, f));
    });
  return out;
}

ohomres::RestrictionSpec random_spec(std::mt19937& rng, int n, int m) {
  ohomres::RestrictionSpec spec;
  std::uniform_int_distribution<int> coin(0, 2);
  if (coin(rng) != 0) {
    std::vector<int> alpha;
    std::uniform_int_distribution<int> cap(0, n + 1);
    for (int j = 0; j < m; ++j) {
      int c = cap(rng);
      alpha.push_back(c > n ? ohomres::kNoCap : c);
    }
    spec.alpha = alpha;
  }
  if (coin(rng) != 0) {
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    std::uniform_int_distribution<int> var(0, m - 1);
    for (int i = 0; i < n; ++i) ++e[static_cast<std::size_t>(var(rng))];
    spec.beta = ohomres::Monomial(e);
  }
  return spec;
}

}  // namespace fixtures
