#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ohomres/cointerval.hpp"
#include "oracles.hpp"

using namespace ohomres;

TEST_CASE("equivalence example is rejected at the right links of 2 and 3") {
  auto w = is_cointerval(fixtures::equivalence_example());
  REQUIRE_FALSE(w.verdict);
  REQUIRE(w.violation);
  CHECK(w.violation->context.empty());
  CHECK(w.violation->i == 2);
  CHECK(w.violation->j == 3);
  CHECK(w.violation->face == VertexSet{4});
  CHECK(violation_holds(fixtures::equivalence_example(), *w.violation));
}

TEST_CASE("adding {2,4,6} makes the example cointerval") {
  auto w = is_cointerval(fixtures::equivalence_example_fixed());
  CHECK(w.verdict);
  CHECK_FALSE(w.violation);
}

TEST_CASE("cointerval but not shifted") {
  Complex h = fixtures::not_shifted();
  CHECK(is_cointerval(h).verdict);
  CHECK_FALSE(is_shifted(h));
}

TEST_CASE("void and irrelevant complexes are cointerval") {
  CHECK(is_cointerval(Complex::void_complex(3)).verdict);
  CHECK(is_cointerval(Complex::irrelevant(3)).verdict);
}

TEST_CASE("shifted examples") {
  CHECK(is_shifted(Complex::simplex(4)));
  CHECK(is_shifted(Complex::from_facets(4, {{1, 2}, {1, 3}, {4}})));
}

TEST_CASE("library predicates agree with the brute-force definitions on all complexes with n <= 5") {
  int cointerval_count = 0;
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_complex(n, [&](oracle::FaceMask mask) {
      Complex h = oracle::mask_to_complex(n, mask);
      oracle::FaceSet faces = oracle::faces_of(h);
      const bool expected = oracle::is_cointerval(faces);
      REQUIRE(oracle::mask_is_cointerval(mask) == expected);
      auto w = is_cointerval(h);
      REQUIRE(w.verdict == expected);
      if (!w.verdict) {
        REQUIRE(w.violation);
        REQUIRE(violation_holds(h, *w.violation));
      }
      REQUIRE(is_shifted(h) == oracle::is_shifted(faces));
      cointerval_count += expected;
    });
  }
  CHECK(cointerval_count > 0);
}

TEST_CASE("ordering search") {
  Complex k22 = Complex::from_facets(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto perm = exists_cointerval_order(k22);
  REQUIRE(perm);
  CHECK(is_cointerval(relabel(k22, *perm)).verdict);

  CHECK_FALSE(exists_cointerval_order(fixtures::two_edges()));
  // brute force over S_4 confirms that no order works
  std::vector<int> p{1, 2, 3, 4};
  do {
    CHECK_FALSE(oracle::is_cointerval(oracle::faces_of(relabel(fixtures::two_edges(), p))));
  } while (std::next_permutation(p.begin(), p.end()));

  auto id = exists_cointerval_order(fixtures::not_shifted());
  REQUIRE(id);
  CHECK(*id == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(exists_cointerval_order(Complex::simplex(11)), std::out_of_range);
}

TEST_CASE("vertex decomposability certificates") {
  auto leaf = is_vertex_decomposable(Complex::simplex(3));
  REQUIRE(leaf);
  CHECK(leaf->is_leaf());
  REQUIRE(is_vertex_decomposable(Complex::irrelevant(2)));

  CHECK_FALSE(is_vertex_decomposable(fixtures::two_edges()));
  auto failures = shedding_failures(fixtures::two_edges());
  REQUIRE(failures.size() == 4);
  for (const auto& f : failures) {
    CHECK(f.reason == SheddingFailure::Reason::SharedFacet);
    CHECK_FALSE(oracle::sheds(oracle::faces_of(fixtures::two_edges()), f.vertex));
    CHECK(f.shared_facet.size() == 1);
  }

  auto tree = is_vertex_decomposable(fixtures::not_shifted());
  REQUIRE(tree);
  CHECK(validate_shedding_tree(*tree));
  CHECK(oracle::valid_shedding_tree(*tree));
}

TEST_CASE("a tampered shedding tree is rejected") {
  auto tree = is_vertex_decomposable(fixtures::not_shifted());
  REQUIRE(tree);
  REQUIRE_FALSE(tree->is_leaf());
  SheddingTree bad = *tree;
  std::swap(bad.children[0], bad.children[1]);
  CHECK_FALSE(validate_shedding_tree(bad));
  CHECK_FALSE(oracle::valid_shedding_tree(bad));
}

TEST_CASE("shedding vertex from the revlex-first non-face") {
  CHECK(theorem_shedding_vertex(fixtures::not_shifted()) == 2);
  Complex fixed = fixtures::equivalence_example_fixed();
  int x = theorem_shedding_vertex(fixed);
  CHECK(x == oracle::revlex_first_nonface_max(oracle::faces_of(fixed)));
  CHECK(satisfies_shedding_condition(fixed, x));
  CHECK(oracle::sheds(oracle::faces_of(fixed), x));
  CHECK_THROWS_AS(theorem_shedding_vertex(Complex::simplex(3)), std::invalid_argument);
  CHECK_THROWS_AS(theorem_shedding_vertex(fixtures::two_edges()), std::invalid_argument);
}

TEST_CASE("random shifted complexes are cointerval (n <= 7)") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<oracle::Mask> gens;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) gens.push_back(rng() & ((oracle::Mask{1} << n) - 1));
    oracle::FaceSet faces = oracle::shifted_closure(n, gens);
    REQUIRE(oracle::is_shifted(faces));
    std::vector<VertexSet> sets;
    for (auto f : faces) sets.push_back(VertexSet(f));
    Complex h = Complex::from_sets(n, sets);
    CHECK(is_shifted(h));
    CHECK(is_cointerval(h).verdict);
  }
}

TEST_CASE("cointervality is closed under induced subcomplexes, links and right links (n <= 5)") {
  for (const Complex& h : fixtures::cointerval_complexes(5)) {
    const VertexSet all = VertexSet::range(h.n());
    for (std::uint64_t w = 0; w <= all.bits(); ++w) REQUIRE(is_cointerval(induced(h, VertexSet(w))).verdict);
    for (VertexSet tau : h.faces()) {
      REQUIRE(is_cointerval(link(h, tau)).verdict);
      if (tau.size() > 0) REQUIRE(is_cointerval(rlk(h, tau)).verdict);
    }
  }
}

TEST_CASE("cointerval complexes on at most 5 vertices are vertex decomposable") {
  for (const Complex& h : fixtures::cointerval_complexes(5)) {
    auto tree = is_vertex_decomposable(h);
    REQUIRE(tree);
    REQUIRE(oracle::valid_shedding_tree(*tree));
    if (!h.is_simplex()) {
      int x = theorem_shedding_vertex(h);
      REQUIRE(x == oracle::revlex_first_nonface_max(oracle::faces_of(h)));
      REQUIRE(oracle::sheds(oracle::faces_of(h), x));
    }
  }
}
