#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "ohomres/cointerval.hpp"
#include "ohomres/homcomplex.hpp"
#include "oracles.hpp"

using namespace ohomres;

namespace {

std::vector<std::vector<int>> images(const std::vector<Hom>& homs) {
  std::vector<std::vector<int>> out;
  for (const auto& h : homs) out.push_back(h.images);
  return out;
}

std::vector<Cell> all_cells(const PComplex& x) {
  std::vector<Cell> out;
  for (int d = 0; d <= x.dim(); ++d)
    for (const Cell& c : x.cells(d)) out.push_back(c);
  return out;
}

bool same_cells(std::vector<Cell> a, std::vector<Cell> b) {
  std::sort(a.begin(), a.end(), cell_key_less);
  std::sort(b.begin(), b.end(), cell_key_less);
  return a == b;
}

Monomial product_label(const Cell& c, int m) {
  Monomial out(static_cast<std::size_t>(m));
  for (VertexSet p : c.parts)
    for (int j : p.elements()) out.multiply_by(j);
  return out;
}

// Cells of the brute-force complex that pass the restriction, read literally.
std::vector<Cell> oracle_restricted(const Complex& g, const Complex& h, const RestrictionSpec& spec) {
  const int m = h.n();
  std::vector<Cell> out;
  for (const Cell& c : oracle::cells(g.n(), m, oracle::homs(g, h))) {
    Monomial label = product_label(c, m);
    bool ok = true;
    if (spec.alpha)
      for (int j = 1; j <= m && ok; ++j) ok = label.exponent(j) <= (*spec.alpha)[static_cast<std::size_t>(j - 1)];
    if (ok && spec.beta)
      for (const Hom& v : c.vertices()) ok = ok && oracle::revlex_compare(hom_monomial(v, m), *spec.beta) >= 0;
    if (ok && spec.leq) ok = label.divides(*spec.leq);
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("ordered homs of K into L") {
  auto homs = ordered_homs(fixtures::K(), fixtures::L());
  REQUIRE(homs.size() == 4);
  std::vector<std::string> monos;
  for (const auto& h : homs) monos.push_back(to_string(hom_monomial(h, 5)));
  CHECK(monos == std::vector<std::string>{"x1*x2^2*x4", "x1*x2*x3*x4", "x1*x2^2*x5", "x1*x2*x3*x5"});
  auto expected = oracle::homs(fixtures::K(), fixtures::L());
  auto got = images(homs);
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("small hom enumerations") {
  CHECK(images(ordered_homs(fixtures::edge(), fixtures::edge())) == std::vector<std::vector<int>>{{1, 2}});
  auto pts = images(ordered_homs(fixtures::points(2), fixtures::complete(2)));
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}});
  CHECK(ordered_homs(fixtures::edge(), fixtures::points(3)).empty());
}

TEST_CASE("hom monomials") {
  CHECK(to_string(hom_monomial(Hom{{1, 2, 2, 4}}, 4)) == "x1*x2^2*x4");
  CHECK(to_string(hom_monomial(Hom{{1, 1}}, 2)) == "x1^2");
}

TEST_CASE("multihom examples") {
  Cell square{{VertexSet{1}, VertexSet{2}, VertexSet{2, 3}, VertexSet{4, 5}}};
  CHECK(is_multihom(fixtures::K(), fixtures::L(), square));
  Cell bad{{VertexSet{1, 2}, VertexSet{1, 2}}};
  CHECK_FALSE(is_multihom(fixtures::points(2), fixtures::complete(2), bad));
  for (const Hom& h : ordered_homs(fixtures::K(), fixtures::L()))
    CHECK(is_multihom(fixtures::K(), fixtures::L(), Cell::of(h)));
}

TEST_CASE("worked examples: square, segment and m^2") {
  PComplex sq = build_ohom(fixtures::K(), fixtures::L());
  CHECK(sq.f_vector() == std::vector<std::size_t>{4, 4, 1});
  REQUIRE(sq.cells(2).size() == 1);
  CHECK(sq.cells(2)[0] == Cell{{VertexSet{1}, VertexSet{2}, VertexSet{2, 3}, VertexSet{4, 5}}});
  CHECK(build_ohom(fixtures::K(), fixtures::L_prime()).f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(build_ohom(fixtures::points(2), fixtures::complete(3)).f_vector() == std::vector<std::size_t>{6, 8, 3});
}

TEST_CASE("cells match brute-force enumeration for every G on <= 3 vertices and H on <= 4 vertices") {
  auto gs = fixtures::all_complexes(3);
  auto hs = fixtures::all_complexes(4);
  for (const Complex& g : gs)
    for (const Complex& h : hs) {
      PComplex x = build_ohom(g, h);
      auto expected = oracle::cells(g.n(), h.n(), oracle::homs(g, h));
      REQUIRE(same_cells(all_cells(x), expected));
      REQUIRE(x.is_face_closed());
      for (const Cell& c : all_cells(x)) REQUIRE(is_multihom(g, h, c));
    }
}

TEST_CASE("labels are products and lcms of vertex labels; vertex labels are distinct") {
  for (const Complex& h : fixtures::cointerval_complexes(4)) {
    PComplex x = build_ohom(fixtures::points(3), h);
    std::vector<Monomial> vlabels;
    for (std::size_t i = 0; i < x.cells(0).size(); ++i) vlabels.push_back(x.label({0, i}));
    std::sort(vlabels.begin(), vlabels.end());
    CHECK(std::adjacent_find(vlabels.begin(), vlabels.end()) == vlabels.end());
    for (int d = 0; d <= x.dim(); ++d)
      for (std::size_t i = 0; i < x.cells(d).size(); ++i) {
        const Cell& c = x.cell({d, i});
        Monomial l(static_cast<std::size_t>(h.n()));
        for (const Hom& v : c.vertices()) l = lcm(l, hom_monomial(v, h.n()));
        REQUIRE(x.label({d, i}) == product_label(c, h.n()));
        REQUIRE(x.label({d, i}) == l);
      }
  }
}

TEST_CASE("restrictions agree with a literal filter of the brute-force cells") {
  std::mt19937 rng(99);
  auto gs = fixtures::all_complexes(3);
  auto hs = fixtures::all_complexes(4);
  for (int trial = 0; trial < 600; ++trial) {
    const Complex& g = gs[rng() % gs.size()];
    const Complex& h = hs[rng() % hs.size()];
    RestrictionSpec spec = fixtures::random_spec(rng, g.n(), h.n());
    if (rng() % 3 == 0) {
      std::vector<int> e;
      for (int j = 0; j < h.n(); ++j) e.push_back(static_cast<int>(rng() % 3));
      spec.leq = Monomial(e);
    }
    PComplex built = build_ohom(g, h, spec);
    REQUIRE(same_cells(all_cells(built), oracle_restricted(g, h, spec)));
    REQUIRE(same_cells(all_cells(restrict(build_ohom(g, h), spec)), all_cells(built)));
  }
}

TEST_CASE("restrict examples") {
  PComplex x = build_ohom(fixtures::points(2), fixtures::complete(3));
  CHECK(same_cells(all_cells(restrict(x, {})), all_cells(x)));
  RestrictionSpec top;
  top.beta = hom_monomial(x.vertex_homs().front(), 3);
  PComplex one = restrict(x, top);
  CHECK(one.f_vector() == std::vector<std::size_t>{1});
  for (std::size_t i = 0; i < x.cells(2).size(); ++i) {
    RestrictionSpec under;
    under.leq = x.label({2, i});
    PComplex sub = restrict(x, under);
    for (int d = 0; d <= 2; ++d)
      for (const Cell& c : x.cells(d))
        if (c.face_of(x.cell({2, i}))) CHECK(sub.find(c).has_value());
  }
  RestrictionSpec wrong;
  wrong.beta = Monomial::product_of(3, {1});
  CHECK_THROWS_AS(validate_spec(wrong, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_ohom(fixtures::points(2), fixtures::complete(3), wrong), std::invalid_argument);
}

TEST_CASE("swap examples") {
  PComplex x = build_ohom(fixtures::points(2), fixtures::complete(3));
  CHECK(swap_vertex(Hom{{2, 2}}, Hom{{1, 2}}, x) == Hom{{1, 2}});
  Hom s = swap_vertex(Hom{{2, 3}}, Hom{{1, 1}}, x);
  CHECK(s == Hom{{1, 3}});
  CHECK(x.contains_vertex(s));
  CHECK_THROWS_AS(swap_vertex(Hom{{1, 2}}, Hom{{2, 2}}, x), std::invalid_argument);
  CHECK_THROWS_AS(swap_vertex(Hom{{1, 2}}, Hom{{1, 2}}, x), std::invalid_argument);
}

TEST_CASE("swap and removal moves on random cointerval targets") {
  std::mt19937 rng(5);
  auto gs = fixtures::all_complexes(3);
  auto hs = fixtures::cointerval_complexes(5);
  for (int trial = 0; trial < 600; ++trial) {
    const Complex& g = gs[rng() % gs.size()];
    const Complex& h = hs[rng() % hs.size()];
    PComplex x = build_ohom(g, h, fixtures::random_spec(rng, g.n(), h.n()));
    auto verts = x.vertex_homs();
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = 0; b < verts.size(); ++b) {
        const Hom& gamma = verts[a];
        const Hom& phi = verts[b];
        std::size_t k = 0;
        while (k < gamma.size() && gamma.images[k] == phi.images[k]) ++k;
        if (k == gamma.size() || gamma.images[k] < phi.images[k]) continue;
        Hom swapped = swap_vertex(gamma, phi, x);
        REQUIRE(x.contains_vertex(swapped));
        REQUIRE(revlex_cmp(hom_monomial(swapped, h.n()), hom_monomial(gamma, h.n())) >= 0);
      }
    if (verts.size() >= 2) {
      // the revlex-smallest vertex lies properly in exactly one facet
      Cell v = Cell::of(verts.back());
      std::size_t facets = 0;
      for (int d = 1; d <= x.dim(); ++d)
        for (const Cell& c : x.cells(d)) {
          if (!v.face_of(c)) continue;
          bool maximal = true;
          for (int e = d + 1; e <= x.dim() && maximal; ++e)
            for (const Cell& up : x.cells(e))
              if (c.face_of(up)) {
                maximal = false;
                break;
              }
          facets += maximal;
        }
      REQUIRE(facets == 1);
    }
  }
}

TEST_CASE("a smaller source complex admits more homs") {
  auto gs = fixtures::all_complexes(3);
  auto hs = fixtures::all_complexes(4);
  for (const Complex& g : gs)
    for (const Complex& g2 : gs) {
      if (g.n() != g2.n() || !g2.subcomplex_of(g)) continue;
      for (const Complex& h : hs) {
        auto big = images(ordered_homs(g, h));
        auto small = images(ordered_homs(g2, h));
        std::sort(big.begin(), big.end());
        std::sort(small.begin(), small.end());
        REQUIRE(std::includes(small.begin(), small.end(), big.begin(), big.end()));
      }
    }
}

TEST_CASE("cell helpers") {
  Cell c{{VertexSet{1}, VertexSet{2}, VertexSet{2, 3}, VertexSet{4, 5}}};
  CHECK(c.dim() == 2);
  CHECK(c.vertices().size() == 4);
  CHECK(c.max_vertex() == Hom{{1, 2, 3, 5}});
  CHECK(to_string(c.label(5)) == "x1*x2^2*x3*x4*x5");
  CHECK(c.contains(Hom{{1, 2, 2, 4}}));
  CHECK_FALSE(c.contains(Hom{{1, 2, 1, 4}}));
  CHECK(Cell::of(Hom{{1, 2, 2, 4}}).face_of(c));
}
