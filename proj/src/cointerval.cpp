#include "ohomres/cointerval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ohomres {

namespace {

std::optional<CointervalViolation> find_violation(const Complex& h, std::vector<int>& context) {
  if (h.dim() < 0) return std::nullopt;
  std::vector<int> verts = h.vertices().elements();
  std::vector<Complex> right_links;
  right_links.reserve(verts.size());
  for (int v : verts) right_links.push_back(rlk(h, v));

  for (std::size_t a = 0; a < verts.size(); ++a) {
    context.push_back(verts[a]);
    auto inner = find_violation(right_links[a], context);
    context.pop_back();
    if (inner) return inner;
  }
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const Complex& ri = right_links[a];
      const Complex& rj = right_links[b];
      if (rj.subcomplex_of(ri)) continue;
      for (VertexSet f : rj.faces()) {
        if (!ri.contains(f)) return CointervalViolation{context, verts[a], verts[b], f};
      }
    }
  }
  return std::nullopt;
}

using FacetKey = std::vector<std::uint64_t>;

struct FacetKeyHash {
  std::size_t operator()(const FacetKey& k) const noexcept {
    std::size_t h = k.size();
    for (std::uint64_t x : k) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Facets after an order-preserving renaming of V(H) onto 1..|V(H)|.
FacetKey compressed_key(const Complex& h) {
  std::vector<int> verts = h.vertices().elements();
  std::vector<int> rename(static_cast<std::size_t>(h.n()) + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) rename[static_cast<std::size_t>(verts[i])] = static_cast<int>(i) + 1;
  FacetKey key;
  key.reserve(h.facets().size() + 1);
  for (VertexSet f : h.facets()) {
    std::uint64_t bits = 0;
    for (int v : f.elements()) bits |= std::uint64_t{1} << (rename[static_cast<std::size_t>(v)] - 1);
    key.push_back(bits);
  }
  std::sort(key.begin(), key.end());
  key.push_back(h.is_void() ? 1 : 0);
  return key;
}

std::optional<VertexSet> shared_facet(const Complex& h, int x) {
  Complex del = deletion(h, x);
  Complex lk = link(h, VertexSet::singleton(x));
  for (VertexSet f : lk.facets()) {
    auto del_facets = del.facets();
    if (std::find(del_facets.begin(), del_facets.end(), f) != del_facets.end()) return f;
  }
  return std::nullopt;
}

class VdSearch {
 public:
  bool decomposable(const Complex& h) {
    if (h.is_void() || h.is_simplex()) return true;
    FacetKey key = compressed_key(h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = shedding_vertex(h).has_value();
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::optional<int> shedding_vertex(const Complex& h) {
    for (int x : h.vertices().elements()) {
      if (shared_facet(h, x)) continue;
      if (decomposable(deletion(h, x)) && decomposable(link(h, VertexSet::singleton(x)))) return x;
    }
    return std::nullopt;
  }

  SheddingTree build(const Complex& h) {
    SheddingTree node{h, 0, {}};
    if (h.is_void() || h.is_simplex()) return node;
    auto x = shedding_vertex(h);
    if (!x) throw std::logic_error("shedding tree requested for a non-decomposable complex");
    node.shedding_vertex = *x;
    node.children.push_back(build(deletion(h, *x)));
    node.children.push_back(build(link(h, VertexSet::singleton(*x))));
    return node;
  }

 private:
  std::unordered_map<FacetKey, bool, FacetKeyHash> memo_;
};

}  // namespace

CointervalWitness is_cointerval(const Complex& h) {
  std::vector<int> context;
  auto v = find_violation(h, context);
  return CointervalWitness{!v.has_value(), v};
}

bool violation_holds(const Complex& h, const CointervalViolation& v) {
  Complex k = h;
  for (int c : v.context) {
    if (!k.vertices().contains(c)) return false;
    k = rlk(k, c);
  }
  VertexSet verts = k.vertices();
  if (!(v.i < v.j) || !verts.contains(v.i) || !verts.contains(v.j)) return false;
  return rlk(k, v.j).contains(v.face) && !rlk(k, v.i).contains(v.face);
}

bool is_shifted(const Complex& h) {
  for (VertexSet f : h.faces()) {
    for (int i : f.elements()) {
      for (int j = 1; j < i; ++j) {
        if (f.contains(j)) continue;
        if (!h.contains(f.without(i).with(j))) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<int>> exists_cointerval_order(const Complex& h, int max_vertices) {
  if (h.n() > max_vertices)
    throw std::out_of_range("ordering search limited to " + std::to_string(max_vertices) + " vertices");
  std::vector<int> perm(static_cast<std::size_t>(h.n()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (is_cointerval(relabel(h, perm)).verdict) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::size_t SheddingTree::node_count() const {
  std::size_t total = 1;
  for (const auto& c : children) total += c.node_count();
  return total;
}

bool satisfies_shedding_condition(const Complex& h, int x) {
  return h.vertices().contains(x) && !shared_facet(h, x).has_value();
}

std::optional<SheddingTree> is_vertex_decomposable(const Complex& h) {
  VdSearch search;
  if (!search.decomposable(h)) return std::nullopt;
  return search.build(h);
}

bool validate_shedding_tree(const SheddingTree& tree) {
  const Complex& h = tree.complex;
  if (tree.is_leaf()) return tree.shedding_vertex == 0 && (h.is_void() || h.is_simplex());
  if (tree.children.size() != 2) return false;
  int x = tree.shedding_vertex;
  if (!satisfies_shedding_condition(h, x)) return false;
  if (!(tree.children[0].complex == deletion(h, x))) return false;
  if (!(tree.children[1].complex == link(h, VertexSet::singleton(x)))) return false;
  return validate_shedding_tree(tree.children[0]) && validate_shedding_tree(tree.children[1]);
}

std::vector<SheddingFailure> shedding_failures(const Complex& h) {
  std::vector<SheddingFailure> out;
  if (h.is_void() || h.is_simplex()) return out;
  VdSearch search;
  for (int x : h.vertices().elements()) {
    if (auto f = shared_facet(h, x)) {
      out.push_back({x, SheddingFailure::Reason::SharedFacet, *f});
    } else if (!search.decomposable(deletion(h, x))) {
      out.push_back({x, SheddingFailure::Reason::DeletionNotDecomposable, {}});
    } else if (!search.decomposable(link(h, VertexSet::singleton(x)))) {
      out.push_back({x, SheddingFailure::Reason::LinkNotDecomposable, {}});
    } else {
      return {};
    }
  }
  return out;
}

int theorem_shedding_vertex(const Complex& h) {
  if (h.dim() < 0) throw std::invalid_argument("theorem_shedding_vertex: complex has no vertices");
  if (h.is_simplex()) throw std::invalid_argument("theorem_shedding_vertex: complex is a simplex");
  if (!is_cointerval(h).verdict) throw std::invalid_argument("theorem_shedding_vertex: complex is not cointerval");
  const std::uint64_t support = h.vertices().bits();
  // submasks of `support` in increasing numeric (= revlex) order
  std::uint64_t s = 0;
  while (true) {
    if (!h.contains(VertexSet(s))) return VertexSet(s).max();
    if (s == support) break;
    s = (s - support) & support;
  }
  throw std::logic_error("no non-face found in a non-simplex");
}

}  // namespace ohomres
