#include "ohomres/complex.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ohomres {

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

namespace detail {
struct FaceCache {
  std::once_flag once;
  std::vector<VertexSet> faces;
};
}  // namespace detail

namespace {

// Keeps the inclusion-maximal sets, sorted revlex, no duplicates.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return s.subset_of(k); });
    if (!absorbed) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Complex::Complex() : Complex(0, {}, true) {}

Complex::Complex(int n, std::vector<VertexSet> facets, bool already_reduced)
    : n_(n),
      facets_(already_reduced ? std::move(facets) : maximal_sets(std::move(facets))),
      cache_(std::make_shared<detail::FaceCache>()) {}

Complex Complex::from_sets(int n, std::vector<VertexSet> facets) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count must lie in 0..64");
  VertexSet allowed = VertexSet::range(n);
  for (VertexSet f : facets) {
    if (!f.subset_of(allowed))
      throw std::invalid_argument("facet " + to_string(f) + " has a vertex outside 1.." + std::to_string(n));
  }
  return Complex(n, std::move(facets), false);
}

Complex Complex::from_facets(int n, const std::vector<std::vector<int>>& facets) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count must lie in 0..64");
  if (n == 0 && !(facets.empty() || (facets.size() == 1 && facets[0].empty())))
    throw std::invalid_argument("n must be at least 1 for a complex with vertices");
  std::vector<VertexSet> sets;
  sets.reserve(facets.size());
  for (const auto& f : facets) {
    VertexSet s;
    for (int v : f) {
      if (v < 1 || v > n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      s.insert(v);
    }
    sets.push_back(s);
  }
  return Complex(n, std::move(sets), false);
}

Complex Complex::void_complex(int n) { return Complex(n, {}, true); }
Complex Complex::irrelevant(int n) { return Complex(n, {VertexSet()}, true); }
Complex Complex::simplex(int n) { return Complex(n, {VertexSet::range(n)}, true); }

int Complex::dim() const {
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

const std::vector<VertexSet>& Complex::faces() const {
  std::call_once(cache_->once, [this] {
    std::unordered_set<VertexSet> seen;
    std::vector<VertexSet> out;
    for (VertexSet f : facets_) {
      // enumerate all submasks of f, including f and ∅
      std::uint64_t full = f.bits();
      std::uint64_t sub = full;
      while (true) {
        if (seen.insert(VertexSet(sub)).second) out.emplace_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & full;
      }
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    cache_->faces = std::move(out);
  });
  return cache_->faces;
}

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> f;
  for (VertexSet s : faces()) {
    if (s.empty()) continue;
    auto d = static_cast<std::size_t>(s.size() - 1);
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

bool Complex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.subset_of(f); });
}

VertexSet Complex::vertices() const {
  VertexSet v;
  for (VertexSet f : facets_) v = v | f;
  return v;
}

bool Complex::subcomplex_of(const Complex& other) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return other.contains(f); });
}

Complex link(const Complex& h, VertexSet sigma) {
  if (!h.contains(sigma)) throw std::invalid_argument("link: " + to_string(sigma) + " is not a face");
  std::vector<VertexSet> out;
  for (VertexSet f : h.facets())
    if (sigma.subset_of(f)) out.push_back(f - sigma);
  return Complex::from_sets(h.n(), std::move(out));
}

Complex rlk(const Complex& h, VertexSet sigma) {
  if (sigma.empty()) throw std::invalid_argument("rlk: the face must be nonempty");
  if (!h.contains(sigma)) throw std::invalid_argument("rlk: " + to_string(sigma) + " is not a face");
  VertexSet right = VertexSet::interval(sigma.max() + 1, h.n());
  std::vector<VertexSet> out;
  for (VertexSet f : h.facets())
    if (sigma.subset_of(f)) out.push_back(f & right);
  return Complex::from_sets(h.n(), std::move(out));
}

Complex induced(const Complex& h, VertexSet w) {
  if (h.is_void()) return h;
  std::vector<VertexSet> out;
  out.reserve(h.facets().size());
  for (VertexSet f : h.facets()) out.push_back(f & w);
  return Complex::from_sets(h.n(), std::move(out));
}

Complex deletion(const Complex& h, int x) { return induced(h, VertexSet::range(h.n()).without(x)); }

Complex relabel(const Complex& h, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(h.n())) throw std::invalid_argument("relabel: permutation has wrong length");
  VertexSet seen;
  for (int p : perm) {
    if (p < 1 || p > h.n() || seen.contains(p)) throw std::invalid_argument("relabel: not a permutation");
    seen.insert(p);
  }
  std::vector<VertexSet> out;
  for (VertexSet f : h.facets()) {
    VertexSet g;
    for (int v : f.elements()) g.insert(perm[static_cast<std::size_t>(v - 1)]);
    out.push_back(g);
  }
  return Complex::from_sets(h.n(), std::move(out));
}

std::strong_ordering revlex_set_cmp(VertexSet f, VertexSet g) {
  VertexSet diff = f ^ g;
  if (diff.empty()) return std::strong_ordering::equal;
  return g.contains(diff.max()) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace ohomres
