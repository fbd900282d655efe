#include "ohomres/homcomplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ohomres {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

using HomSet = std::unordered_set<std::vector<int>, ImagesHash>;

void sort_revlex_descending(std::vector<Hom>& homs, int m) {
  std::vector<std::pair<Monomial, Hom>> keyed;
  keyed.reserve(homs.size());
  for (auto& h : homs) keyed.emplace_back(hom_monomial(h, m), std::move(h));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return revlex_cmp(a.first, b.first) > 0; });
  homs.clear();
  for (auto& [mono, h] : keyed) homs.push_back(std::move(h));
}

bool satisfies_caps(const Monomial& label, const RestrictionSpec& spec) {
  if (spec.alpha) {
    const auto& caps = *spec.alpha;
    for (std::size_t j = 0; j < caps.size(); ++j)
      if (caps[j] != kNoCap && label.exponents()[j] > caps[j]) return false;
  }
  if (spec.leq && !label.divides(*spec.leq)) return false;
  return true;
}

bool clears_floor(const Monomial& label, const RestrictionSpec& spec) {
  return !spec.beta || revlex_cmp(label, *spec.beta) >= 0;
}

// Calls visit(selection) for every selection of `c` whose coordinate `fixed` equals
// `value` (fixed < 0 means no coordinate is pinned). Stops early when visit returns false.
template <class Visit>
bool for_each_selection(const Cell& c, int fixed, int value, Visit&& visit) {
  const std::size_t n = c.parts.size();
  std::vector<std::vector<int>> choices(n);
  for (std::size_t i = 0; i < n; ++i)
    choices[i] = static_cast<int>(i) == fixed ? std::vector<int>{value} : c.parts[i].elements();
  std::vector<std::size_t> idx(n, 0);
  std::vector<int> sel(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) sel[i] = choices[i][idx[i]];
    if (!visit(sel)) return false;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
    if (n == 0) return true;
  }
}

}  // namespace

Monomial hom_monomial(const Hom& phi, int num_vars) {
  Monomial out(static_cast<std::size_t>(num_vars));
  for (int v : phi.images) {
    if (v < 1 || v > num_vars) throw std::invalid_argument("hom image outside 1..m");
    out.multiply_by(v);
  }
  return out;
}

bool is_ordered_hom(const Complex& g, const Complex& h, const Hom& phi) {
  if (phi.images.size() != static_cast<std::size_t>(g.n())) return false;
  for (std::size_t i = 0; i < phi.images.size(); ++i) {
    if (phi.images[i] < 1 || phi.images[i] > h.n()) return false;
    if (i > 0 && phi.images[i - 1] > phi.images[i]) return false;
  }
  for (VertexSet f : g.facets()) {
    VertexSet image;
    for (int v : f.elements()) image.insert(phi(v));
    if (image.size() != f.size() || !h.contains(image)) return false;
  }
  return true;
}

std::vector<Hom> ordered_homs(const Complex& g, const Complex& h) {
  const int n = g.n();
  const int m = h.n();
  std::vector<Hom> out;
  if (n == 0) {
    // the empty map sends the faces of G (at most ∅) to ∅
    if (!g.is_void() && h.is_void()) return out;
    out.push_back(Hom{});
    return out;
  }
  if (m == 0) return out;

  std::vector<VertexSet> facets(g.facets().begin(), g.facets().end());
  // facets_at[i]: facets containing vertex i
  std::vector<std::vector<std::size_t>> facets_at(static_cast<std::size_t>(n) + 1);
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (int v : facets[f].elements()) facets_at[static_cast<std::size_t>(v)].push_back(f);

  std::vector<VertexSet> partial(facets.size());
  std::vector<int> images(static_cast<std::size_t>(n), 0);

  auto recurse = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.push_back(Hom{images});
      return;
    }
    int lo = i == 1 ? 1 : images[static_cast<std::size_t>(i - 2)];
    for (int v = lo; v <= m; ++v) {
      bool ok = true;
      for (std::size_t f : facets_at[static_cast<std::size_t>(i)]) {
        VertexSet next = partial[f].with(v);
        // images along a facet strictly increase, so v must exceed everything so far
        if (partial[f].max() >= v || !h.contains(next)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<VertexSet> saved;
      saved.reserve(facets_at[static_cast<std::size_t>(i)].size());
      for (std::size_t f : facets_at[static_cast<std::size_t>(i)]) {
        saved.push_back(partial[f]);
        partial[f] = partial[f].with(v);
      }
      images[static_cast<std::size_t>(i - 1)] = v;
      self(self, i + 1);
      std::size_t k = 0;
      for (std::size_t f : facets_at[static_cast<std::size_t>(i)]) partial[f] = saved[k++];
    }
  };
  recurse(recurse, 1);
  sort_revlex_descending(out, m);
  return out;
}

int Cell::dim() const {
  int d = 0;
  for (VertexSet p : parts) d += p.size() - 1;
  return d;
}

Monomial Cell::label(int num_vars) const {
  Monomial out(static_cast<std::size_t>(num_vars));
  for (VertexSet p : parts)
    for (int v : p.elements()) {
      if (v > num_vars) throw std::invalid_argument("cell entry outside 1..m");
      out.multiply_by(v);
    }
  return out;
}

std::vector<Hom> Cell::vertices() const {
  std::vector<Hom> out;
  for_each_selection(*this, -1, 0, [&](const std::vector<int>& sel) {
    out.push_back(Hom{sel});
    return true;
  });
  return out;
}

Hom Cell::max_vertex() const {
  Hom out;
  out.images.reserve(parts.size());
  for (VertexSet p : parts) out.images.push_back(p.max());
  return out;
}

bool Cell::contains(const Hom& phi) const {
  if (phi.images.size() != parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!parts[i].contains(phi.images[i])) return false;
  return true;
}

bool Cell::face_of(const Cell& other) const {
  if (other.parts.size() != parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!parts[i].subset_of(other.parts[i])) return false;
  return true;
}

Cell Cell::of(const Hom& phi) {
  Cell c;
  c.parts.reserve(phi.images.size());
  for (int v : phi.images) c.parts.push_back(VertexSet::singleton(v));
  return c;
}

bool cell_key_less(const Cell& a, const Cell& b) {
  const std::size_t len = std::min(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.parts[i] == b.parts[i]) continue;
    // lexicographic on the sorted element lists; a proper prefix sorts first
    std::uint64_t x = a.parts[i].bits();
    std::uint64_t y = b.parts[i].bits();
    while (x != 0 && y != 0) {
      std::uint64_t lx = x & (~x + 1);
      std::uint64_t ly = y & (~y + 1);
      if (lx != ly) return lx < ly;
      x ^= lx;
      y ^= ly;
    }
    return x == 0;
  }
  return a.parts.size() < b.parts.size();
}

std::size_t CellHash::operator()(const Cell& c) const noexcept {
  std::size_t h = c.parts.size();
  for (VertexSet p : c.parts) h ^= std::hash<std::uint64_t>{}(p.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool is_multihom(const Complex& g, const Complex& h, const Cell& c) {
  if (c.parts.size() != static_cast<std::size_t>(g.n())) return false;
  const VertexSet allowed = VertexSet::range(h.n());
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (c.parts[i].empty() || !c.parts[i].subset_of(allowed)) return false;
    if (i > 0 && c.parts[i - 1].max() > c.parts[i].min()) return false;
  }
  for (VertexSet f : g.facets()) {
    std::vector<int> verts = f.elements();
    Cell sub;
    for (int v : verts) sub.parts.push_back(c.parts[static_cast<std::size_t>(v - 1)]);
    bool ok = for_each_selection(sub, -1, 0, [&](const std::vector<int>& sel) {
      VertexSet image;
      for (int x : sel) image = image.with(x);
      return image.size() == static_cast<int>(sel.size()) && h.contains(image);
    });
    if (!ok) return false;
  }
  return true;
}

void validate_spec(const RestrictionSpec& spec, int n, int m) {
  if (spec.alpha) {
    if (spec.alpha->size() != static_cast<std::size_t>(m))
      throw std::invalid_argument("alpha must have one entry per variable of H");
    for (int a : *spec.alpha)
      if (a < 0) throw std::invalid_argument("alpha entries must be nonnegative");
  }
  if (spec.beta) {
    if (spec.beta->num_vars() != static_cast<std::size_t>(m))
      throw std::invalid_argument("beta must have one exponent per variable of H");
    if (spec.beta->degree() != n)
      throw std::invalid_argument("beta must have total degree " + std::to_string(n));
  }
  if (spec.leq && spec.leq->num_vars() != static_cast<std::size_t>(m))
    throw std::invalid_argument("leq must have one exponent per variable of H");
}

PComplex::PComplex(int n, int m, std::vector<Cell> cells, std::vector<Monomial> labels) : n_(n), m_(m) {
  if (cells.size() != labels.size()) throw std::invalid_argument("one label per cell is required");
  std::vector<std::pair<Cell, Monomial>> all;
  all.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].parts.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("cell has the wrong number of parts");
    for (VertexSet p : cells[i].parts)
      if (p.empty() || !p.subset_of(VertexSet::range(m))) throw std::invalid_argument("cell part outside 1..m");
    if (labels[i].num_vars() != static_cast<std::size_t>(m))
      throw std::invalid_argument("label has the wrong number of variables");
    all.emplace_back(std::move(cells[i]), std::move(labels[i]));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    int da = a.first.dim();
    int db = b.first.dim();
    if (da != db) return da < db;
    return cell_key_less(a.first, b.first);
  });
  for (auto& [c, l] : all) {
    auto d = static_cast<std::size_t>(c.dim());
    if (cells_.size() <= d) {
      cells_.resize(d + 1);
      labels_.resize(d + 1);
    }
    if (!cells_[d].empty() && cells_[d].back() == c) throw std::invalid_argument("duplicate cell");
    index_.emplace(c, CellRef{static_cast<int>(d), cells_[d].size()});
    cells_[d].push_back(std::move(c));
    labels_[d].push_back(std::move(l));
  }
  // trailing dimensions may be empty only when no cells exist at all
  while (!cells_.empty() && cells_.back().empty()) {
    cells_.pop_back();
    labels_.pop_back();
  }
}

PComplex PComplex::with_product_labels(int n, int m, std::vector<Cell> cells) {
  std::vector<Monomial> labels;
  labels.reserve(cells.size());
  for (const auto& c : cells) labels.push_back(c.label(m));
  return PComplex(n, m, std::move(cells), std::move(labels));
}

std::size_t PComplex::num_cells() const {
  std::size_t total = 0;
  for (const auto& level : cells_) total += level.size();
  return total;
}

std::vector<std::size_t> PComplex::f_vector() const {
  std::vector<std::size_t> f;
  f.reserve(cells_.size());
  for (const auto& level : cells_) f.push_back(level.size());
  return f;
}

std::span<const Cell> PComplex::cells(int d) const {
  if (d < 0 || d >= static_cast<int>(cells_.size())) return {};
  return cells_[static_cast<std::size_t>(d)];
}

std::optional<PComplex::CellRef> PComplex::find(const Cell& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Hom> PComplex::vertex_homs() const {
  std::vector<Hom> out;
  for (const Cell& c : cells(0)) out.push_back(c.max_vertex());
  sort_revlex_descending(out, m_);
  return out;
}

std::vector<std::pair<Cell, int>> PComplex::boundary(const Cell& c) const {
  std::vector<std::pair<Cell, int>> out;
  int s = 0;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const int size = c.parts[i].size();
    if (size >= 2) {
      for (int k = 1; k <= size; ++k) {
        Cell face = c;
        face.parts[i] = c.parts[i].without(c.parts[i].nth(k));
        out.emplace_back(std::move(face), ((s + k - 1) % 2 == 0) ? 1 : -1);
      }
    }
    s += size - 1;
  }
  return out;
}

bool PComplex::is_face_closed() const {
  for (const auto& level : cells_)
    for (const Cell& c : level)
      for (const auto& [face, sign] : boundary(c))
        if (!find(face)) return false;
  return true;
}

PComplex build_ohom(const Complex& g, const Complex& h, const RestrictionSpec& spec) {
  const int n = g.n();
  const int m = h.n();
  validate_spec(spec, n, m);

  HomSet surviving;
  std::vector<Cell> level;
  for (const Hom& phi : ordered_homs(g, h)) {
    Monomial label = hom_monomial(phi, m);
    if (!satisfies_caps(label, spec) || !clears_floor(label, spec)) continue;
    surviving.insert(phi.images);
    level.push_back(Cell::of(phi));
  }

  std::vector<Cell> all;
  while (!level.empty()) {
    std::unordered_set<Cell, CellHash> next;
    for (const Cell& x : level) {
      for (std::size_t i = 0; i < x.parts.size(); ++i) {
        const int lo = x.parts[i].max() + 1;
        const int hi = i + 1 < x.parts.size() ? x.parts[i + 1].min() : m;
        for (int v = lo; v <= hi; ++v) {
          Cell y = x;
          y.parts[i] = y.parts[i].with(v);
          if (next.contains(y)) continue;
          if (!satisfies_caps(y.label(m), spec)) continue;
          bool ok = for_each_selection(y, static_cast<int>(i), v,
                                       [&](const std::vector<int>& sel) { return surviving.contains(sel); });
          if (ok) next.insert(std::move(y));
        }
      }
    }
    for (Cell& c : level) all.push_back(std::move(c));
    level.assign(next.begin(), next.end());
  }
  return PComplex::with_product_labels(n, m, std::move(all));
}

PComplex restrict(const PComplex& x, const RestrictionSpec& spec) {
  validate_spec(spec, x.n(), x.m());
  return x.filter([&](const Cell& c, const Monomial& label) {
    if (!satisfies_caps(label, spec)) return false;
    if (!spec.beta) return true;
    for (const Hom& v : c.vertices()) {
      auto ref = x.find(Cell::of(v));
      if (!ref || !clears_floor(x.label(*ref), spec)) return false;
    }
    return true;
  });
}

Hom swap_vertex(const Hom& gamma, const Hom& phi, const PComplex& delta) {
  if (gamma.size() != phi.size()) throw std::invalid_argument("swap_vertex: maps of different lengths");
  if (!delta.contains_vertex(gamma) || !delta.contains_vertex(phi))
    throw std::invalid_argument("swap_vertex: both maps must be vertices of the complex");
  std::size_t k = 0;
  while (k < gamma.size() && gamma.images[k] == phi.images[k]) ++k;
  if (k == gamma.size()) throw std::invalid_argument("swap_vertex: maps must be distinct");
  if (gamma.images[k] < phi.images[k])
    throw std::invalid_argument("swap_vertex: first disagreement must have gamma(k) > phi(k)");
  Hom out = gamma;
  out.images[k] = phi.images[k];
  return out;
}

}  // namespace ohomres
