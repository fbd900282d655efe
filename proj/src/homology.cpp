#include "ohomres/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ohomres {

BoundaryStructure::BoundaryStructure(const PComplex& x) {
  facets_.resize(static_cast<std::size_t>(x.dim() + 1));
  for (int d = 0; d <= x.dim(); ++d) {
    auto& level = facets_[static_cast<std::size_t>(d)];
    level.resize(x.cells(d).size());
    if (d == 0) continue;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (auto& [face, sign] : x.boundary(x.cells(d)[i])) {
        auto ref = x.find(face);
        if (!ref) throw std::invalid_argument("complex is not face-closed");
        level[i].emplace_back(ref->index, sign);
      }
      std::sort(level[i].begin(), level[i].end());
    }
  }
}

std::vector<std::size_t> BoundaryStructure::reduced_homology(FieldTag field,
                                                             const std::vector<std::vector<bool>>* keep) const {
  const int top_dim = dim();
  std::vector<std::vector<std::size_t>> remap(facets_.size());
  std::vector<std::size_t> f(facets_.size(), 0);
  constexpr std::size_t kDropped = static_cast<std::size_t>(-1);
  for (std::size_t d = 0; d < facets_.size(); ++d) {
    remap[d].assign(facets_[d].size(), kDropped);
    for (std::size_t i = 0; i < facets_[d].size(); ++i)
      if (keep == nullptr || (*keep)[d][i]) remap[d][i] = f[d]++;
  }
  if (f.empty() || f[0] == 0) return {};
  int top = top_dim;
  while (top > 0 && f[static_cast<std::size_t>(top)] == 0) --top;

  // ranks[d] = rank ∂_d, with ranks[0] the augmentation
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  ranks[0] = 1;
  for (int d = 1; d <= top; ++d) {
    const auto du = static_cast<std::size_t>(d);
    SparseMatrix m(f[du - 1], f[du]);
    for (std::size_t i = 0; i < facets_[du].size(); ++i) {
      if (remap[du][i] == kDropped) continue;
      for (auto [face, sign] : facets_[du][i]) {
        std::size_t row = remap[du - 1][face];
        if (row == kDropped) throw std::logic_error("subcomplex selection is not face-closed");
        m.push(row, remap[du][i], sign);
      }
    }
    ranks[du] = rank(m, field);
  }
  std::vector<std::size_t> h(static_cast<std::size_t>(top) + 1);
  for (std::size_t d = 0; d < h.size(); ++d) h[d] = f[d] - ranks[d] - ranks[d + 1];
  return h;
}

ChainComplex boundary_matrices(const PComplex& x, FieldTag field, bool reduced) {
  BoundaryStructure bs(x);
  ChainComplex out;
  out.field = field;
  out.reduced = reduced;
  for (int d = 0; d <= x.dim(); ++d) out.dims.push_back(bs.count(d));
  if (x.empty()) return out;

  SparseMatrix aug(reduced ? 1 : 0, out.dims[0]);
  if (reduced)
    for (std::size_t j = 0; j < out.dims[0]; ++j) aug.push(0, j, 1);
  out.boundaries.push_back(std::move(aug));
  for (int d = 1; d <= x.dim(); ++d) {
    const auto du = static_cast<std::size_t>(d);
    SparseMatrix m(out.dims[du - 1], out.dims[du]);
    for (std::size_t i = 0; i < out.dims[du]; ++i)
      for (auto [face, sign] : bs.facets(d, i)) m.push(face, i, field == FieldTag::GF2 ? 1 : sign);
    out.boundaries.push_back(std::move(m));
  }
  for (std::size_t d = 1; d < out.boundaries.size(); ++d) {
    if (!is_zero(multiply(out.boundaries[d - 1], out.boundaries[d], field), field))
      throw std::logic_error("boundary of a boundary is nonzero in degree " + std::to_string(d));
  }
  return out;
}

std::vector<std::size_t> homology_ranks(const PComplex& x, FieldTag field) {
  if (x.empty()) throw std::invalid_argument("homology_ranks: empty complex");
  return BoundaryStructure(x).reduced_homology(field);
}

bool is_acyclic(const PComplex& x, FieldTag field) {
  if (x.empty()) return true;
  auto h = homology_ranks(x, field);
  return std::all_of(h.begin(), h.end(), [](std::size_t r) { return r == 0; });
}

namespace {

// Cells flattened to ids ordered by (dimension, cell order), with face/coface lists.
struct Incidence {
  std::vector<std::size_t> offset;
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::size_t>> cofaces;
  std::vector<int> dim;

  explicit Incidence(const PComplex& x) {
    BoundaryStructure bs(x);
    std::size_t total = 0;
    for (int d = 0; d <= x.dim(); ++d) {
      offset.push_back(total);
      total += bs.count(d);
    }
    faces.resize(total);
    cofaces.resize(total);
    dim.resize(total);
    for (int d = 0; d <= x.dim(); ++d) {
      for (std::size_t i = 0; i < bs.count(d); ++i) {
        std::size_t id = offset[static_cast<std::size_t>(d)] + i;
        dim[id] = d;
        if (d == 0) continue;
        for (auto [face, sign] : bs.facets(d, i)) {
          std::size_t fid = offset[static_cast<std::size_t>(d - 1)] + face;
          faces[id].push_back(fid);
          cofaces[fid].push_back(id);
        }
      }
    }
  }
  PComplex::CellRef ref(std::size_t id) const {
    return {dim[id], id - offset[static_cast<std::size_t>(dim[id])]};
  }
};

}  // namespace

std::optional<std::vector<CollapsePair>> collapse_certificate(const PComplex& x) {
  if (x.empty()) throw std::invalid_argument("collapse_certificate: empty complex");
  Incidence inc(x);
  const std::size_t total = inc.faces.size();
  std::vector<bool> alive(total, true);
  std::vector<std::size_t> live_cofaces(total);
  for (std::size_t id = 0; id < total; ++id) live_cofaces[id] = inc.cofaces[id].size();

  auto single_coface = [&](std::size_t id) -> std::optional<std::size_t> {
    if (!alive[id] || live_cofaces[id] != 1) return std::nullopt;
    for (std::size_t c : inc.cofaces[id])
      if (alive[c]) return live_cofaces[c] == 0 ? std::optional<std::size_t>(c) : std::nullopt;
    return std::nullopt;
  };

  std::set<std::size_t> candidates;
  for (std::size_t id = 0; id < total; ++id) candidates.insert(id);
  std::vector<CollapsePair> pairs;
  std::size_t remaining = total;
  while (!candidates.empty()) {
    std::size_t id = *candidates.begin();
    candidates.erase(candidates.begin());
    auto coface = single_coface(id);
    if (!coface) continue;
    pairs.push_back({x.cell(inc.ref(id)), x.cell(inc.ref(*coface))});
    alive[id] = false;
    alive[*coface] = false;
    remaining -= 2;
    for (std::size_t removed : {*coface, id}) {
      for (std::size_t f : inc.faces[removed]) {
        --live_cofaces[f];
        candidates.insert(f);
        for (std::size_t ff : inc.faces[f]) candidates.insert(ff);
      }
    }
  }
  if (remaining != 1) return std::nullopt;
  return pairs;
}

RemovalOutcome removal_certificate(const PComplex& delta) {
  if (delta.empty()) throw std::invalid_argument("removal_certificate: empty complex");
  Incidence inc(delta);
  const std::size_t total = inc.faces.size();
  std::vector<bool> alive(total, true);

  std::vector<Hom> order = delta.vertex_homs();
  std::reverse(order.begin(), order.end());  // revlex smallest first

  RemovalCert cert;
  for (std::size_t step = 0; step + 1 < order.size(); ++step) {
    const Hom& v = order[step];
    std::vector<std::size_t> containing;
    std::optional<std::size_t> facet;
    std::size_t facet_count = 0;
    for (std::size_t id = 0; id < total; ++id) {
      if (!alive[id] || !delta.cell(inc.ref(id)).contains(v)) continue;
      containing.push_back(id);
      if (inc.dim[id] == 0) continue;
      bool maximal = std::none_of(inc.cofaces[id].begin(), inc.cofaces[id].end(),
                                  [&](std::size_t c) { return alive[c]; });
      if (maximal) {
        ++facet_count;
        facet = id;
      }
    }
    if (facet_count != 1) return RemovalOutcome{std::nullopt, v};
    cert.steps.push_back({v, delta.cell(inc.ref(*facet))});
    for (std::size_t id : containing) alive[id] = false;
  }
  cert.terminal = order.back();
  return RemovalOutcome{std::move(cert), std::nullopt};
}

RemovalOutcome removal_certificate(const Complex& g, const Complex& h, const RestrictionSpec& spec) {
  return removal_certificate(build_ohom(g, h, spec));
}

}  // namespace ohomres
