#include "ohomres/nonnesting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ohomres {

Partition::Partition(int r_, std::vector<std::vector<int>> blocks_) : r(r_), blocks(std::move(blocks_)) {
  if (r < 0) throw std::invalid_argument("partition: negative ground set");
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
  int covered = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e < 1 || e > r) throw std::invalid_argument("partition: element out of range");
      if (seen[static_cast<std::size_t>(e)]) throw std::invalid_argument("partition: repeated element");
      seen[static_cast<std::size_t>(e)] = true;
      ++covered;
    }
  }
  if (covered != r) throw std::invalid_argument("partition: blocks do not cover 1..r");
  std::sort(blocks.begin(), blocks.end());
}

Partition Partition::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  int r = 0;
  std::stringstream all(text);
  std::string block;
  while (std::getline(all, block, '|')) {
    std::vector<int> b;
    std::stringstream bs(block);
    std::string item;
    while (std::getline(bs, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("partition: bad element '" + item + "'");
      }
      if (used != item.size()) throw std::invalid_argument("partition: bad element '" + item + "'");
      b.push_back(v);
      r = std::max(r, v);
    }
    blocks.push_back(std::move(b));
  }
  if (blocks.empty()) throw std::invalid_argument("partition: empty text");
  return Partition(r, std::move(blocks));
}

Partition Partition::singletons(int r) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= r; ++i) blocks.push_back({i});
  return Partition(r, std::move(blocks));
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(p.blocks[i][j]);
    }
  }
  return out;
}

bool is_nonnesting(const Partition& p) {
  const int r = p.r;
  std::vector<std::size_t> block(static_cast<std::size_t>(r) + 1);
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (int e : p.blocks[i]) block[static_cast<std::size_t>(e)] = i;
  auto blk = [&](int e) { return block[static_cast<std::size_t>(e)]; };
  for (int a = 1; a <= r; ++a)
    for (int d = a + 3; d <= r; ++d) {
      if (blk(a) != blk(d)) continue;
      for (int b = a + 1; b < d; ++b)
        for (int c = b + 1; c < d; ++c) {
          if (blk(b) != blk(c) || blk(b) == blk(a)) continue;
          bool separated = false;
          for (int e = b + 1; e < c && !separated; ++e) separated = blk(e) == blk(a);
          if (!separated) return false;
        }
    }
  return true;
}

std::vector<Partition> enumerate_nonnesting(int r, int max_r) {
  if (r < 1 || r > max_r) throw std::out_of_range("enumerate_nonnesting: r out of range");
  std::vector<Partition> out;
  // restricted growth strings: g[0] = 0, g[i] <= 1 + max(g[0..i-1])
  std::vector<int> g(static_cast<std::size_t>(r), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(r), 0);
  while (true) {
    int blocks = prefix_max.back() + 1;
    std::vector<std::vector<int>> bs(static_cast<std::size_t>(blocks));
    for (int i = 0; i < r; ++i) bs[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])].push_back(i + 1);
    Partition p(r, std::move(bs));
    if (is_nonnesting(p)) out.push_back(std::move(p));

    int i = r - 1;
    while (i > 0 && g[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) break;
    ++g[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < r; ++j) {
      g[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

ArcDiagram::ArcDiagram(int r_, std::vector<Arc> arcs_) : r(r_), arcs(std::move(arcs_)) {
  if (r < 0) throw std::invalid_argument("arc diagram: negative size");
  for (auto [i, j] : arcs)
    if (i < 1 || j > r || i >= j) throw std::invalid_argument("arc diagram: arcs must satisfy 1 <= i < j <= r");
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw std::invalid_argument("arc diagram: repeated arc");
}

std::string to_string(const ArcDiagram& d) {
  if (d.arcs.empty()) return "{}";
  std::string out;
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    if (k) out += ',';
    out += '{' + std::to_string(d.arcs[k].first) + ',' + std::to_string(d.arcs[k].second) + '}';
  }
  return out;
}

ArcDiagram arc_diagram(const Partition& p) {
  if (!is_nonnesting(p)) throw std::invalid_argument("arc_diagram: partition nests");
  std::vector<Arc> arcs;
  for (const auto& b : p.blocks)
    for (std::size_t k = 0; k + 1 < b.size(); ++k) arcs.emplace_back(b[k], b[k + 1]);
  return ArcDiagram(p.r, std::move(arcs));
}

Partition partition_of(const ArcDiagram& d) {
  std::vector<int> parent(static_cast<std::size_t>(d.r) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [i, j] : d.arcs) parent[static_cast<std::size_t>(find(j))] = find(i);
  std::map<int, std::vector<int>> comps;
  for (int v = 1; v <= d.r; ++v) comps[find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, b] : comps) blocks.push_back(std::move(b));
  return Partition(d.r, std::move(blocks));
}

bool is_arc_diagram(const ArcDiagram& d) {
  Partition p = partition_of(d);
  return is_nonnesting(p) && arc_diagram(p) == d;
}

namespace {

bool spans(const Arc& outer, const Arc& inner) {
  return outer != inner && outer.first <= inner.first && inner.second <= outer.second;
}

}  // namespace

ArcDiagram reduce_graph(const ArcDiagram& g, const std::function<std::size_t(std::size_t)>& choose) {
  std::vector<Arc> arcs = g.arcs;
  while (true) {
    std::vector<std::size_t> deletable;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (const Arc& other : arcs)
        if (spans(arcs[i], other)) {
          deletable.push_back(i);
          break;
        }
    if (deletable.empty()) break;
    std::size_t pick = choose(deletable.size());
    if (pick >= deletable.size()) throw std::out_of_range("reduce_graph: choice out of range");
    arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(deletable[pick]));
  }
  ArcDiagram out(g.r, std::move(arcs));
  if (!is_arc_diagram(out)) throw std::logic_error("reduce_graph: result is not an arc diagram");
  return out;
}

ArcDiagram reduce_graph(const ArcDiagram& g) {
  return reduce_graph(g, [](std::size_t) { return std::size_t{0}; });
}

Complex graph_complex(const ArcDiagram& d) {
  std::vector<std::vector<int>> facets;
  std::vector<bool> covered(static_cast<std::size_t>(d.r) + 1, false);
  for (auto [i, j] : d.arcs) {
    facets.push_back({i, j});
    covered[static_cast<std::size_t>(i)] = covered[static_cast<std::size_t>(j)] = true;
  }
  for (int v = 1; v <= d.r; ++v)
    if (!covered[static_cast<std::size_t>(v)]) facets.push_back({v});
  return Complex::from_facets(d.r, facets);
}

Complex complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
  std::vector<std::vector<int>> facets;
  if (n == 1) facets.push_back({1});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) facets.push_back({i, j});
  return Complex::from_facets(n, facets);
}

IdealGens nonnesting_ideal(const Partition& p, int n) {
  return ideal_generators(graph_complex(arc_diagram(p)), complete_graph(n));
}

bool poset_leq(const ArcDiagram& p, const ArcDiagram& q) {
  if (p.r != q.r) throw std::invalid_argument("poset_leq: diagrams on different ground sets");
  return std::all_of(q.arcs.begin(), q.arcs.end(), [&](const Arc& outer) {
    return std::any_of(p.arcs.begin(), p.arcs.end(), [&](const Arc& inner) {
      return outer.first <= inner.first && inner.second <= outer.second;
    });
  });
}

std::size_t DiagramPoset::index_of(const ArcDiagram& d) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == d) return i;
  throw std::invalid_argument("diagram not in poset: " + to_string(d));
}

DiagramPoset build_poset(int r, int max_r) {
  if (r < 1 || r > max_r) throw std::out_of_range("build_poset: r out of range");
  std::vector<ArcDiagram> raw;
  for (const auto& p : enumerate_nonnesting(r, max_r)) raw.push_back(arc_diagram(p));
  const std::size_t count = raw.size();

  // a strict relation strictly increases the size of the down-set
  std::vector<std::size_t> below(count, 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (poset_leq(raw[j], raw[i])) ++below[i];
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(below[a], raw[a]) < std::tie(below[b], raw[b]);
  });

  DiagramPoset out;
  out.r = r;
  for (std::size_t i : order) out.elements.push_back(raw[i]);
  out.leq.assign(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i; j < count; ++j) {
      out.leq[i][j] = poset_leq(out.elements[i], out.elements[j]);
      if (j != i && poset_leq(out.elements[j], out.elements[i]))
        throw std::logic_error("build_poset: order is not antisymmetric");
    }

  out.mobius.assign(count, std::vector<std::int64_t>(count, 0));
  for (std::size_t x = 0; x < count; ++x) {
    out.mobius[x][x] = 1;
    for (std::size_t y = x + 1; y < count; ++y) {
      if (!out.leq[x][y]) continue;
      std::int64_t sum = 0;
      for (std::size_t z = x; z < y; ++z)
        if (out.leq[x][z] && out.leq[z][y]) sum += out.mobius[x][z];
      out.mobius[x][y] = -sum;
    }
  }
  return out;
}

ArcDiagram utau_generator(const Cell& tau) {
  const int r = static_cast<int>(tau.size());
  for (int i = 0; i < r; ++i) {
    const VertexSet& w = tau.parts[static_cast<std::size_t>(i)];
    if (w.size() == 0) throw std::invalid_argument("utau_generator: empty part");
    if (i + 1 < r && w.max() > tau.parts[static_cast<std::size_t>(i + 1)].min())
      throw std::invalid_argument("utau_generator: cell is not order preserving");
  }
  std::vector<Arc> forced;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (tau.parts[static_cast<std::size_t>(i)].max() < tau.parts[static_cast<std::size_t>(j)].min())
        forced.emplace_back(i + 1, j + 1);
  return reduce_graph(ArcDiagram(r, std::move(forced)));
}

std::vector<Cell> empty_diagram_cells(int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("empty_diagram_cells: r and n must be positive");
  std::vector<Cell> out;
  Cell cur;
  cur.parts.resize(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i == r) {
      out.push_back(cur);
      return;
    }
    // nonempty subsets of [lo, n]
    const int width = n - lo + 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); ++mask) {
      cur.parts[static_cast<std::size_t>(i)] = VertexSet(mask << (lo - 1));
      self(self, i + 1, cur.parts[static_cast<std::size_t>(i)].max());
    }
  };
  rec(rec, 0, 1);
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return cell_key_less(a, b);
  });
#ifndef NDEBUG
  Complex ge = graph_complex(ArcDiagram(r, {}));
  Complex kn = complete_graph(n);
  for (const Cell& c : out)
    if (!is_multihom(ge, kn, c)) throw std::logic_error("empty_diagram_cells: shortcut produced a non-cell");
#endif
  return out;
}

namespace {

void check_weight_bounds(int r, int n, int max_k, int max_rn) {
  if (r < 1 || n < 1 || r > max_rn || n > max_rn || max_k < 0)
    throw std::out_of_range("weights: parameters out of range");
}

}  // namespace

WeightTable weights(int r, int n, int max_k, int max_rn) {
  check_weight_bounds(r, n, max_k, max_rn);
  DiagramPoset poset = build_poset(r, max_rn);
  WeightTable table;
  for (const auto& d : poset.elements) table[d].assign(static_cast<std::size_t>(max_k) + 1, 0);
  for (const Cell& c : empty_diagram_cells(r, n)) {
    if (c.dim() > max_k) continue;
    auto it = table.find(utau_generator(c));
    if (it == table.end()) throw std::logic_error("weights: generator outside the poset");
    ++it->second[static_cast<std::size_t>(c.dim())];
  }
  return table;
}

WeightTable weights_by_inversion(int r, int n, int max_k, int max_rn) {
  check_weight_bounds(r, n, max_k, max_rn);
  DiagramPoset poset = build_poset(r, max_rn);
  const std::size_t count = poset.elements.size();
  const std::size_t width = static_cast<std::size_t>(max_k) + 1;
  std::vector<std::vector<std::int64_t>> betti(count, std::vector<std::int64_t>(width, 0));
  Complex kn = complete_graph(n);
  for (std::size_t q = 0; q < count; ++q) {
    auto f = build_ohom(graph_complex(poset.elements[q]), kn).f_vector();
    for (std::size_t k = 0; k < width && k < f.size(); ++k) betti[q][k] = static_cast<std::int64_t>(f[k]);
  }
  WeightTable table;
  for (std::size_t p = 0; p < count; ++p) {
    std::vector<std::uint64_t> w(width, 0);
    for (std::size_t k = 0; k < width; ++k) {
      std::int64_t sum = 0;
      for (std::size_t q = 0; q <= p; ++q)
        if (poset.leq[q][p]) sum += poset.mobius[q][p] * betti[q][k];
      if (sum < 0) throw std::logic_error("weights_by_inversion: negative weight");
      w[k] = static_cast<std::uint64_t>(sum);
    }
    table[poset.elements[p]] = std::move(w);
  }
  return table;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out = out * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  return out;
}

std::uint64_t omega0_closed_form(const ArcDiagram& p, int n) {
  for (auto [i, j] : p.arcs)
    if (j - i != 1) return 0;
  return binomial(n, 1 + static_cast<int>(p.arcs.size()));
}

std::vector<ArcDiagram> small_diagrams(int r, int max_r) {
  std::vector<ArcDiagram> out;
  for (const auto& p : enumerate_nonnesting(r, max_r)) {
    ArcDiagram d = arc_diagram(p);
    if (std::all_of(d.arcs.begin(), d.arcs.end(), [](const Arc& a) { return a.second - a.first <= 2; }))
      out.push_back(std::move(d));
  }
  return out;
}

}  // namespace ohomres
