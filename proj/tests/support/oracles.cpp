#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>

namespace oracle {

using ohomres::Cell;
using ohomres::Complex;
using ohomres::VertexSet;

FaceSet closure(const std::vector<Mask>& facets) {
  FaceSet out;
  for (Mask f : facets) {
    Mask sub = f;
    while (true) {
      out.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return out;
}

FaceSet faces_of(const Complex& h) {
  std::vector<Mask> facets;
  for (VertexSet f : h.facets()) facets.push_back(f.bits());
  return closure(facets);
}

std::vector<Mask> maximal(const FaceSet& faces) {
  std::vector<Mask> out;
  for (Mask f : faces) {
    bool is_max = true;
    for (Mask g : faces)
      if (g != f && (f & g) == f) {
        is_max = false;
        break;
      }
    if (is_max) out.push_back(f);
  }
  return out;
}

FaceSet link(const FaceSet& faces, Mask sigma) {
  FaceSet out;
  for (Mask t : faces)
    if ((t & sigma) == 0 && faces.count(t | sigma)) out.insert(t);
  return out;
}

FaceSet rlk(const FaceSet& faces, Mask sigma) {
  const int top = 63 - std::countl_zero(sigma);
  FaceSet out;
  for (Mask t : link(faces, sigma))
    if (t == 0 || std::countr_zero(t) > top) out.insert(t);
  return out;
}

FaceSet induced(const FaceSet& faces, Mask w) {
  FaceSet out;
  for (Mask t : faces)
    if ((t & ~w) == 0) out.insert(t);
  return out;
}

FaceSet deletion(const FaceSet& faces, int x) {
  FaceSet out;
  const Mask bit = Mask{1} << (x - 1);
  for (Mask t : faces)
    if ((t & bit) == 0) out.insert(t);
  return out;
}

Mask vertices(const FaceSet& faces) {
  Mask v = 0;
  for (Mask t : faces) v |= t;
  return v;
}

bool is_cointerval(const FaceSet& faces) {
  if (faces.empty() || (faces.size() == 1 && *faces.begin() == 0)) return true;
  std::vector<int> verts;
  Mask v = vertices(faces);
  for (int b = 0; b < 64; ++b)
    if (v >> b & 1) verts.push_back(b);
  std::vector<FaceSet> links;
  for (int b : verts) {
    links.push_back(rlk(faces, Mask{1} << b));
    if (!is_cointerval(links.back())) return false;
  }
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!std::includes(links[i].begin(), links[i].end(), links[j].begin(), links[j].end())) return false;
  return true;
}

bool is_shifted(const FaceSet& faces) {
  for (Mask f : faces)
    for (int i = 0; i < 64; ++i) {
      if (!(f >> i & 1)) continue;
      for (int j = 0; j < i; ++j) {
        if (f >> j & 1) continue;
        if (!faces.count((f & ~(Mask{1} << i)) | (Mask{1} << j))) return false;
      }
    }
  return true;
}

bool is_simplex(const FaceSet& faces) { return !faces.empty() && maximal(faces).size() == 1; }

std::vector<std::vector<int>> homs(const Complex& g, const Complex& h) {
  const int n = g.n();
  const int m = h.n();
  FaceSet gf = faces_of(g);
  FaceSet hf = faces_of(h);
  std::vector<std::vector<int>> out;
  std::vector<int> phi(static_cast<std::size_t>(n), 1);
  if (m == 0) return out;
  while (true) {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = phi[static_cast<std::size_t>(i)] <= phi[static_cast<std::size_t>(i + 1)];
    for (auto it = gf.begin(); it != gf.end() && ok; ++it) {
      Mask image = 0;
      int count = 0;
      for (int v = 1; v <= n; ++v)
        if (*it >> (v - 1) & 1) {
          image |= Mask{1} << (phi[static_cast<std::size_t>(v - 1)] - 1);
          ++count;
        }
      ok = std::popcount(image) == count && hf.count(image);
    }
    if (ok) out.push_back(phi);
    int k = n - 1;
    while (k >= 0 && phi[static_cast<std::size_t>(k)] == m) phi[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++phi[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<Cell> cells(int n, int m, const std::vector<std::vector<int>>& hom_list) {
  std::set<std::vector<int>> valid(hom_list.begin(), hom_list.end());
  std::vector<Cell> out;
  std::vector<Mask> parts(static_cast<std::size_t>(n), 1);
  const Mask limit = Mask{1} << m;
  auto all_selections_valid = [&] {
    std::vector<int> sel(static_cast<std::size_t>(n));
    bool ok = true;
    auto rec = [&](auto&& self, int i) -> void {
      if (!ok) return;
      if (i == n) {
        ok = valid.count(sel) > 0;
        return;
      }
      for (int v = 1; v <= m; ++v)
        if (parts[static_cast<std::size_t>(i)] >> (v - 1) & 1) {
          sel[static_cast<std::size_t>(i)] = v;
          self(self, i + 1);
        }
    };
    rec(rec, 0);
    return ok;
  };
  if (n == 0) return out;
  while (true) {
    if (all_selections_valid()) {
      Cell c;
      for (Mask p : parts) c.parts.push_back(VertexSet(p));
      out.push_back(c);
    }
    int k = n - 1;
    while (k >= 0 && parts[static_cast<std::size_t>(k)] == limit - 1) parts[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++parts[static_cast<std::size_t>(k)];
  }
  return out;
}

std::size_t dense_rank_q(const std::vector<std::vector<long long>>& rows_in) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& r : rows_in) a.emplace_back(r.begin(), r.end());
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t dense_rank_gf2(const std::vector<std::vector<long long>>& rows_in) {
  std::vector<std::vector<int>> a;
  for (const auto& r : rows_in) {
    std::vector<int> row;
    for (long long v : r) row.push_back(static_cast<int>(((v % 2) + 2) % 2));
    a.push_back(row);
  }
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != rank && a[r][c])
        for (std::size_t k = c; k < cols; ++k) a[r][k] ^= a[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> reduced_homology(const std::vector<Cell>& cell_list, bool gf2) {
  std::map<int, std::vector<Cell>> by_dim;
  for (const Cell& c : cell_list) {
    int d = 0;
    for (VertexSet p : c.parts) d += p.size() - 1;
    by_dim[d].push_back(c);
  }
  if (!by_dim.count(0)) throw std::invalid_argument("oracle homology: no vertices");
  const int top = by_dim.rbegin()->first;
  auto key = [](const Cell& c) {
    std::vector<Mask> k;
    for (VertexSet p : c.parts) k.push_back(p.bits());
    return k;
  };
  std::vector<std::map<std::vector<Mask>, std::size_t>> index(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d)
    for (const Cell& c : by_dim[d]) index[static_cast<std::size_t>(d)].emplace(key(c), index[static_cast<std::size_t>(d)].size());

  auto rank_of = [&](const std::vector<std::vector<long long>>& m) { return gf2 ? dense_rank_gf2(m) : dense_rank_q(m); };
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  ranks[0] = 1;
  for (int d = 1; d <= top; ++d) {
    const auto& lower = index[static_cast<std::size_t>(d - 1)];
    std::vector<std::vector<long long>> m(lower.size(), std::vector<long long>(by_dim[d].size(), 0));
    for (std::size_t col = 0; col < by_dim[d].size(); ++col) {
      const Cell& c = by_dim[d][col];
      int s = 0;
      for (std::size_t i = 0; i < c.parts.size(); ++i) {
        auto elems = c.parts[i].elements();
        if (elems.size() >= 2)
          for (std::size_t k = 0; k < elems.size(); ++k) {
            Cell face = c;
            face.parts[i] = c.parts[i].without(elems[k]);
            auto it = lower.find(key(face));
            if (it == lower.end()) throw std::invalid_argument("oracle homology: family not face-closed");
            m[it->second][col] += ((s + static_cast<int>(k)) % 2 == 0) ? 1 : -1;
          }
        s += static_cast<int>(elems.size()) - 1;
      }
    }
    ranks[static_cast<std::size_t>(d)] = rank_of(m);
  }
  std::vector<std::size_t> h;
  for (int d = 0; d <= top; ++d)
    h.push_back(by_dim[d].size() - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d) + 1]);
  return h;
}

int revlex_compare(const ohomres::Monomial& a, const ohomres::Monomial& b) {
  for (int t = static_cast<int>(a.num_vars()); t >= 1; --t)
    if (a.exponent(t) != b.exponent(t)) return a.exponent(t) < b.exponent(t) ? 1 : -1;
  return 0;
}

void for_each_complex(int n, const std::function<void(FaceMask)>& visit) {
  if (n < 0 || n > 6) throw std::out_of_range("for_each_complex: n must be at most 6");
  const unsigned subsets = 1u << n;
  std::vector<unsigned> order;
  for (unsigned s = 0; s < subsets; ++s)
    if (std::popcount(s) >= 2) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::vector<FaceMask> boundary;
  for (unsigned s : order) {
    FaceMask b = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) b |= FaceMask{1} << (s & ~(1u << v));
    boundary.push_back(b);
  }
  FaceMask base = 1;
  for (int v = 0; v < n; ++v) base |= FaceMask{1} << (1u << v);
  auto rec = [&](auto&& self, std::size_t k, FaceMask faces) -> void {
    if (k == order.size()) {
      visit(faces);
      return;
    }
    self(self, k + 1, faces);
    if ((faces & boundary[k]) == boundary[k]) self(self, k + 1, faces | (FaceMask{1} << order[k]));
  };
  rec(rec, 0, base);
}

bool mask_is_cointerval(FaceMask faces) {
  if (faces <= 1) return true;
  FaceMask links[6] = {0, 0, 0, 0, 0, 0};
  int verts[6];
  int count = 0;
  for (int b = 0; b < 6; ++b)
    if (faces >> (1u << b) & 1) verts[count++] = b;
  for (FaceMask f = faces; f; f &= f - 1) {
    const unsigned s = static_cast<unsigned>(std::countr_zero(f));
    if (s == 0) continue;
    const int low = std::countr_zero(s);
    links[low] |= FaceMask{1} << (s & ~(1u << low));
  }
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (links[verts[j]] & ~links[verts[i]]) return false;
  for (int i = 0; i < count; ++i)
    if (!mask_is_cointerval(links[verts[i]])) return false;
  return true;
}

Complex mask_to_complex(int n, FaceMask faces) {
  std::vector<VertexSet> sets;
  for (FaceMask f = faces; f; f &= f - 1) sets.push_back(VertexSet(static_cast<std::uint64_t>(std::countr_zero(f))));
  if (sets.empty()) return Complex::void_complex(n);
  return Complex::from_sets(n, sets);
}


bool sheds(const FaceSet& faces, int x) {
  const Mask bit = Mask{1} << (x - 1);
  if (!faces.count(bit)) return false;
  auto del = maximal(deletion(faces, x));
  auto lk = maximal(link(faces, bit));
  for (Mask f : lk)
    if (std::find(del.begin(), del.end(), f) != del.end()) return false;
  return true;
}

bool valid_shedding_tree(const ohomres::SheddingTree& tree) {
  FaceSet faces = faces_of(tree.complex);
  if (tree.is_leaf()) return tree.complex.is_void() || is_simplex(faces);
  if (tree.children.size() != 2) return false;
  const int x = tree.shedding_vertex;
  if (x < 1 || !sheds(faces, x)) return false;
  if (faces_of(tree.children[0].complex) != deletion(faces, x)) return false;
  if (faces_of(tree.children[1].complex) != link(faces, Mask{1} << (x - 1))) return false;
  return valid_shedding_tree(tree.children[0]) && valid_shedding_tree(tree.children[1]);
}

int revlex_first_nonface_max(const FaceSet& faces) {
  const Mask v = vertices(faces);
  std::vector<Mask> subsets;
  for (Mask s = v;; s = (s - 1) & v) {
    subsets.push_back(s);
    if (s == 0) break;
  }
  auto top = [](Mask m) { return 63 - std::countl_zero(m); };
  std::sort(subsets.begin(), subsets.end(), [&](Mask f, Mask g) {
    if (f == g) return false;
    Mask diff = f ^ g;
    return (g >> top(diff) & 1) != 0;
  });
  for (Mask s : subsets)
    if (!faces.count(s)) return top(s) + 1;
  return 0;
}

FaceSet shifted_closure(int n, const std::vector<Mask>& generators) {
  auto elems = [](Mask m) {
    std::vector<int> e;
    for (int b = 0; b < 64; ++b)
      if (m >> b & 1) e.push_back(b);
    return e;
  };
  std::vector<Mask> tops;
  const Mask all = (Mask{1} << n) - 1;
  for (Mask cand = 0; cand <= all; ++cand) {
    auto a = elems(cand);
    for (Mask g : generators) {
      auto b = elems(g);
      if (a.size() != b.size()) continue;
      bool below = true;
      for (std::size_t i = 0; i < a.size() && below; ++i) below = a[i] <= b[i];
      if (below) {
        tops.push_back(cand);
        break;
      }
    }
  }
  return closure(tops);
}

}  // namespace oracle
