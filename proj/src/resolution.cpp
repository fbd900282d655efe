#include "ohomres/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "ohomres/cointerval.hpp"

namespace ohomres {

namespace {

IdealGens gens_of_vertices(const PComplex& x, int degree) {
  IdealGens out;
  out.m = x.m();
  out.degree = degree;
  if (x.empty()) return out;
  for (std::size_t i = 0; i < x.cells(0).size(); ++i) out.gens.push_back(x.label({0, i}));
  std::sort(out.gens.begin(), out.gens.end(),
            [](const Monomial& a, const Monomial& b) { return revlex_cmp(a, b) > 0; });
  return out;
}

template <class Visit>
void for_each_covering_pair(const PComplex& x, Visit visit) {
  for (int d = 1; d <= x.dim(); ++d) {
    for (std::size_t i = 0; i < x.cells(d).size(); ++i) {
      const PComplex::CellRef tau{d, i};
      for (const auto& [face, sign] : x.boundary(x.cell(tau))) {
        auto sigma = x.find(face);
        if (sigma && !visit(tau, *sigma)) return;
      }
    }
  }
}

}  // namespace

IdealGens ideal_generators(const Complex& g, const Complex& h) {
  IdealGens out;
  out.m = h.n();
  out.degree = g.n();
  for (const Hom& phi : ordered_homs(g, h)) out.gens.push_back(hom_monomial(phi, h.n()));
  return out;
}

IdealGens ideal_generators(const Complex& g, const Complex& h, const RestrictionSpec& spec) {
  if (spec.empty()) return ideal_generators(g, h);
  return gens_of_vertices(build_ohom(g, h, spec), g.n());
}

std::vector<Monomial> lcm_lattice(const PComplex& x) {
  std::unordered_set<Monomial> seen;
  std::vector<Monomial> all;
  if (x.empty()) return all;
  for (std::size_t v = 0; v < x.cells(0).size(); ++v) {
    const Monomial& label = x.label({0, v});
    const std::size_t before = all.size();
    if (seen.insert(label).second) all.push_back(label);
    for (std::size_t i = 0; i < before; ++i) {
      Monomial l = lcm(all[i], label);
      if (seen.insert(l).second) all.push_back(l);
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool verify_supports_resolution(const PComplex& x, FieldTag field, unsigned threads) {
  if (x.empty()) throw std::invalid_argument("verify_supports_resolution: empty complex");
  BoundaryStructure bs(x);

  std::set<std::vector<std::vector<bool>>> patterns;
  for (const Monomial& a : lcm_lattice(x)) {
    std::vector<std::vector<bool>> keep(static_cast<std::size_t>(x.dim() + 1));
    for (int d = 0; d <= x.dim(); ++d) {
      auto& k = keep[static_cast<std::size_t>(d)];
      k.resize(x.cells(d).size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = x.label({d, i}).divides(a);
    }
    patterns.insert(std::move(keep));
  }
  std::vector<const std::vector<std::vector<bool>>*> work;
  for (const auto& p : patterns) work.push_back(&p);

  std::atomic<bool> ok{true};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (ok.load(std::memory_order_relaxed)) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= work.size()) return;
      auto h = bs.reduced_homology(field, work[idx]);
      if (std::any_of(h.begin(), h.end(), [](std::size_t r) { return r != 0; })) ok = false;
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(work.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return ok;
}

bool verify_supports_resolution(const Complex& g, const Complex& h, const RestrictionSpec& spec, FieldTag field,
                                unsigned threads) {
  return verify_supports_resolution(build_ohom(g, h, spec), field, threads);
}

bool verify_minimality(const PComplex& x) {
  bool ok = true;
  for_each_covering_pair(x, [&](PComplex::CellRef tau, PComplex::CellRef sigma) {
    ok = x.label(tau) != x.label(sigma);
    return ok;
  });
  return ok;
}

bool verify_linearity(const PComplex& x) {
  bool ok = true;
  for_each_covering_pair(x, [&](PComplex::CellRef tau, PComplex::CellRef sigma) {
    const Monomial& big = x.label(tau);
    const Monomial& small = x.label(sigma);
    ok = small.divides(big) && big.degree() - small.degree() == 1;
    return ok;
  });
  return ok;
}

BettiTable betti_numbers(const Complex& g, const Complex& h, const RestrictionSpec& spec, bool override_check) {
  BettiTable out;
  out.cointerval_target = is_cointerval(h).verdict;
  if (!out.cointerval_target && !override_check)
    throw std::invalid_argument("betti_numbers: target complex is not cointerval");
  PComplex delta = build_ohom(g, h, spec);
  if (!out.cointerval_target && !delta.empty()) {
    if (!verify_supports_resolution(delta, FieldTag::Rationals) || !verify_minimality(delta))
      throw std::runtime_error("betti_numbers: complex does not support a minimal resolution");
  }
  out.values = delta.f_vector();
  return out;
}

ResolutionExport export_resolution(const PComplex& x) {
  if (x.empty()) throw std::invalid_argument("export_resolution: empty complex");
  if (!verify_supports_resolution(x, FieldTag::Rationals))
    throw std::runtime_error("export_resolution: complex does not support a resolution");
  BoundaryStructure bs(x);
  ResolutionExport out;
  out.m = x.m();

  ExportLayer top;
  top.rows = 1;
  top.cols = x.cells(0).size();
  for (std::size_t j = 0; j < top.cols; ++j) {
    top.entries.push_back({0, j, 1, x.label({0, j})});
    top.col_cells.push_back(x.cell({0, j}));
  }
  out.layers.push_back(std::move(top));

  for (int d = 1; d <= x.dim(); ++d) {
    ExportLayer layer;
    layer.rows = x.cells(d - 1).size();
    layer.cols = x.cells(d).size();
    for (std::size_t j = 0; j < layer.cols; ++j) {
      layer.col_cells.push_back(x.cell({d, j}));
      for (auto [face, sign] : bs.facets(d, j))
        layer.entries.push_back({face, j, sign, quotient(x.label({d, j}), x.label({d - 1, face}))});
    }
    std::sort(layer.entries.begin(), layer.entries.end(),
              [](const ExportEntry& a, const ExportEntry& b) { return std::tie(a.col, a.row) < std::tie(b.col, b.row); });
    out.layers.push_back(std::move(layer));
  }
  return out;
}

ResolutionExport export_resolution(const Complex& g, const Complex& h, const RestrictionSpec& spec) {
  return export_resolution(build_ohom(g, h, spec));
}

}  // namespace ohomres
