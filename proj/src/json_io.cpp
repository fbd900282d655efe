#include "ohomres/json_io.hpp"

#include <stdexcept>

namespace ohomres {

Complex complex_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
      throw std::invalid_argument("complex JSON needs \"n\" and \"facets\"");
    const int n = j.at("n").get<int>();
    auto facets = j.at("facets").get<std::vector<std::vector<int>>>();
    return Complex::from_facets(n, facets);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed complex JSON: ") + e.what());
  }
}

json to_json(const Complex& h) {
  json facets = json::array();
  for (VertexSet f : h.facets()) facets.push_back(f.elements());
  return {{"n", h.n()}, {"facets", facets}};
}

json to_json(const Monomial& m) { return m.exponents(); }

json to_json(const Hom& phi) { return phi.images; }

json to_json(const Cell& c) {
  json parts = json::array();
  for (VertexSet w : c.parts) parts.push_back(w.elements());
  return parts;
}

json to_json(const PComplex& x) {
  json cells = json::array();
  for (int d = 0; d <= x.dim(); ++d)
    for (std::size_t i = 0; i < x.cells(d).size(); ++i)
      cells.push_back({{"parts", to_json(x.cell({d, i}))}, {"dim", d}, {"label", to_json(x.label({d, i}))}});
  return {{"n", x.n()}, {"m", x.m()}, {"cells", cells}};
}

json to_json(const IdealGens& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens) gens.push_back(to_json(g));
  return {{"m", ideal.m}, {"degree", ideal.degree}, {"gens", gens}};
}

json to_json(const ResolutionExport& res) {
  json layers = json::array();
  for (std::size_t i = 0; i < res.layers.size(); ++i) {
    const auto& layer = res.layers[i];
    json entries = json::array();
    for (const auto& e : layer.entries) entries.push_back({e.row, e.col, e.sign, to_json(e.monomial)});
    layers.push_back({{"degree", i}, {"rows", layer.rows}, {"cols", layer.cols}, {"entries", entries}});
  }
  return {{"m", res.m}, {"layers", layers}};
}

json to_json(const ArcDiagram& d) {
  json arcs = json::array();
  for (auto [i, k] : d.arcs) arcs.push_back({i, k});
  return {{"r", d.r}, {"arcs", arcs}};
}

ArcDiagram arc_diagram_from_json(const json& j) {
  try {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    return ArcDiagram(j.at("r").get<int>(), std::move(arcs));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed arc diagram JSON: ") + e.what());
  }
}

json to_json(const CointervalWitness& w) {
  json out = {{"cointerval", w.verdict}};
  if (w.violation) {
    const auto& v = *w.violation;
    out["violation"] = {{"context", v.context}, {"i", v.i}, {"j", v.j}, {"face", v.face.elements()}};
  }
  return out;
}

json to_json(const SheddingTree& t) {
  json out = {{"complex", to_json(t.complex)}};
  if (t.is_leaf()) return out;
  out["shedding_vertex"] = t.shedding_vertex;
  out["deletion"] = to_json(t.children[0]);
  out["link"] = to_json(t.children[1]);
  return out;
}

json to_json(const SheddingFailure& f) {
  json out = {{"vertex", f.vertex}};
  switch (f.reason) {
    case SheddingFailure::Reason::SharedFacet:
      out["reason"] = "shared-facet";
      out["facet"] = f.shared_facet.elements();
      break;
    case SheddingFailure::Reason::DeletionNotDecomposable:
      out["reason"] = "deletion-not-decomposable";
      break;
    case SheddingFailure::Reason::LinkNotDecomposable:
      out["reason"] = "link-not-decomposable";
      break;
  }
  return out;
}

json to_json(const RemovalCert& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back({{"vertex", to_json(s.vertex)}, {"facet", to_json(s.facet)}});
  return {{"steps", steps}, {"terminal", to_json(c.terminal)}};
}

json to_json(const CollapsePair& p) { return {{"face", to_json(p.face)}, {"coface", to_json(p.coface)}}; }

json to_json(const WeightTable& w) {
  json out = json::object();
  for (const auto& [d, values] : w) out[to_string(d)] = values;
  return out;
}

}  // namespace ohomres
