#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ohomres/cointerval.hpp"
#include "ohomres/homology.hpp"
#include "ohomres/json_io.hpp"
#include "ohomres/nonnesting.hpp"
#include "ohomres/resolution.hpp"

namespace ohomres::cli {

namespace {

struct Result {
  int code = 0;
  std::string text;
  json data;
};

// Exit 1 without being an input error.
struct Refuted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Complex read_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& s, bool allow_inf) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) {
    if (allow_inf && (item == "inf" || item == "*"))
      out.push_back(kNoCap);
    else
      out.push_back(parse_int(item));
  }
  return out;
}

std::string list_text(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string hom_text(const Hom& phi) {
  std::string out = "(";
  for (std::size_t i = 0; i < phi.size(); ++i) out += (i ? "," : "") + std::to_string(phi.images[i]);
  return out + ")";
}

std::string cell_text(const Cell& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + to_string(c.parts[i]);
  return out + ")";
}

std::string vector_text(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

struct CheckArgs {
  std::string path;
  bool cointerval = false, shifted = false, vd = false, find_order = false;
};

Result do_check(const CheckArgs& a) {
  Complex h = read_complex(a.path);
  Result r;
  if (a.cointerval) {
    auto w = is_cointerval(h);
    r.code = w.verdict ? 0 : 1;
    r.data = to_json(w);
    if (w.verdict) {
      r.text = "cointerval\n";
    } else {
      const auto& v = *w.violation;
      r.text = "not cointerval: face " + to_string(v.face) + " lies in rlk(" + std::to_string(v.j) +
               ") but not in rlk(" + std::to_string(v.i) + ")";
      if (!v.context.empty()) r.text += " inside the right link of " + vector_text(v.context);
      r.text += "\n";
    }
  } else if (a.shifted) {
    bool s = is_shifted(h);
    r.code = s ? 0 : 1;
    r.data = {{"shifted", s}};
    r.text = s ? "shifted\n" : "not shifted\n";
  } else if (a.vd) {
    auto tree = is_vertex_decomposable(h);
    if (tree) {
      r.data = {{"vertex_decomposable", true}, {"tree", to_json(*tree)}};
      r.text = "vertex decomposable (shedding tree with " + std::to_string(tree->node_count()) + " nodes)\n";
      if (tree->shedding_vertex != 0) r.text += "top shedding vertex " + std::to_string(tree->shedding_vertex) + "\n";
    } else {
      r.code = 1;
      json failures = json::array();
      r.text = "not vertex decomposable\n";
      for (const auto& f : shedding_failures(h)) {
        failures.push_back(to_json(f));
        r.text += "  vertex " + std::to_string(f.vertex) + ": ";
        switch (f.reason) {
          case SheddingFailure::Reason::SharedFacet:
            r.text += "link facet " + to_string(f.shared_facet) + " is a facet of the deletion\n";
            break;
          case SheddingFailure::Reason::DeletionNotDecomposable:
            r.text += "deletion is not vertex decomposable\n";
            break;
          case SheddingFailure::Reason::LinkNotDecomposable:
            r.text += "link is not vertex decomposable\n";
            break;
        }
      }
      r.data = {{"vertex_decomposable", false}, {"failures", failures}};
    }
  } else {
    auto perm = exists_cointerval_order(h);
    r.code = perm ? 0 : 1;
    r.data = {{"order", perm ? json(*perm) : json(nullptr)}};
    r.text = perm ? "order " + vector_text(*perm) + "\n" : "no cointerval order\n";
  }
  return r;
}

struct SpecArgs {
  std::string alpha, beta, leq;
};

RestrictionSpec make_spec(const SpecArgs& s, const Complex& g, const Complex& h) {
  RestrictionSpec spec;
  if (!s.alpha.empty()) spec.alpha = parse_int_list(s.alpha, true);
  if (!s.beta.empty()) spec.beta = Monomial(parse_int_list(s.beta, false));
  if (!s.leq.empty()) spec.leq = Monomial(parse_int_list(s.leq, false));
  validate_spec(spec, g.n(), h.n());
  return spec;
}

struct HomArgs {
  std::string g, h, export_path;
  bool generators = false, fvector = false, betti = false, override_check = false;
  SpecArgs spec;
};

Result do_hom(const HomArgs& a) {
  Complex g = read_complex(a.g);
  Complex h = read_complex(a.h);
  RestrictionSpec spec = make_spec(a.spec, g, h);
  Result r;
  if (a.generators) {
    IdealGens ideal = ideal_generators(g, h, spec);
    r.data = to_json(ideal);
    for (const auto& m : ideal.gens) r.text += to_string(m) + "\n";
  } else if (a.fvector) {
    auto f = build_ohom(g, h, spec).f_vector();
    r.data = {{"fvector", f}};
    r.text = list_text(f) + "\n";
  } else if (a.betti) {
    BettiTable b = betti_numbers(g, h, spec, a.override_check);
    r.data = {{"betti", b.values}, {"cointerval_target", b.cointerval_target}};
    r.text = list_text(b.values) + (b.cointerval_target ? "" : " (unverified target, resolution checked)") + "\n";
  } else {
    ResolutionExport res;
    try {
      res = export_resolution(g, h, spec);
    } catch (const std::runtime_error& e) {
      throw Refuted(e.what());
    }
    std::ofstream out(a.export_path);
    if (!out) throw std::invalid_argument("cannot write " + a.export_path);
    out << to_json(res).dump(2) << "\n";
    r.text = "wrote " + a.export_path + ":";
    for (const auto& layer : res.layers) r.text += " " + std::to_string(layer.rows) + "x" + std::to_string(layer.cols);
    r.text += "\n";
    r.data = {{"written", a.export_path}};
  }
  return r;
}

struct VerifyArgs {
  std::string g, h, field = "q";
  bool acyclicity = false, minimality = false, linearity = false, collapse = false, removal = false;
  SpecArgs spec;
};

Result do_verify(const VerifyArgs& a, unsigned threads) {
  Complex g = read_complex(a.g);
  Complex h = read_complex(a.h);
  RestrictionSpec spec = make_spec(a.spec, g, h);
  const FieldTag field = a.field == "gf2" ? FieldTag::GF2 : FieldTag::Rationals;
  PComplex delta = build_ohom(g, h, spec);
  Result r;
  auto verdict = [&](const char* name, bool ok) {
    r.code = ok ? 0 : 1;
    r.data[name] = ok;
    r.text += std::string(name) + ": " + (ok ? "pass" : "fail") + "\n";
  };
  if (a.acyclicity) {
    if (delta.empty()) throw std::invalid_argument("the restricted complex is empty");
    bool acyclic = is_acyclic(delta, field);
    bool supports = verify_supports_resolution(delta, field, threads);
    verdict("acyclic", acyclic);
    verdict("supports_resolution", supports);
    r.code = acyclic && supports ? 0 : 1;
  } else if (a.minimality) {
    verdict("minimal", verify_minimality(delta));
  } else if (a.linearity) {
    verdict("linear", verify_linearity(delta));
  } else if (a.collapse) {
    auto pairs = collapse_certificate(delta);
    if (pairs) {
      json list = json::array();
      r.text = "collapses to a point in " + std::to_string(pairs->size()) + " steps\n";
      for (const auto& p : *pairs) {
        list.push_back(to_json(p));
        r.text += "  " + cell_text(p.face) + " < " + cell_text(p.coface) + "\n";
      }
      r.data = {{"collapsible", true}, {"pairs", list}};
    } else {
      r.code = 1;
      r.data = {{"collapsible", nullptr}};
      r.text = "greedy collapse stalled (inconclusive)\n";
    }
  } else {
    auto outcome = removal_certificate(delta);
    if (outcome) {
      r.data = {{"certificate", to_json(*outcome.certificate)}};
      for (const auto& s : outcome.certificate->steps)
        r.text += "remove " + hom_text(s.vertex) + " via " + cell_text(s.facet) + "\n";
      r.text += "terminal " + hom_text(outcome.certificate->terminal) + "\n";
    } else {
      r.code = 1;
      r.data = {{"certificate", nullptr}, {"offending_vertex", to_json(*outcome.offending_vertex)}};
      r.text = "removal fails at vertex " + hom_text(*outcome.offending_vertex) + "\n";
    }
  }
  return r;
}

struct NnArgs {
  int r = 0, n = 0, k = 0;
  std::string partition;
  bool small = false, count = false, mobius = false, invert = false;
};

Result do_nn_enumerate(const NnArgs& a) {
  Result r;
  if (a.small) {
    auto ds = small_diagrams(a.r);
    if (a.count) {
      r.data = {{"count", ds.size()}};
      r.text = std::to_string(ds.size()) + "\n";
    } else {
      r.data = json::array();
      for (const auto& d : ds) {
        r.data.push_back(to_json(d));
        r.text += to_string(d) + "\n";
      }
    }
    return r;
  }
  auto ps = enumerate_nonnesting(a.r);
  if (a.count) {
    r.data = {{"count", ps.size()}};
    r.text = std::to_string(ps.size()) + "\n";
  } else {
    r.data = json::array();
    for (const auto& p : ps) {
      r.data.push_back(to_string(p));
      r.text += to_string(p) + "\n";
    }
  }
  return r;
}

Result do_nn_poset(const NnArgs& a) {
  DiagramPoset poset = build_poset(a.r);
  Result r;
  json elements = json::array();
  json relations = json::array();
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    elements.push_back(to_string(poset.elements[i]));
    r.text += std::to_string(i) + ": " + to_string(poset.elements[i]) + "\n";
  }
  for (std::size_t i = 0; i < poset.elements.size(); ++i)
    for (std::size_t j = 0; j < poset.elements.size(); ++j) {
      if (i == j || !poset.leq[i][j]) continue;
      json rel = {{"lower", i}, {"upper", j}};
      std::string line = std::to_string(i) + " <= " + std::to_string(j);
      if (a.mobius) {
        rel["mobius"] = poset.mobius[i][j];
        line += "  mu=" + std::to_string(poset.mobius[i][j]);
      }
      relations.push_back(rel);
      r.text += line + "\n";
    }
  r.data = {{"r", a.r}, {"elements", elements}, {"relations", relations}};
  return r;
}

Result do_nn_weights(const NnArgs& a) {
  WeightTable w = a.invert ? weights_by_inversion(a.r, a.n, a.k) : weights(a.r, a.n, a.k);
  Result r;
  r.data = to_json(w);
  for (const auto& [d, values] : w) {
    std::vector<std::size_t> v(values.begin(), values.end());
    r.text += to_string(d) + " " + list_text(v) + "\n";
  }
  return r;
}

Result do_nn_ideal(const NnArgs& a) {
  Partition p = Partition::parse(a.partition);
  IdealGens ideal = nonnesting_ideal(p, a.n);
  Result r;
  r.data = to_json(ideal);
  for (const auto& m : ideal.gens) r.text += to_string(m) + "\n";
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered homomorphism complexes and their cellular resolutions", "ohomresolve"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string output;
  unsigned threads = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", output, "Write results to this file instead of standard output");
  app.add_option("--threads", threads, "Worker threads for resolution checks")->check(CLI::Range(1u, 256u));

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Properties of a simplicial complex");
  check_cmd->add_option("complex", check.path, "Complex JSON file")->required();
  auto* check_group = check_cmd->add_option_group("property");
  check_group->add_flag("--cointerval", check.cointerval);
  check_group->add_flag("--shifted", check.shifted);
  check_group->add_flag("--vertex-decomposable", check.vd);
  check_group->add_flag("--find-order", check.find_order);
  check_group->require_option(1);

  auto add_spec = [](CLI::App* cmd, SpecArgs& s) {
    cmd->add_option("--alpha", s.alpha, "Per-variable caps a1,...,am (inf allowed)");
    cmd->add_option("--beta", s.beta, "Revlex floor as exponents e1,...,em");
    cmd->add_option("--leq", s.leq, "Keep cells whose labels divide this exponent vector");
  };

  HomArgs hom;
  auto* hom_cmd = app.add_subcommand("hom", "Ordered homomorphism complex and its ideal");
  hom_cmd->add_option("G", hom.g, "Source complex JSON")->required();
  hom_cmd->add_option("H", hom.h, "Target complex JSON")->required();
  auto* hom_group = hom_cmd->add_option_group("output");
  hom_group->add_flag("--generators", hom.generators);
  hom_group->add_flag("--fvector", hom.fvector);
  hom_group->add_flag("--betti", hom.betti);
  hom_group->add_option("--export", hom.export_path, "Write the resolution JSON here");
  hom_group->require_option(1);
  hom_cmd->add_flag("--override", hom.override_check, "Allow a non-cointerval target after checking the resolution");
  add_spec(hom_cmd, hom.spec);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check resolution properties of the complex");
  verify_cmd->add_option("G", verify.g, "Source complex JSON")->required();
  verify_cmd->add_option("H", verify.h, "Target complex JSON")->required();
  auto* verify_group = verify_cmd->add_option_group("check");
  verify_group->add_flag("--acyclicity", verify.acyclicity);
  verify_group->add_flag("--minimality", verify.minimality);
  verify_group->add_flag("--linearity", verify.linearity);
  verify_group->add_flag("--collapse", verify.collapse);
  verify_group->add_flag("--removal", verify.removal);
  verify_group->require_option(1);
  verify_cmd->add_option("--field", verify.field, "q or gf2")->check(CLI::IsMember({"q", "gf2"}));
  add_spec(verify_cmd, verify.spec);

  NnArgs nn;
  auto* nn_cmd = app.add_subcommand("nn", "Nonnesting partitions and their ideals");
  nn_cmd->require_subcommand(1);
  auto* enum_cmd = nn_cmd->add_subcommand("enumerate", "List nonnesting partitions");
  enum_cmd->add_option("-r", nn.r)->required();
  enum_cmd->add_flag("--small", nn.small, "Only arc diagrams with spans at most 2");
  enum_cmd->add_flag("--count", nn.count, "Print the count only");
  auto* poset_cmd = nn_cmd->add_subcommand("poset", "The diagram poset");
  poset_cmd->add_option("-r", nn.r)->required();
  poset_cmd->add_flag("--mobius", nn.mobius);
  auto* weights_cmd = nn_cmd->add_subcommand("weights", "Weights of each diagram");
  weights_cmd->add_option("-r", nn.r)->required();
  weights_cmd->add_option("-n", nn.n)->required();
  weights_cmd->add_option("-k", nn.k)->required();
  weights_cmd->add_flag("--invert", nn.invert, "Compute by Möbius inversion of face counts");
  auto* ideal_cmd = nn_cmd->add_subcommand("ideal", "Generators of a nonnesting ideal");
  ideal_cmd->add_option("-p", nn.partition, "Partition such as 1,4|2,5,6|3")->required();
  ideal_cmd->add_option("-n", nn.n)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ohomresolve: " << e.what() << "\n";
    return 2;
  }

  Result result;
  try {
    if (check_cmd->parsed()) {
      result = do_check(check);
    } else if (hom_cmd->parsed()) {
      result = do_hom(hom);
    } else if (verify_cmd->parsed()) {
      result = do_verify(verify, threads);
    } else if (enum_cmd->parsed()) {
      result = do_nn_enumerate(nn);
    } else if (poset_cmd->parsed()) {
      result = do_nn_poset(nn);
    } else if (weights_cmd->parsed()) {
      result = do_nn_weights(nn);
    } else {
      result = do_nn_ideal(nn);
    }
  } catch (const Refuted& e) {
    err << "ohomresolve: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "ohomresolve: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "ohomresolve: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "ohomresolve: " << e.what() << "\n";
    return 1;
  }

  std::string rendered = format == "json" ? result.data.dump() + "\n" : result.text;
  if (output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(output);
    if (!file) {
      err << "ohomresolve: cannot write " << output << "\n";
      return 2;
    }
    file << rendered;
  }
  return result.code;
}

}  // namespace ohomres::cli
