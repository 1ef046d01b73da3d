// Command-line front end: prints one JSON document (or DOT) per invocation.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "zzq/error.hpp"
#include "zzq/exceptional.hpp"
#include "zzq/hom.hpp"
#include "zzq/quasi_hereditary.hpp"
#include "zzq/tilting.hpp"
#include "zzq/verify.hpp"

using json = nlohmann::ordered_json;
using namespace zzq;

namespace {

struct Globals {
  std::string kind = "B";
  int n = 3;
  std::uint32_t prime = 2;
  std::uint64_t seed = 0;
};

std::unique_ptr<Workspace> make_workspace(const Globals& g) {
  WorkspaceOptions opts;
  opts.search.seed = g.seed;
  return std::make_unique<Workspace>(parse_kind(g.kind), g.n, g.prime, opts);
}

json algebra_json(const Algebra& alg) {
  return {{"kind", to_string(alg.kind())}, {"n", alg.vertex_count()}, {"p", alg.field().p()}};
}

json module_json(const Workspace& ws, const Representation& m) {
  json label = nullptr;
  if (!m.is_zero())
    if (auto id = ws.catalog().identify(m)) label = display_name(ws.algebra(), *id);
  return {{"label", label}, {"dim_vector", m.dims()}};
}

json label_json(const Workspace& ws, const Label& l) {
  const Label c = ws.canonical(l);
  return {{"label", display_name(ws.algebra(), c)}, {"dim_vector", ws.module(c).dims()}};
}

json names(const Workspace& ws, const std::vector<Label>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(display_name(ws.algebra(), l));
  return out;
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const Algebra& alg, json result) {
  json doc;
  doc["algebra"] = algebra_json(alg);
  doc["result"] = std::move(result);
  std::cout << doc.dump(2) << "\n";
}

json algebra_info(const Workspace& ws) {
  const Algebra& alg = ws.algebra();
  json basis = json::array(), arrows = json::array();
  for (const auto& b : alg.basis())
    basis.push_back({{"name", b.name}, {"source", b.source + 1}, {"target", b.target + 1}});
  for (const auto& a : alg.arrows()) arrows.push_back({{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
  return {{"descriptor", alg.descriptor()}, {"dimension", alg.dimension()}, {"basis", basis}, {"arrows", arrows}};
}

json catalog_list(const Workspace& ws) {
  json out = json::array();
  for (const auto& e : ws.catalog().entries())
    out.push_back({{"label", display_name(ws.algebra(), e.label)}, {"dim_vector", e.module.dims()}});
  return out;
}

json module_show(const Workspace& ws, const Label& label) {
  const Representation& m = ws.module(label);
  json maps = json::array();
  for (std::size_t a = 0; a < m.maps().size(); ++a)
    maps.push_back({{"arrow", ws.algebra().arrows()[a].name}, {"matrix", matrix_json(m.maps()[a])}});
  json out = module_json(ws, m);
  out["requested"] = label.str();
  out["top"] = top_dims(m);
  out["socle"] = socle_dims(m);
  out["maps"] = maps;
  out["projective_dimension"] = to_string(ws.pd(label));
  return out;
}

json ext_table(const std::vector<std::size_t>& dims) {
  json out = json::array();
  for (std::size_t k = 0; k < dims.size(); ++k) out.push_back({{"k", k}, {"dim", dims[k]}});
  return out;
}

json resolution_json(const Workspace& ws, const Resolution& res) {
  json terms = json::array();
  for (std::size_t k = 0; k < res.terms.size(); ++k) {
    json summands = json::array();
    for (int v : res.terms[k].tops) summands.push_back(Label::projective(v + 1).str());
    json syz = res.syzygies[k + 1].is_zero() ? json::array() : names(ws, ws.labels_of(res.syzygies[k + 1]));
    terms.push_back({{"k", k}, {"projectives", summands}, {"kernel", syz}});
  }
  json out = {{"module", module_json(ws, res.module)},
              {"status", to_string(res.status)},
              {"projective_dimension", to_string(projective_dimension(res))}};
  if (res.status == ResolutionStatus::Periodic) {
    out["preperiod"] = res.preperiod;
    out["period"] = res.period;
  }
  out["terms"] = terms;
  return out;
}

SimpleOrder parse_order(const std::string& text, int n) {
  SimpleOrder order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      order.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      throw InvalidInput("order must be a comma-separated list of vertices, e.g. 1,2,3");
    }
  }
  validate_order(order, n);
  return order;
}

json qh_check(const Workspace& ws, const std::string& order_text) {
  const int n = ws.n();
  const SimpleOrder order = order_text.empty() ? natural_order(n) : parse_order(order_text, n);
  json ord = json::array();
  for (int v : order) ord.push_back(v + 1);
  json standard = json::array();
  for (const auto& d : standard_for_order(ws.algebra_ptr(), order)) standard.push_back(module_json(ws, d.module));
  const Thm2Report r = thm2_hypothesis_report(ws.algebra_ptr(), ws.search());
  json pi = json::array();
  for (int v : r.projective_injective) pi.push_back(display_name(ws.algebra(), ws.canonical(Label::projective(v + 1))));
  return {{"order", ord},
          {"quasi_hereditary", is_quasi_hereditary(ws.algebra_ptr(), order, ws.search())},
          {"standard", standard},
          {"hypotheses",
           {{"projective_injective_count", r.projective_injective_count},
            {"projective_injective", pi},
            {"duality_ok", r.duality_ok},
            {"order_ok", r.order_ok}}}};
}

json tilting_json(const Workspace& ws, const TiltingPoset& poset, bool with_edges) {
  json members = json::array();
  for (const auto& t : poset.members) members.push_back({{"name", node_name(ws, t)}, {"summands", names(ws, t)}});
  json out = {{"count", poset.members.size()}, {"modules", members}};
  if (!with_edges) return out;
  json edges = json::array();
  for (const auto& e : poset.edges)
    edges.push_back({{"larger", node_name(ws, poset.members[e.larger])},
                     {"smaller", node_name(ws, poset.members[e.smaller])},
                     {"sequence",
                      {{"submodule", display_name(ws.algebra(), e.x)},
                       {"middle", names(ws, e.middle)},
                       {"quotient", display_name(ws.algebra(), e.y)}}}});
  out["edges"] = edges;
  if (poset.chain) {
    json chain = json::array();
    for (auto i : *poset.chain) chain.push_back(node_name(ws, poset.members[i]));
    out["chain"] = chain;
  } else {
    out["chain"] = nullptr;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological computations over the zig-zag algebras A_n and their quotients B_n, C_n"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--kind", g.kind, "Algebra kind A, B or C")->capture_default_str();
  app.add_option("--n", g.n, "Number of vertices (>= 2)")->capture_default_str();
  app.add_option("--prime", g.prime, "Prime field characteristic")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized searches")->capture_default_str();

  auto group = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto leaf = [](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* algebra_cmd = group("algebra", "Algebra data");
  algebra_cmd->require_subcommand(1);
  auto* algebra_info_cmd = leaf(algebra_cmd, "info", "Basis and arrows");

  auto* catalog_cmd = group("catalog", "Indecomposable modules");
  catalog_cmd->require_subcommand(1);
  auto* catalog_list_cmd = leaf(catalog_cmd, "list", "List the catalog");

  std::string label_a, label_b;
  auto* module_cmd = group("module", "Single modules");
  module_cmd->require_subcommand(1);
  auto* module_show_cmd = leaf(module_cmd, "show", "Show a module");
  module_show_cmd->add_option("label", label_a, kLabelGrammar)->required();

  auto* hom_cmd = group("hom", "dim Hom(X, Y)");
  hom_cmd->add_option("X", label_a)->required();
  hom_cmd->add_option("Y", label_b)->required();

  std::size_t kmax = 0;
  auto* ext_cmd = group("ext", "dim Ext^k(X, Y) for k = 0..kmax");
  ext_cmd->add_option("X", label_a)->required();
  ext_cmd->add_option("Y", label_b)->required();
  ext_cmd->add_option("--kmax", kmax, "Largest degree (default 2n)");

  auto* resolve_cmd = group("resolve", "Minimal projective resolution");
  resolve_cmd->add_option("label", label_a)->required();
  resolve_cmd->add_option("--kmax", kmax, "Resolution budget (default 4n+2)");

  std::string order_text;
  auto* qh_cmd = group("qh", "Quasi-hereditary structure");
  qh_cmd->require_subcommand(1);
  auto* qh_check_cmd = leaf(qh_cmd, "check", "Check an order of the simples");
  qh_check_cmd->add_option("--order", order_text, "Comma-separated vertices, smallest first (default 1,2,...,n)");

  std::string format = "json";
  auto* tilting_cmd = group("tilting", "Generalized tilting modules");
  tilting_cmd->require_subcommand(1);
  auto* tilting_enum_cmd = leaf(tilting_cmd, "enumerate", "All basic generalized tilting modules");
  auto* tilting_hasse_cmd = leaf(tilting_cmd, "hasse", "Exchange graph");
  tilting_hasse_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();

  std::size_t length = 0;
  bool full_only = false;
  auto* exc_cmd = group("exceptional", "Exceptional sequences");
  exc_cmd->require_subcommand(1);
  auto* exc_enum_cmd = leaf(exc_cmd, "enumerate", "Enumerate exceptional sequences");
  exc_enum_cmd->add_option("--length", length, "Sequence length (default n)");
  exc_enum_cmd->add_flag("--full-only", full_only, "Keep only full sequences");

  int n_max = 0;
  auto* verify_cmd = group("verify", "Run the acceptance checks");
  verify_cmd->add_option("--n-max", n_max, "Largest n to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) {
      VerifyScope scope;
      scope.p = g.prime;
      scope.seed = g.seed;
      if (app.count("--kind")) scope.kinds = {parse_kind(g.kind)};
      if (app.count("--n")) scope.n_min = scope.n_max = g.n;
      if (n_max > 0) scope.n_max = std::min(scope.n_max, n_max);
      static_cast<void>(Field(scope.p));  // rejects a bad prime as a usage error
      Verifier verifier(scope);
      json criteria = json::array();
      bool ok = true;
      for (int id = 1; id <= kCriterionCount; ++id) {
        const CriterionResult r = verifier.run(id);
        std::cerr << (r.skipped ? "[SKIP] " : r.passed ? "[PASS] " : "[FAIL] ") << id << " " << r.title << ": "
                  << r.detail << "\n";
        ok = ok && r.passed;
        criteria.push_back(
            {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"skipped", r.skipped}, {"detail", r.detail}});
      }
      json doc;
      doc["scope"] = {{"n_min", scope.n_min}, {"n_max", scope.n_max}, {"p", scope.p}};
      doc["result"] = {{"passed", ok}, {"criteria", criteria}};
      std::cout << doc.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    const auto ws = make_workspace(g);
    const Algebra& alg = ws->algebra();
    if (*algebra_info_cmd) {
      emit(alg, algebra_info(*ws));
    } else if (*catalog_list_cmd) {
      emit(alg, catalog_list(*ws));
    } else if (*module_show_cmd) {
      emit(alg, module_show(*ws, parse_label(label_a)));
    } else if (*hom_cmd) {
      const Label x = parse_label(label_a), y = parse_label(label_b);
      emit(alg, {{"source", label_json(*ws, x)}, {"target", label_json(*ws, y)}, {"dim", ws->hom(x, y)}});
    } else if (*ext_cmd) {
      const Label x = parse_label(label_a), y = parse_label(label_b);
      const std::size_t k = kmax ? kmax : static_cast<std::size_t>(2 * g.n);
      emit(alg, {{"source", label_json(*ws, x)}, {"target", label_json(*ws, y)}, {"ext", ext_table(ws->ext(x, y, k))}});
    } else if (*resolve_cmd) {
      const Label x = parse_label(label_a);
      Resolution res = kmax ? zzq::resolve(ws->module(x), kmax,
                                           [&](const Representation& m) { return ws->fingerprint(m); }, ws->search())
                            : *ws->resolution(x);
      emit(alg, resolution_json(*ws, res));
    } else if (*qh_check_cmd) {
      emit(alg, qh_check(*ws, order_text));
    } else if (*tilting_enum_cmd) {
      emit(alg, tilting_json(*ws, enumerate_tilting(*ws), false));
    } else if (*tilting_hasse_cmd) {
      TiltingPoset poset = enumerate_tilting(*ws);
      hasse_edges(*ws, poset);
      if (format == "dot")
        std::cout << to_dot(*ws, poset);
      else
        emit(alg, tilting_json(*ws, poset, true));
    } else if (*exc_enum_cmd) {
      const std::size_t len = length ? length : static_cast<std::size_t>(g.n);
      const auto seqs = enumerate_exceptional_sequences(*ws, len, full_only);
      json list = json::array();
      for (const auto& s : seqs) list.push_back(names(*ws, s));
      emit(alg, {{"length", len}, {"full_only", full_only}, {"count", seqs.size()}, {"sequences", list}});
    }
  } catch (const InvalidLabel& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedKind& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
