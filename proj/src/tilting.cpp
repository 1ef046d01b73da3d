#include "zzq/tilting.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "zzq/error.hpp"
#include "zzq/hom.hpp"
#include "zzq/projective.hpp"

namespace zzq {

namespace {

Approximation assemble(const Representation& x, const std::vector<Representation>& modules,
                       const std::vector<std::size_t>& which, const std::vector<Morphism>& maps) {
  std::vector<Representation> parts;
  for (auto i : which) parts.push_back(modules[i]);
  Approximation a;
  a.target = direct_sum(x.algebra_ptr(), parts);
  a.summands = which;
  a.map = zero_morphism(x, a.target);
  for (int v = 0; v < x.vertex_count(); ++v) {
    std::size_t row = 0;
    for (const auto& f : maps) {
      const Mat& c = f.at(v);
      for (std::size_t r = 0; r < c.rows(); ++r, ++row)
        for (std::size_t col = 0; col < c.cols(); ++col) a.map.components[v](row, col) = c(r, col);
    }
  }
  return a;
}

std::vector<Label> canonical_set(const Workspace& ws, const std::vector<Label>& labels) {
  std::vector<Label> out;
  for (const auto& l : labels) out.push_back(ws.canonical(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Approximation left_add_approximation(const Representation& x, const std::vector<Representation>& t_summands) {
  std::vector<std::size_t> which;
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i < t_summands.size(); ++i)
    for (auto& f : hom_basis(x, t_summands[i]).basis) {
      which.push_back(i);
      maps.push_back(std::move(f));
    }
  return assemble(x, t_summands, which, maps);
}

Approximation minimal_left_approximation(const Workspace& ws, const Representation& x, const std::vector<Label>& t) {
  const std::vector<Label> labels = canonical_set(ws, t);
  const std::size_t m = labels.size();
  std::vector<Representation> modules;
  std::vector<const LocalCertificate*> certs;
  std::vector<HomSpace> homs;
  for (const auto& l : labels) {
    const CatalogEntry* e = ws.catalog().find(l);
    modules.push_back(e->module);
    certs.push_back(&e->certificate);
    homs.push_back(hom_basis(x, e->module));
  }

  std::vector<std::size_t> which;
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i < m; ++i) {
    if (homs[i].dim() == 0) continue;
    std::vector<Vec> cols;  // radical composites first, then the hom basis
    for (std::size_t j = 0; j < m; ++j) {
      if (homs[j].dim() == 0) continue;
      const std::vector<Morphism> rad = j == i ? certs[i]->radical : hom_basis(modules[j], modules[i]).basis;
      for (const auto& g : rad)
        for (const auto& f : homs[j].basis) cols.push_back(flatten(compose(g, f)));
    }
    const std::size_t skip = cols.size();
    for (const auto& f : homs[i].basis) cols.push_back(flatten(f));
    const Mat stacked = Mat::from_columns(x.field(), cols.front().size(), cols);
    for (auto c : row_reduce(stacked).pivots)
      if (c >= skip) {
        which.push_back(i);
        maps.push_back(homs[i].basis[c - skip]);
      }
  }
  Approximation a = assemble(x, modules, which, maps);
  return a;
}

bool coresolves_regular(const Workspace& ws, const std::vector<Label>& t, std::size_t bound) {
  const std::vector<Label> labels = canonical_set(ws, t);
  const std::set<Label> in_t(labels.begin(), labels.end());
  std::map<Label, std::optional<std::vector<Label>>> step;  // cokernel summands, nullopt if not injective
  auto cokernel_of = [&](const Label& l) -> const std::optional<std::vector<Label>>& {
    auto it = step.find(l);
    if (it != step.end()) return it->second;
    const Representation& x = ws.module(l);
    Approximation a = minimal_left_approximation(ws, x, labels);
    std::optional<std::vector<Label>> result;
    if (is_injective(a.map, x)) result = ws.labels_of(cokernel(a.map, a.target).module);
    return step.emplace(l, std::move(result)).first->second;
  };

  std::deque<std::pair<Label, std::size_t>> work;
  for (int v = 1; v <= ws.n(); ++v) {
    const Label p = ws.canonical(Label::projective(v));
    if (!in_t.count(p)) work.emplace_back(p, 0);
  }
  while (!work.empty()) {
    auto [l, depth] = work.front();
    work.pop_front();
    if (depth + 1 > bound) return false;
    const auto& next = cokernel_of(l);
    if (!next) return false;
    for (const auto& c : *next)
      if (!in_t.count(c)) work.emplace_back(c, depth + 1);
  }
  return true;
}

bool is_generalized_tilting(const Workspace& ws, const std::vector<Label>& t) {
  const std::vector<Label> labels = canonical_set(ws, t);
  std::size_t max_pd = 0;
  for (const auto& l : labels) {
    const auto pd = ws.pd(l);
    if (!pd.finite()) return false;
    max_pd = std::max(max_pd, pd.value);
  }
  for (const auto& x : labels)
    for (const auto& y : labels) {
      const auto e = ws.ext(x, y, max_pd);
      for (std::size_t k = 1; k <= max_pd; ++k)
        if (e[k] != 0) return false;
    }
  return coresolves_regular(ws, labels, 2 * static_cast<std::size_t>(ws.n()));
}

std::vector<Label> projective_injectives(const Workspace& ws) {
  std::set<Label> projective;
  for (int v = 1; v <= ws.n(); ++v) projective.insert(ws.canonical(Label::projective(v)));
  std::vector<Label> out;
  for (int v = 1; v <= ws.n(); ++v) {
    const Label i = ws.canonical(Label::injective(v));
    if (projective.count(i)) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TiltingPoset enumerate_tilting(const Workspace& ws) {
  if (ws.algebra().kind() != AlgebraKind::B && ws.algebra().kind() != AlgebraKind::C)
    throw UnsupportedKind("tilting enumeration needs kind B or C");
  const std::vector<Label> pi = projective_injectives(ws);
  const std::size_t n = static_cast<std::size_t>(ws.n());
  if (pi.size() > n) throw Error("more projective-injectives than vertices");
  const std::size_t slots = n - pi.size();

  std::vector<Label> candidates;
  for (const auto& e : ws.catalog().entries()) {
    if (std::binary_search(pi.begin(), pi.end(), e.label)) continue;
    if (ws.pd(e.label).finite() && ws.ext_self_orthogonal(e.label)) candidates.push_back(e.label);
  }
  auto orthogonal = [&](const Label& a, const Label& b) {
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      const std::size_t d = ws.pd(x).value;
      const auto e = ws.ext(x, y, d);
      for (std::size_t k = 1; k <= d; ++k)
        if (e[k] != 0) return false;
    }
    return true;
  };

  TiltingPoset poset;
  std::vector<Label> chosen;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == slots) {
      TiltingModule t = pi;
      t.insert(t.end(), chosen.begin(), chosen.end());
      std::sort(t.begin(), t.end());
      if (is_generalized_tilting(ws, t)) poset.members.push_back(std::move(t));
      return;
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
      bool ok = true;
      for (const auto& prev : chosen) ok = ok && orthogonal(prev, candidates[c]);
      if (!ok) continue;
      chosen.push_back(candidates[c]);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(poset.members.begin(), poset.members.end());
  return poset;
}

void hasse_edges(const Workspace& ws, TiltingPoset& poset) {
  poset.edges.clear();
  poset.chain.reset();
  const auto& members = poset.members;
  // Some 0 -> from -> M' -> to -> 0 with M' in add(common); returns M' summands.
  auto exchange = [&](const Label& from, const Label& to,
                      const std::vector<Label>& common) -> std::optional<std::vector<Label>> {
    const Representation& x = ws.module(from);
    Approximation a = minimal_left_approximation(ws, x, common);
    if (!is_injective(a.map, x)) return std::nullopt;
    if (ws.labels_of(cokernel(a.map, a.target).module) != std::vector<Label>{to}) return std::nullopt;
    return ws.labels_of(a.target);
  };
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      std::vector<Label> common, only_a, only_b;
      std::set_intersection(members[a].begin(), members[a].end(), members[b].begin(), members[b].end(),
                            std::back_inserter(common));
      std::set_difference(members[a].begin(), members[a].end(), members[b].begin(), members[b].end(),
                          std::back_inserter(only_a));
      std::set_difference(members[b].begin(), members[b].end(), members[a].begin(), members[a].end(),
                          std::back_inserter(only_b));
      if (only_a.size() != 1 || only_b.size() != 1) continue;
      if (auto mid = exchange(only_a[0], only_b[0], common))
        poset.edges.push_back({a, b, only_a[0], only_b[0], std::move(*mid)});
      else if (auto mid2 = exchange(only_b[0], only_a[0], common))
        poset.edges.push_back({b, a, only_b[0], only_a[0], std::move(*mid2)});
    }

  const std::size_t v = members.size();
  if (v == 0 || poset.edges.size() + 1 != v) return;
  std::vector<std::optional<std::size_t>> up(v);  // next larger member
  std::vector<int> down_count(v, 0);
  for (const auto& e : poset.edges) {
    if (up[e.smaller]) return;
    up[e.smaller] = e.larger;
    ++down_count[e.larger];
  }
  std::optional<std::size_t> bottom;
  for (std::size_t i = 0; i < v; ++i) {
    if (down_count[i] > 1) return;
    if (down_count[i] == 0) {
      if (bottom) return;
      bottom = i;
    }
  }
  std::vector<std::size_t> chain{*bottom};
  while (up[chain.back()]) chain.push_back(*up[chain.back()]);
  if (chain.size() == v) poset.chain = std::move(chain);
}

std::vector<Label> distinguishing_summands(const Workspace& ws, const TiltingModule& t) {
  const auto pi = projective_injectives(ws);
  std::vector<Label> out;
  for (const auto& l : t)
    if (!std::binary_search(pi.begin(), pi.end(), l)) out.push_back(l);
  return out;
}

std::string node_name(const Workspace& ws, const TiltingModule& t) {
  std::string s;
  for (const auto& l : distinguishing_summands(ws, t)) s += (s.empty() ? "" : "+") + display_name(ws.algebra(), l);
  return s;
}

std::string to_dot(const Workspace& ws, const TiltingPoset& poset) {
  std::ostringstream out;
  out << "graph \"" << ws.algebra().descriptor() << "\" {\n";
  std::vector<std::string> names;
  for (const auto& t : poset.members) {
    names.push_back(node_name(ws, t));
    out << "  \"" << names.back() << "\";\n";
  }
  for (const auto& e : poset.edges) out << "  \"" << names[e.larger] << "\" -- \"" << names[e.smaller] << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zzq
