#include <doctest.h>

#include <algorithm>
#include <set>

#include "zzq/catalog.hpp"
#include "zzq/hom.hpp"
#include "zzq/tilting.hpp"
#include "zzq/workspace.hpp"

using namespace zzq;

namespace {

Label lab(const std::string& s) { return parse_label(s); }

std::vector<Label> labels(std::initializer_list<const char*> names) {
  std::vector<Label> out;
  for (auto s : names) out.push_back(parse_label(s));
  return out;
}

std::vector<Representation> modules(const Workspace& ws, const std::vector<Label>& t) {
  std::vector<Representation> out;
  for (const auto& l : t) out.push_back(ws.module(ws.canonical(l)));
  return out;
}

/// Coresolution of every P(v) by add(T) using the non-minimal approximation
/// and splitting off summands already in add(T).
bool oracle_coresolves(const Workspace& ws, const std::vector<Label>& t, std::size_t bound) {
  const std::set<Label> in_t(t.begin(), t.end());
  const auto t_modules = modules(ws, t);
  std::vector<std::pair<Label, std::size_t>> work;
  for (int v = 1; v <= ws.n(); ++v) work.emplace_back(ws.canonical(Label::projective(v)), 0);
  while (!work.empty()) {
    auto [l, depth] = work.back();
    work.pop_back();
    if (in_t.count(l)) continue;
    if (depth >= bound) return false;
    const Representation& x = ws.module(l);
    const Approximation a = left_add_approximation(x, t_modules);
    if (!is_injective(a.map, x)) return false;
    for (const auto& c : ws.labels_of(cokernel(a.map, a.target).module)) work.emplace_back(c, depth + 1);
  }
  return true;
}

/// Tilting by the three defining conditions, with the coresolution done by the oracle above.
bool oracle_tilting(const Workspace& ws, const std::vector<Label>& t) {
  std::size_t max_pd = 0;
  for (const auto& l : t) {
    if (!ws.pd(l).finite()) return false;
    max_pd = std::max(max_pd, ws.pd(l).value);
  }
  for (const auto& x : t)
    for (const auto& y : t)
      for (std::size_t k = 1; k <= max_pd; ++k)
        if (ws.ext_at(x, y, k) != 0) return false;
  return oracle_coresolves(ws, t, 2 * static_cast<std::size_t>(ws.n()));
}

/// All n-element subsets of the catalog that pass the oracle.
std::set<TiltingModule> brute_force_tilting(const Workspace& ws) {
  std::vector<Label> all;
  for (const auto& e : ws.catalog().entries()) all.push_back(e.label);
  const std::size_t n = static_cast<std::size_t>(ws.n());
  std::set<TiltingModule> out;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    TiltingModule t;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) t.push_back(all[i]);
    if (oracle_tilting(ws, t)) out.insert(t);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<std::string> chain_names(const Workspace& ws, const TiltingPoset& poset) {
  std::vector<std::string> out;
  for (auto i : *poset.chain) out.push_back(node_name(ws, poset.members[i]));
  return out;
}

}  // namespace

TEST_CASE("left approximations") {
  Workspace ws(AlgebraKind::B, 3);
  const auto proj = labels({"P(1)", "P(2)"});
  const auto& p1 = ws.module(lab("P(1)"));
  const Approximation split = minimal_left_approximation(ws, p1, proj);
  CHECK(split.summands == std::vector<std::size_t>{0});
  CHECK(is_isomorphism(split.map, p1, split.target));
  CHECK(is_injective(left_add_approximation(p1, modules(ws, proj)).map, p1));

  const auto& d3 = ws.module(lab("Delta(3)"));
  const Approximation a = minimal_left_approximation(ws, d3, proj);
  CHECK(a.summands == std::vector<std::size_t>{1});
  CHECK(is_injective(a.map, d3));
  CHECK(ws.catalog().identify(cokernel(a.map, a.target).module) == lab("N(1,2)"));

  const auto all_proj = labels({"P(1)", "P(2)", "N(2,3)"});
  const auto& l3 = ws.module(lab("L(3)"));
  CHECK_FALSE(is_injective(minimal_left_approximation(ws, l3, all_proj).map, l3));
  CHECK_FALSE(is_injective(left_add_approximation(l3, modules(ws, all_proj)).map, l3));

  // universality: every map into a T summand factors through the approximation
  for (const auto& x : ws.catalog().entries()) {
    const Approximation m = minimal_left_approximation(ws, x.module, all_proj);
    for (const auto& t : all_proj) {
      const auto& tm = ws.module(t);
      const HomSpace through = hom_basis(m.target, tm);
      std::vector<Morphism> composites;
      for (const auto& g : through.basis) composites.push_back(compose(g, m.map));
      std::vector<Vec> cols;
      for (const auto& c : composites) cols.push_back(flatten(c));
      const std::size_t reach = cols.empty() ? 0 : rank(Mat::from_columns(ws.algebra().field(), cols[0].size(), cols));
      CHECK(reach == hom_dim(x.module, tm));
    }
  }
}

TEST_CASE("coresolutions of the regular module") {
  Workspace b4(AlgebraKind::B, 4);
  CHECK(coresolves_regular(b4, labels({"P(1)", "P(2)", "P(3)", "P(4)"}), 0));
  CHECK(coresolves_regular(b4, labels({"P(1)", "P(2)", "P(3)", "Delta(4)"}), 8));
  CHECK(coresolves_regular(b4, labels({"P(1)", "P(2)", "P(3)", "Delta(3)"}), 8));
  Workspace c4(AlgebraKind::C, 4);
  CHECK(coresolves_regular(c4, labels({"P(2)", "P(3)", "S(2,3)", "N(1,2)"}), 8));
  CHECK_FALSE(coresolves_regular(c4, labels({"P(2)", "P(3)", "S(2,3)", "N(1,2)"}), 1));
}

TEST_CASE("tilting examples") {
  Workspace b4(AlgebraKind::B, 4);
  CHECK(is_generalized_tilting(b4, labels({"P(1)", "P(2)", "P(3)", "P(4)"})));
  CHECK(is_generalized_tilting(b4, labels({"P(1)", "P(2)", "P(3)", "Nabla(4)"})));
  CHECK_FALSE(is_generalized_tilting(b4, labels({"P(1)", "P(2)", "P(3)", "L(2)"})));
  CHECK(b4.ext_at(lab("L(2)"), lab("L(2)"), 2) > 0);
  CHECK(projective_injectives(b4) == labels({"P(1)", "P(2)", "P(3)"}));
  Workspace c4(AlgebraKind::C, 4);
  CHECK(projective_injectives(c4) == labels({"P(2)", "P(3)"}));
}

TEST_CASE("enumeration counts") {
  for (int n = 2; n <= 6; ++n) {
    Workspace b(AlgebraKind::B, n);
    const auto poset = enumerate_tilting(b);
    CHECK(poset.members.size() == std::size_t(2 * n - 1));
    const auto pi = projective_injectives(b);
    std::set<Label> xs;
    for (const auto& t : poset.members) {
      CHECK(t.size() == std::size_t(n));
      CHECK(std::includes(t.begin(), t.end(), pi.begin(), pi.end()));
      const auto d = distinguishing_summands(b, t);
      REQUIRE(d.size() == 1);
      xs.insert(d[0]);
    }
    std::set<Label> dset;
    for (int i = 1; i <= n; ++i) {
      dset.insert(b.canonical(Label::delta(i)));
      dset.insert(b.canonical(Label::nabla(i)));
    }
    CHECK(xs == dset);
  }
  for (int n = 2; n <= 6; ++n) {
    Workspace c(AlgebraKind::C, n);
    const auto poset = enumerate_tilting(c);
    CHECK(poset.members.size() == std::size_t((n - 1) * (n - 1)));
    if (n < 3) continue;
    std::set<TiltingModule> expected;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        TiltingModule t;
        for (int v = 2; v < n; ++v) t.push_back(Label::projective(v));
        t.push_back(Label::string(Family::S, i, i + 1));
        t.push_back(Label::string(Family::N, j, j + 1));
        std::sort(t.begin(), t.end());
        expected.insert(t);
      }
    CHECK(std::set<TiltingModule>(poset.members.begin(), poset.members.end()) == expected);
  }
}

TEST_CASE("enumeration agrees with brute force over all n-subsets") {
  for (auto [kind, n] : {std::pair{AlgebraKind::B, 2}, {AlgebraKind::B, 3}, {AlgebraKind::C, 3}}) {
    Workspace ws(kind, n);
    const auto poset = enumerate_tilting(ws);
    CAPTURE(ws.algebra().descriptor());
    CHECK(std::set<TiltingModule>(poset.members.begin(), poset.members.end()) == brute_force_tilting(ws));
  }
  Workspace b2(AlgebraKind::B, 2);
  CHECK(enumerate_tilting(b2).members.size() == 3);
}

TEST_CASE("exchange graph") {
  Workspace b3(AlgebraKind::B, 3);
  auto poset = enumerate_tilting(b3);
  hasse_edges(b3, poset);
  CHECK(poset.edges.size() == 4);
  REQUIRE(poset.chain.has_value());
  CHECK(chain_names(b3, poset) ==
        std::vector<std::string>{"Nabla(3)", "Nabla(2)", "L(1)", "Delta(2)", "Delta(3)"});
  bool delta_edge = false, cross_edge = false;
  for (const auto& e : poset.edges) {
    if (e.x == b3.canonical(lab("Delta(3)")) && e.y == b3.canonical(lab("Delta(2)"))) {
      delta_edge = true;
      CHECK(e.middle == labels({"P(2)"}));
    }
    const std::set<Label> ends{e.x, e.y};
    if (ends == std::set<Label>{b3.canonical(lab("Delta(3)")), b3.canonical(lab("Nabla(3)"))}) cross_edge = true;
  }
  CHECK(delta_edge);
  CHECK_FALSE(cross_edge);

  const std::string dot = to_dot(b3, poset);
  CHECK(dot.find("\"Delta(3)\" -- \"Delta(2)\"") != std::string::npos);
  CHECK(dot.rfind("graph \"B_3\"", 0) == 0);

  for (int n = 2; n <= 6; ++n) {
    Workspace b(AlgebraKind::B, n);
    auto p = enumerate_tilting(b);
    hasse_edges(b, p);
    CHECK(p.edges.size() == std::size_t(2 * n - 2));
    REQUIRE(p.chain.has_value());
    const auto names = chain_names(b, p);
    CHECK(names.front() == "Nabla(" + std::to_string(n) + ")");
    CHECK(names.back() == "Delta(" + std::to_string(n) + ")");
    // Delta(i+1) -> P(i) -> Delta(i)
    for (int i = 2; i < n; ++i) {
      bool found = false;
      for (const auto& e : p.edges)
        found = found || (e.x == b.canonical(Label::delta(i + 1)) && e.y == b.canonical(Label::delta(i)) &&
                          e.middle == std::vector<Label>{Label::projective(i)});
      CHECK(found);
    }
  }
}

TEST_CASE("duality permutes the tilting modules of B_n") {
  for (int n = 2; n <= 5; ++n) {
    Workspace b(AlgebraKind::B, n);
    const auto poset = enumerate_tilting(b);
    const std::set<TiltingModule> members(poset.members.begin(), poset.members.end());
    for (const auto& t : poset.members) {
      TiltingModule dual;
      for (const auto& l : t) dual.push_back(*b.catalog().identify(dual_star(b.module(l))));
      std::sort(dual.begin(), dual.end());
      CHECK(members.count(dual) == 1);
      const auto x = distinguishing_summands(b, t)[0];
      const auto dx = distinguishing_summands(b, dual)[0];
      for (int i = 1; i <= n; ++i)
        if (x == b.canonical(Label::delta(i))) CHECK(dx == b.canonical(Label::nabla(i)));
    }
  }
}
