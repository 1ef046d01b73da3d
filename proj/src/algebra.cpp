#include "zzq/algebra.hpp"

#include <algorithm>
#include <set>

#include "zzq/error.hpp"

namespace zzq {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::ZigZag: return "zigzag";
    case AlgebraKind::A: return "A";
    case AlgebraKind::B: return "B";
    case AlgebraKind::C: return "C";
  }
  return "?";
}

AlgebraKind parse_kind(const std::string& text) {
  if (text == "A" || text == "a") return AlgebraKind::A;
  if (text == "B" || text == "b") return AlgebraKind::B;
  if (text == "C" || text == "c") return AlgebraKind::C;
  if (text == "zigzag") return AlgebraKind::ZigZag;
  throw InvalidInput("unknown algebra kind '" + text + "' (expected A, B or C)");
}

Graph Graph::path(int n) {
  Graph g;
  g.vertex_count = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

namespace {

void validate_graph(const Graph& g) {
  if (g.vertex_count < 1) throw InvalidInput("graph must have at least one vertex");
  if (g.edges.empty()) throw InvalidInput("graph must have at least one edge");
  std::set<std::pair<int, int>> seen;
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count));
  for (int v = 0; v < g.vertex_count; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
      throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("graph must not contain loops");
    if (!seen.insert(std::minmax(u, v)).second) throw InvalidInput("graph must not contain repeated edges");
    parent[find(u)] = find(v);
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (find(v) != find(0)) throw InvalidInput("graph must be connected");
}

}  // namespace

Algebra::Algebra(Graph graph, Field field, AlgebraKind kind, std::vector<bool> killed_loops)
    : field_(field), kind_(kind), graph_(std::move(graph)) {
  const int n = graph_.vertex_count;
  const bool line = kind_ != AlgebraKind::ZigZag;
  for (std::size_t k = 0; k < graph_.edges.size(); ++k) {
    auto [u, v] = graph_.edges[k];
    if (u > v) std::swap(u, v);
    const int fwd = static_cast<int>(arrows_.size());
    std::string fwd_name, back_name;
    if (line) {
      fwd_name = "a" + std::to_string(u + 1);
      back_name = "b" + std::to_string(u + 1);
    } else {
      fwd_name = "x" + std::to_string(u + 1) + "_" + std::to_string(v + 1);
      back_name = "x" + std::to_string(v + 1) + "_" + std::to_string(u + 1);
    }
    arrows_.push_back({u, v, fwd + 1, fwd_name});
    arrows_.push_back({v, u, fwd, back_name});
  }

  idempotent_index_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    idempotent_index_[v] = static_cast<int>(basis_.size());
    basis_.push_back({v, v, {}, "e" + std::to_string(v + 1)});
  }
  arrow_index_.resize(arrows_.size());
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    arrow_index_[a] = static_cast<int>(basis_.size());
    basis_.push_back({arrows_[a].source, arrows_[a].target, {static_cast<int>(a)}, arrows_[a].name});
  }
  loop_index_.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (killed_loops[v]) continue;
    int first_out = -1;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].source == v) {
        first_out = static_cast<int>(a);
        break;
      }
    loop_index_[v] = static_cast<int>(basis_.size());
    basis_.push_back({v, v, {first_out, arrows_[first_out].reverse}, "c" + std::to_string(v + 1)});
  }

  const std::size_t d = basis_.size();
  table_.assign(d * d, -1);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      const auto& px = basis_[x];
      const auto& py = basis_[y];
      if (px.target != py.source) continue;
      int result = -1;
      if (px.arrows.empty()) {
        result = static_cast<int>(y);
      } else if (py.arrows.empty()) {
        result = static_cast<int>(x);
      } else if (px.arrows.size() + py.arrows.size() == 2) {
        // two arrows: a cycle collapses to c_v, anything else vanishes
        if (px.source == py.target) result = loop_index_[px.source];
      }
      table_[x * d + y] = result;
    }
  }
}

AlgebraPtr Algebra::zigzag(const Graph& graph, Field field) {
  validate_graph(graph);
  return AlgebraPtr(new Algebra(graph, field, AlgebraKind::ZigZag,
                                std::vector<bool>(static_cast<std::size_t>(graph.vertex_count), false)));
}

AlgebraPtr Algebra::leaf_quotient(int n, AlgebraKind kind, Field field) {
  if (n < 2) throw InvalidInput("leaf quotients need n >= 2, got " + std::to_string(n));
  if (kind == AlgebraKind::ZigZag) throw InvalidInput("leaf_quotient expects kind A, B or C");
  std::vector<bool> killed(static_cast<std::size_t>(n), false);
  if (kind == AlgebraKind::B || kind == AlgebraKind::C) killed[n - 1] = true;
  if (kind == AlgebraKind::C) killed[0] = true;
  return AlgebraPtr(new Algebra(Graph::path(n), field, kind, std::move(killed)));
}

int Algebra::arrow_a(int i) const {
  if (!is_type_a() || i < 1 || i >= vertex_count()) throw ContractViolation("arrow a_i out of range");
  return 2 * (i - 1);
}

int Algebra::arrow_b(int i) const {
  if (!is_type_a() || i < 1 || i >= vertex_count()) throw ContractViolation("arrow b_i out of range");
  return 2 * (i - 1) + 1;
}

AlgebraElement Algebra::basis_element(int i) const {
  AlgebraElement e = zero_element();
  e.at(static_cast<std::size_t>(i)) = 1;
  return e;
}

AlgebraElement Algebra::unit() const {
  AlgebraElement e = zero_element();
  for (int v = 0; v < vertex_count(); ++v) e[idempotent(v)] = 1;
  return e;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.size() != dimension() || y.size() != dimension())
    throw ContractViolation("algebra element has wrong length");
  AlgebraElement z = zero_element();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      const int k = product(static_cast<int>(i), static_cast<int>(j));
      if (k >= 0) z[k] = field_.add(z[k], field_.mul(x[i], y[j]));
    }
  }
  return z;
}

int Algebra::anti_automorphism_basis(int i) const {
  if (kind_ == AlgebraKind::ZigZag)
    throw UnsupportedKind("anti-automorphism is provided for A_n, B_n and C_n only");
  const auto& b = basis_.at(static_cast<std::size_t>(i));
  if (b.arrows.size() == 1) return arrow_index_[arrows_[b.arrows[0]].reverse];
  return i;
}

AlgebraElement Algebra::anti_automorphism(const AlgebraElement& x) const {
  AlgebraElement y = zero_element();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[anti_automorphism_basis(static_cast<int>(i))] = x[i];
  return y;
}

int Algebra::flip_arrow(int arrow) const {
  if (kind_ != AlgebraKind::C) throw UnsupportedKind("flip automorphism requires kind C");
  const int n = vertex_count();
  const int i = arrow / 2 + 1;  // 1-based edge index
  // a_i -> b_{n-i}, b_i -> a_{n-i}
  return arrow % 2 == 0 ? arrow_b(n - i) : arrow_a(n - i);
}

int Algebra::flip_basis(int i) const {
  if (kind_ != AlgebraKind::C) throw UnsupportedKind("flip automorphism requires kind C");
  const int n = vertex_count();
  const auto& b = basis_.at(static_cast<std::size_t>(i));
  if (b.arrows.empty()) return idempotent(n - 1 - b.source);
  if (b.arrows.size() == 1) return arrow_index_[flip_arrow(b.arrows[0])];
  return loop(n - 1 - b.source);
}

AlgebraElement Algebra::flip_automorphism(const AlgebraElement& x) const {
  AlgebraElement y = zero_element();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[flip_basis(static_cast<int>(i))] = x[i];
  return y;
}

std::string Algebra::descriptor() const {
  if (kind_ == AlgebraKind::ZigZag) return "zigzag(" + std::to_string(vertex_count()) + " vertices)";
  return to_string(kind_) + "_" + std::to_string(vertex_count());
}

}  // namespace zzq
