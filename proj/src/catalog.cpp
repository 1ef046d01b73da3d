#include "zzq/catalog.hpp"

#include <algorithm>

#include "zzq/error.hpp"
#include "zzq/hom.hpp"
#include "zzq/projective.hpp"

namespace zzq {

namespace {

Representation simple_module(const AlgebraPtr& algebra, int v) {
  const Algebra& alg = *algebra;
  std::vector<std::size_t> dims(static_cast<std::size_t>(alg.vertex_count()), 0);
  dims[v] = 1;
  std::vector<Mat> maps;
  for (const auto& a : alg.arrows()) maps.emplace_back(alg.field(), dims[a.target], dims[a.source]);
  return Representation(algebra, std::move(dims), std::move(maps));
}

/// String module on [i,j], 0-based; the top alternates starting at i or i+1.
Representation string_module(const AlgebraPtr& algebra, int i, int j, bool i_in_top) {
  const Algebra& alg = *algebra;
  const int n = alg.vertex_count();
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  for (int v = i; v <= j; ++v) dims[v] = 1;
  std::vector<Mat> maps;
  for (const auto& a : alg.arrows()) maps.emplace_back(alg.field(), dims[a.target], dims[a.source]);
  auto in_top = [&](int v) { return ((v - i) % 2 == 0) == i_in_top; };
  for (int v = i; v < j; ++v) {
    // edge v -- v+1: arrow a (v -> v+1) if v is in the top, else b (v+1 -> v)
    const int arrow = in_top(v) ? alg.arrow_a(v + 1) : alg.arrow_b(v + 1);
    maps[arrow](0, 0) = 1;
  }
  return Representation(algebra, std::move(dims), std::move(maps));
}

}  // namespace

Representation canonical_module(const AlgebraPtr& algebra, const Label& label) {
  validate_label(*algebra, label);
  const int i = label.i - 1, j = label.j - 1;
  switch (label.family) {
    case Family::L:
      return simple_module(algebra, i);
    case Family::P:
      return indecomposable_projective(algebra, i);
    case Family::I:
      return dual_star(indecomposable_projective(algebra, i));
    case Family::M:
      return string_module(algebra, i, j, false);
    case Family::W:
      return string_module(algebra, i, j, true);
    case Family::N:
      return string_module(algebra, i, j, false);
    case Family::S:
      return string_module(algebra, i, j, true);
    case Family::Delta:
      return i == 0 ? simple_module(algebra, 0) : string_module(algebra, i - 1, i, false);
    case Family::Nabla:
      return i == 0 ? simple_module(algebra, 0) : string_module(algebra, i - 1, i, true);
    case Family::T:
      return i == 0 ? simple_module(algebra, 0) : indecomposable_projective(algebra, i - 1);
  }
  throw InvalidLabel("unknown label family");
}

std::vector<Label> catalog_labels(const Algebra& algebra) {
  if (!algebra.is_type_a()) throw UnsupportedKind("catalog needs kind A, B or C");
  const int n = algebra.vertex_count();
  std::vector<Label> out;
  for (int v = 1; v <= n; ++v) out.push_back(Label::simple(v));
  for (int v = 1; v <= n; ++v) {
    if (v == n && algebra.kind() != AlgebraKind::A) continue;  // P(n) = N(n-1,n)
    if (v == 1 && algebra.kind() == AlgebraKind::C) continue;  // P(1) = S(1,2)
    out.push_back(Label::projective(v));
  }
  for (Family f : {Family::M, Family::N, Family::W, Family::S})
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const bool same = (j - i) % 2 == 0;
        if (same == (f == Family::M || f == Family::W)) out.push_back(Label::string(f, i, j));
      }
  std::sort(out.begin(), out.end());
  return out;
}

Catalog::Catalog(AlgebraPtr algebra, SearchOptions opts) : algebra_(std::move(algebra)), opts_(opts) {
  for (const Label& label : catalog_labels(*algebra_)) {
    Representation m = canonical_module(algebra_, label);
    auto cert = local_certificate(m, opts_);
    if (!cert) throw Error("catalog module " + label.str() + " failed the indecomposability certificate");
    auto top = top_dims(m);
    entries_.push_back({label, std::move(m), std::move(*cert), std::move(top)});
  }
}

const CatalogEntry* Catalog::find(const Label& label) const {
  for (const auto& e : entries_)
    if (e.label == label) return &e;
  return nullptr;
}

std::optional<Label> Catalog::identify(const Representation& m) const {
  if (m.is_zero()) return std::nullopt;
  const auto tops = top_dims(m);
  for (const auto& e : entries_) {
    if (e.module.dims() != m.dims() || e.top != tops) continue;
    if (is_isomorphic_local(e.module, e.certificate, m)) return e.label;
  }
  return std::nullopt;
}

Label Catalog::canonical(const Label& label) const {
  if (find(label)) return label;
  auto id = identify(canonical_module(algebra_, label));
  if (!id) throw Error(label.str() + " has no catalog counterpart");
  return *id;
}

std::vector<Label> Catalog::decompose_labels(const Representation& m) const {
  std::vector<Label> out;
  for (const auto& part : decompose(m, opts_)) {
    auto id = identify(part);
    if (!id) throw Error("indecomposable summand outside the catalog");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zzq
