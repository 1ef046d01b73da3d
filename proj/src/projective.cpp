#include "zzq/projective.hpp"

#include "zzq/error.hpp"
#include "zzq/hom.hpp"

namespace zzq {

namespace {

std::vector<int> paths_from(const Algebra& alg, int v, int w) {
  std::vector<int> out;
  for (std::size_t b = 0; b < alg.dimension(); ++b)
    if (alg.basis()[b].source == v && alg.basis()[b].target == w) out.push_back(static_cast<int>(b));
  return out;
}

}  // namespace

ProjectiveSum projective_sum(const AlgebraPtr& algebra, std::vector<int> tops) {
  const Algebra& alg = *algebra;
  const int n = alg.vertex_count();
  ProjectiveSum p;
  p.tops = std::move(tops);
  p.slots.resize(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w)
    for (std::size_t k = 0; k < p.tops.size(); ++k)
      for (int path : paths_from(alg, p.tops[k], w)) p.slots[w].emplace_back(static_cast<int>(k), path);

  std::vector<std::size_t> dims;
  for (int w = 0; w < n; ++w) dims.push_back(p.slots[w].size());
  std::vector<Mat> maps;
  for (std::size_t idx = 0; idx < alg.arrows().size(); ++idx) {
    const Arrow& arrow = alg.arrows()[idx];
    const int a = alg.arrow_element(static_cast<int>(idx));
    Mat m(alg.field(), dims[arrow.target], dims[arrow.source]);
    const auto& from = p.slots[arrow.source];
    const auto& to = p.slots[arrow.target];
    for (std::size_t c = 0; c < from.size(); ++c) {
      const int prod = alg.product(from[c].second, a);
      if (prod < 0) continue;
      for (std::size_t r = 0; r < to.size(); ++r)
        if (to[r].first == from[c].first && to[r].second == prod) m(r, c) = 1;
    }
    maps.push_back(std::move(m));
  }
  p.module = Representation(algebra, std::move(dims), std::move(maps));
  return p;
}

std::size_t ProjectiveSum::generator_slot(std::size_t k) const {
  const int v = tops.at(k);
  const int e = module.algebra().idempotent(v);
  const auto& s = slots[v];
  for (std::size_t r = 0; r < s.size(); ++r)
    if (s[r].first == static_cast<int>(k) && s[r].second == e) return r;
  throw ContractViolation("projective sum without generator slot");
}

Representation indecomposable_projective(const AlgebraPtr& algebra, int v) {
  if (v < 0 || v >= algebra->vertex_count()) throw InvalidInput("vertex out of range");
  return projective_sum(algebra, {v}).module;
}

Morphism morphism_from_generators(const ProjectiveSum& p, const Representation& y, const std::vector<Vec>& gens) {
  if (gens.size() != p.size()) throw ContractViolation("morphism_from_generators: one generator per summand");
  Morphism f = zero_morphism(p.module, y);
  const int n = y.vertex_count();
  for (int w = 0; w < n; ++w) {
    Mat& c = f.components[w];
    for (std::size_t col = 0; col < p.slots[w].size(); ++col) {
      const auto [k, path] = p.slots[w][col];
      const Vec image = y.path_action(path).apply(gens[k]);
      for (std::size_t r = 0; r < image.size(); ++r) c(r, col) = image[r];
    }
  }
  return f;
}

Cover projective_cover(const Representation& m) {
  const Embedded rad = radical(m);
  std::vector<int> tops;
  std::vector<Vec> gens;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const Mat extra = complement_columns(column_basis(rad.inclusion.at(v)));
    for (std::size_t c = 0; c < extra.cols(); ++c) {
      tops.push_back(v);
      gens.push_back(extra.column(c));
    }
  }
  ProjectiveSum p = projective_sum(m.algebra_ptr(), std::move(tops));
  Morphism epi = morphism_from_generators(p, m, gens);
  return {std::move(p), std::move(epi)};
}

Envelope injective_envelope(const Representation& m) {
  Cover c = projective_cover(dual_star(m));
  return {dual_star(c.projective.module), dual_star(c.epi)};
}

}  // namespace zzq
