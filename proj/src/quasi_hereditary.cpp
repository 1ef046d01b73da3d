#include "zzq/quasi_hereditary.hpp"

#include <algorithm>
#include <numeric>

#include "zzq/catalog.hpp"
#include "zzq/error.hpp"
#include "zzq/hom.hpp"
#include "zzq/projective.hpp"

namespace zzq {

SimpleOrder natural_order(int n) {
  SimpleOrder o(static_cast<std::size_t>(n));
  std::iota(o.begin(), o.end(), 0);
  return o;
}

void validate_order(const SimpleOrder& order, int n) {
  SimpleOrder sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != natural_order(n)) throw InvalidInput("order must be a permutation of the vertices");
}

std::vector<StandardModule> standard_for_order(const AlgebraPtr& algebra, const SimpleOrder& order) {
  const int n = algebra->vertex_count();
  validate_order(order, n);
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rank[order[k]] = k;

  std::vector<StandardModule> out;
  for (int v = 0; v < n; ++v) {
    Representation p = indecomposable_projective(algebra, v);
    std::vector<Mat> gens;
    for (int w = 0; w < n; ++w)
      gens.push_back(rank[w] > rank[v] ? Mat::identity(algebra->field(), p.dim(w)) : Mat(algebra->field(), p.dim(w), 0));
    Embedded trace = generated_submodule(p, gens);
    Projected q = quotient(p, trace.inclusion.components);
    out.push_back({std::move(q.module), std::move(trace)});
  }
  return out;
}

namespace {

bool fits(const Representation& small, const Representation& big) {
  for (int v = 0; v < big.vertex_count(); ++v)
    if (small.dim(v) > big.dim(v)) return false;
  return true;
}

bool filtration_search(const Representation& m, const std::vector<Representation>& pieces, const SearchOptions& opts) {
  if (m.is_zero()) return true;
  // Try the pieces listed last first.
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    const Representation& d = *it;
    if (d.is_zero() || !fits(d, m)) continue;
    const HomSpace space = hom_basis(m, d);
    if (space.dim() == 0) continue;
    std::vector<Representation> kernels;
    bool found = false;
    const bool exhaustive =
        visit_homs(space, m, d, opts.exhaustive_bound, opts.random_tries, opts.seed, [&](const Morphism& f) {
          if (!is_surjective(f, d)) return false;
          Representation k = kernel(f, m).module;
          for (const auto& seen : kernels)
            if (is_isomorphic(seen, k, opts)) return false;
          kernels.push_back(k);
          found = filtration_search(k, pieces, opts);
          return found;
        });
    if (found) return true;
    if (!exhaustive) throw UndecidableDecomposition("filtration search exceeded the enumeration bound");
  }
  return false;
}

}  // namespace

bool has_delta_filtration(const Representation& m, const std::vector<Representation>& pieces,
                          const SearchOptions& opts) {
  return filtration_search(m, pieces, opts);
}

bool is_quasi_hereditary(const AlgebraPtr& algebra, const SimpleOrder& order, const SearchOptions& opts) {
  const int n = algebra->vertex_count();
  const auto deltas = standard_for_order(algebra, order);
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rank[order[k]] = k;
  for (int v = 0; v < n; ++v)
    if (deltas[v].module.dim(v) != 1) return false;
  for (int v = 0; v < n; ++v) {
    std::vector<Representation> above;
    for (int k = rank[v] + 1; k < n; ++k) above.push_back(deltas[order[k]].module);
    if (!has_delta_filtration(deltas[v].trace.module, above, opts)) return false;
  }
  return true;
}

Thm2Report thm2_hypothesis_report(const AlgebraPtr& algebra, const SearchOptions& opts) {
  const int n = algebra->vertex_count();
  Thm2Report report;
  std::vector<Representation> projectives, injectives;
  for (int v = 0; v < n; ++v) {
    projectives.push_back(indecomposable_projective(algebra, v));
    injectives.push_back(dual_star(projectives.back()));
  }
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (is_isomorphic(projectives[v], injectives[w], opts)) {
        report.projective_injective.push_back(v);
        break;
      }
  report.projective_injective_count = static_cast<int>(report.projective_injective.size());

  bool duality = true;
  for (const Label& label : catalog_labels(*algebra)) {
    const Representation m = canonical_module(algebra, label);
    const Representation back = dual_star(dual_star(m));
    duality = duality && back.dims() == m.dims() && back.maps() == m.maps();
    if (label.family == Family::L) duality = duality && is_isomorphic(dual_star(m), m, opts);
  }
  report.duality_ok = duality;
  report.order_ok = is_quasi_hereditary(algebra, natural_order(n), opts);
  return report;
}

}  // namespace zzq
