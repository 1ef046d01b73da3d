#include "zzq/decompose.hpp"

#include <random>

#include "zzq/error.hpp"

namespace zzq {

namespace {

/// f^d at each vertex, d the vertex dimension: the Fitting power.
Morphism fitting_power(const Morphism& f) {
  Morphism out;
  for (const auto& c : f.components) out.components.push_back(power(c, c.rows()));
  return out;
}

bool is_nilpotent(const Morphism& f) { return fitting_power(f).is_zero(); }

/// Fitting power of f - lambda when it is neither zero nor invertible.
std::optional<Morphism> splitting_power(const Morphism& f, std::size_t total) {
  auto try_shift = [&](Scalar lambda) -> std::optional<Morphism> {
    Morphism h = fitting_power(shift(f, lambda));
    const std::size_t r = h.rank();
    if (r > 0 && r < total) return h;
    return std::nullopt;
  };
  const auto eig = eigenvalues(f);
  for (Scalar lambda : eig)
    if (auto h = try_shift(lambda)) return h;
  return std::nullopt;
}

/// The unique lambda with f - lambda nilpotent, if any.
std::optional<Scalar> nilpotent_shift(const Morphism& f) {
  const auto eig = eigenvalues(f);
  if (eig.size() != 1) return std::nullopt;
  if (!is_nilpotent(shift(f, eig[0]))) return std::nullopt;
  return eig[0];
}

std::vector<Morphism> independent_subset(const std::vector<Morphism>& maps, const Field& field) {
  if (maps.empty()) return {};
  std::vector<Vec> cols;
  for (const auto& m : maps) cols.push_back(flatten(m));
  const Mat stacked = Mat::from_columns(field, cols.front().size(), cols);
  std::vector<Morphism> out;
  if (stacked.rows() == 0) return out;
  for (auto c : row_reduce(stacked).pivots) out.push_back(maps[c]);
  return out;
}

/// Every product of total_dim elements of span(u) vanishes.
bool spans_nilpotent_algebra(const std::vector<Morphism>& u, const Field& field, std::size_t total_dim) {
  std::vector<Morphism> layer = u;
  for (std::size_t step = 0; step <= total_dim; ++step) {
    if (layer.empty()) return true;
    std::vector<Morphism> next;
    for (const auto& a : layer)
      for (const auto& b : u) {
        Morphism ab = compose(a, b);
        if (!ab.is_zero()) next.push_back(std::move(ab));
      }
    layer = independent_subset(next, field);
  }
  return layer.empty();
}

struct Analysis {
  std::optional<LocalCertificate> certificate;
  std::optional<Morphism> splitting;  // Fitting power with proper kernel and image
};

std::vector<Scalar> random_coefficients(std::mt19937_64& rng, std::size_t count, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<Scalar> c(count);
  for (auto& x : c) x = dist(rng);
  return c;
}

std::uint64_t mix_seed(std::uint64_t seed, const Representation& m) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (auto d : m.dims()) h = (h ^ d) * 0x100000001b3ULL;
  return h;
}

/// Iterate over all coefficient vectors in GF(p)^count; returns false if the space exceeds the bound.
template <class Visit>
bool for_each_combination(std::size_t count, std::uint32_t p, std::uint64_t bound, Visit&& visit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < count; ++i) {
    total *= p;
    if (total > bound) return false;
  }
  std::vector<Scalar> c(count, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < count; ++i) {
      c[i] = static_cast<Scalar>(rest % p);
      rest /= p;
    }
    if (visit(c)) return true;
  }
  return true;
}

Analysis analyse(const Representation& m, const SearchOptions& opts) {
  const std::size_t total = m.total_dim();
  const HomSpace end = hom_basis(m, m);
  std::vector<Morphism> radical;
  bool all_local = true;
  for (const auto& f : end.basis) {
    if (auto h = splitting_power(f, total)) return {std::nullopt, std::move(h)};
    if (auto lambda = nilpotent_shift(f))
      radical.push_back(shift(f, *lambda));
    else
      all_local = false;
  }
  if (all_local) {
    auto basis = independent_subset(radical, m.field());
    if (basis.size() + 1 == end.dim() && spans_nilpotent_algebra(basis, m.field(), total))
      return {LocalCertificate{std::move(basis)}, std::nullopt};
  }

  std::mt19937_64 rng(mix_seed(opts.seed, m));
  for (int t = 0; t < opts.random_tries; ++t) {
    Morphism g = combine(end, m, m, random_coefficients(rng, end.dim(), m.field().p()));
    if (auto h = splitting_power(g, total)) return {std::nullopt, std::move(h)};
  }

  std::optional<Morphism> found;
  const bool enumerated = for_each_combination(end.dim(), m.field().p(), opts.exhaustive_bound, [&](const auto& c) {
    if (auto h = splitting_power(combine(end, m, m, c), total)) {
      found = std::move(h);
      return true;
    }
    return false;
  });
  if (found) return {std::nullopt, std::move(found)};
  // No endomorphism splits: indecomposable, but the residue field is larger than GF(p).
  if (enumerated) return {std::nullopt, std::nullopt};
  throw UndecidableDecomposition("could not certify or split a module of dimension " + std::to_string(total));
}

}  // namespace

std::vector<Scalar> eigenvalues(const Morphism& f) {
  std::vector<Scalar> out;
  if (f.components.empty()) return out;
  const Field& field = f.components.front().field();
  for (Scalar lambda = 0; lambda < field.p(); ++lambda) {
    for (const auto& c : f.components) {
      if (c.rows() == 0) continue;
      if (rank(c - Mat::identity(field, c.rows()).scaled(lambda)) < c.rows()) {
        out.push_back(lambda);
        break;
      }
    }
  }
  return out;
}

std::optional<LocalCertificate> local_certificate(const Representation& m, const SearchOptions& opts) {
  if (m.is_zero()) return std::nullopt;
  return analyse(m, opts).certificate;
}

std::vector<Summand> decompose_with_certificates(const Representation& m, const SearchOptions& opts) {
  std::vector<Summand> done;
  std::vector<Summand> work;
  if (!m.is_zero()) work.push_back({m, identity_morphism(m), std::nullopt});
  while (!work.empty()) {
    Summand cur = std::move(work.back());
    work.pop_back();
    Analysis a = analyse(cur.module, opts);
    if (!a.splitting) {
      cur.certificate = std::move(a.certificate);
      done.push_back(std::move(cur));
      continue;
    }
    std::vector<Mat> kernels, images;
    for (const auto& c : a.splitting->components) {
      kernels.push_back(kernel_matrix(c));
      images.push_back(column_basis(c));
    }
    for (const auto* bases : {&images, &kernels}) {
      Embedded part = submodule(cur.module, *bases);
      work.push_back({std::move(part.module), compose(cur.inclusion, part.inclusion), std::nullopt});
    }
  }
  return done;
}

std::vector<Representation> decompose(const Representation& m, const SearchOptions& opts) {
  std::vector<Representation> out;
  for (auto& s : decompose_with_certificates(m, opts)) out.push_back(std::move(s.module));
  return out;
}

bool is_indecomposable(const Representation& m, const SearchOptions& opts) {
  if (m.is_zero()) return false;
  return !analyse(m, opts).splitting.has_value();
}

bool is_isomorphic_local(const Representation& x, const LocalCertificate&, const Representation& y) {
  if (x.dims() != y.dims()) return false;
  const HomSpace there = hom_basis(x, y);
  if (there.dim() == 0) return false;
  const HomSpace back = hom_basis(y, x);
  for (const auto& f : there.basis)
    for (const auto& g : back.basis)
      if (compose(g, f).rank() == x.total_dim()) return true;
  return false;
}

namespace {

bool exhaustive_iso(const Representation& x, const Representation& y, const SearchOptions& opts) {
  const HomSpace there = hom_basis(x, y);
  bool found = false;
  const bool enumerated = for_each_combination(there.dim(), x.field().p(), opts.exhaustive_bound, [&](const auto& c) {
    found = is_injective(combine(there, x, y, c), x);
    return found;
  });
  if (!found && !enumerated) throw UndecidableIsomorphism("isomorphism search exceeded the exhaustive bound");
  return found;
}

}  // namespace

bool is_isomorphic(const Representation& x, const Representation& y, const SearchOptions& opts) {
  if (x.algebra_ptr() != y.algebra_ptr()) throw ContractViolation("is_isomorphic: different algebras");
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  if (top_dims(x) != top_dims(y) || socle_dims(x) != socle_dims(y)) return false;

  const HomSpace there = hom_basis(x, y);
  if (there.dim() == 0) return false;
  std::mt19937_64 rng(mix_seed(opts.seed, x));
  for (int t = 0; t < opts.random_tries; ++t) {
    if (is_injective(combine(there, x, y, random_coefficients(rng, there.dim(), x.field().p())), x)) return true;
  }

  auto xs = decompose_with_certificates(x, opts);
  auto ys = decompose_with_certificates(y, opts);
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const auto& a : xs) {
    bool matched = false;
    for (std::size_t k = 0; k < ys.size() && !matched; ++k) {
      if (used[k] || ys[k].module.dims() != a.module.dims()) continue;
      const bool iso = a.certificate ? is_isomorphic_local(a.module, *a.certificate, ys[k].module)
                                     : exhaustive_iso(a.module, ys[k].module, opts);
      if (iso) used[k] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace zzq
