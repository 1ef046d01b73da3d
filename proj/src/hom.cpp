#include "zzq/hom.hpp"

#include <random>

#include "zzq/error.hpp"

namespace zzq {

HomSpace hom_basis(const Representation& source, const Representation& target) {
  if (source.algebra_ptr() != target.algebra_ptr()) throw ContractViolation("hom_basis: different algebras");
  const Field& f = source.field();
  const int n = source.vertex_count();
  // unknown f_v is dim_target(v) x dim_source(v), row-major, stacked by vertex
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + target.dim(v) * source.dim(v);
  const std::size_t unknowns = offset[n];

  const auto& arrows = source.algebra().arrows();
  std::size_t equations = 0;
  for (const auto& arr : arrows) equations += target.dim(arr.target) * source.dim(arr.source);

  Mat system(f, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int s = arrows[a].source, t = arrows[a].target;
    const Mat& ya = target.map(static_cast<int>(a));
    const Mat& xa = source.map(static_cast<int>(a));
    const std::size_t ds = source.dim(s), dt = source.dim(t);
    const std::size_t es = target.dim(s), et = target.dim(t);
    // (Y_a f_s - f_t X_a)[r, c] = 0
    for (std::size_t r = 0; r < et; ++r) {
      for (std::size_t c = 0; c < ds; ++c, ++row) {
        for (std::size_t k = 0; k < es; ++k) {
          const Scalar y = ya(r, k);
          if (y != 0) {
            Scalar& cell = system(row, offset[s] + k * ds + c);
            cell = f.add(cell, y);
          }
        }
        for (std::size_t k = 0; k < dt; ++k) {
          const Scalar x = xa(k, c);
          if (x != 0) {
            Scalar& cell = system(row, offset[t] + r * dt + k);
            cell = f.sub(cell, x);
          }
        }
      }
    }
  }

  HomSpace space;
  for (const auto& vec : kernel_basis(system)) {
    Morphism m;
    for (int v = 0; v < n; ++v) {
      Mat c(f, target.dim(v), source.dim(v));
      for (std::size_t i = 0; i < c.rows() * c.cols(); ++i) c(i / c.cols(), i % c.cols()) = vec[offset[v] + i];
      m.components.push_back(std::move(c));
    }
    space.basis.push_back(std::move(m));
  }
  return space;
}

std::size_t hom_dim(const Representation& source, const Representation& target) {
  return hom_basis(source, target).dim();
}

Morphism combine(const HomSpace& space, const Representation& source, const Representation& target,
                 const std::vector<Scalar>& coeffs) {
  Morphism out = zero_morphism(source, target);
  for (std::size_t i = 0; i < space.basis.size(); ++i)
    if (coeffs.at(i) != 0) out = add(out, scale(space.basis[i], coeffs[i]));
  return out;
}

bool visit_homs(const HomSpace& space, const Representation& source, const Representation& target,
                std::uint64_t bound, int samples, std::uint64_t seed,
                const std::function<bool(const Morphism&)>& visit) {
  const std::uint32_t p = source.field().p();
  const std::size_t d = space.dim();
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < d && small; ++i) {
    total *= p;
    small = total <= bound;
  }
  if (small) {
    std::vector<Scalar> c(d, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (auto& x : c) {
        x = static_cast<Scalar>(rest % p);
        rest /= p;
      }
      if (visit(combine(space, source, target, c))) break;
    }
    return true;
  }
  for (const auto& f : space.basis)
    if (visit(f)) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<Scalar> c(d);
  for (int t = 0; t < samples; ++t) {
    for (auto& x : c) x = dist(rng);
    if (visit(combine(space, source, target, c))) break;
  }
  return false;
}

namespace {

std::vector<Mat> radical_bases(const Representation& m) {
  const int n = m.vertex_count();
  std::vector<Mat> bases;
  for (int v = 0; v < n; ++v) bases.emplace_back(m.field(), m.dim(v), 0);
  const auto& arrows = m.algebra().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    bases[arrows[a].target] = hstack(bases[arrows[a].target], m.map(static_cast<int>(a)));
  for (auto& b : bases) b = column_basis(b);
  return bases;
}

std::vector<Mat> socle_bases(const Representation& m) {
  const int n = m.vertex_count();
  std::vector<Mat> stacked;
  for (int v = 0; v < n; ++v) stacked.emplace_back(m.field(), 0, m.dim(v));
  const auto& arrows = m.algebra().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    stacked[arrows[a].source] = vstack(stacked[arrows[a].source], m.map(static_cast<int>(a)));
  std::vector<Mat> bases;
  for (auto& s : stacked) bases.push_back(kernel_matrix(s));
  return bases;
}

}  // namespace

Embedded radical(const Representation& m) { return submodule(m, radical_bases(m)); }

Embedded socle(const Representation& m) { return submodule(m, socle_bases(m)); }

Layers layers(const Representation& m) {
  auto rad = radical_bases(m);
  Embedded r = submodule(m, rad);
  Projected t = quotient(m, rad);
  return {std::move(r), std::move(t), socle(m)};
}

std::vector<std::size_t> top_dims(const Representation& m) {
  auto rad = radical_bases(m);
  std::vector<std::size_t> out;
  for (int v = 0; v < m.vertex_count(); ++v) out.push_back(m.dim(v) - rad[v].cols());
  return out;
}

std::vector<std::size_t> socle_dims(const Representation& m) {
  std::vector<std::size_t> out;
  for (const auto& b : socle_bases(m)) out.push_back(b.cols());
  return out;
}

}  // namespace zzq
