#include "zzq/representation.hpp"

#include <numeric>

#include "zzq/error.hpp"

namespace zzq {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!algebra_) throw ContractViolation("representation without an algebra");
  if (dims_.size() != static_cast<std::size_t>(algebra_->vertex_count()))
    throw ContractViolation("dimension vector has wrong length");
  const auto& arrows = algebra_->arrows();
  if (maps_.size() != arrows.size()) throw ContractViolation("need exactly one matrix per arrow");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    if (maps_[a].rows() != dims_[arrows[a].target] || maps_[a].cols() != dims_[arrows[a].source])
      throw ContractViolation("arrow matrix " + arrows[a].name + " has the wrong shape");
    if (maps_[a].field() != algebra_->field()) throw ContractViolation("arrow matrix over a different field");
  }
}

Representation Representation::zero(AlgebraPtr algebra) {
  const auto n = static_cast<std::size_t>(algebra->vertex_count());
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < algebra->arrows().size(); ++a) maps.emplace_back(algebra->field(), 0, 0);
  return Representation(std::move(algebra), std::vector<std::size_t>(n, 0), std::move(maps));
}

std::size_t Representation::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Mat Representation::path_action(int basis_index) const {
  const auto& b = algebra_->basis().at(static_cast<std::size_t>(basis_index));
  Mat m = Mat::identity(field(), dims_[b.source]);
  for (int a : b.arrows) m = maps_[a] * m;
  return m;
}

bool Representation::satisfies_relations() const {
  const auto& arrows = algebra_->arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    for (std::size_t b = 0; b < arrows.size(); ++b) {
      if (arrows[a].target != arrows[b].source) continue;
      const Mat two = maps_[b] * maps_[a];
      const int prod = algebra_->product(algebra_->arrow_element(static_cast<int>(a)),
                                         algebra_->arrow_element(static_cast<int>(b)));
      if (prod < 0) {
        if (!two.is_zero()) return false;
      } else if (!(two == path_action(prod))) {
        return false;
      }
      for (std::size_t c = 0; c < arrows.size(); ++c) {
        if (arrows[b].target != arrows[c].source) continue;
        if (!(maps_[c] * two).is_zero()) return false;
      }
    }
  }
  return true;
}

std::size_t Morphism::rank() const {
  std::size_t r = 0;
  for (const auto& c : components) r += zzq::rank(c);
  return r;
}

bool Morphism::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

Morphism zero_morphism(const Representation& source, const Representation& target) {
  Morphism f;
  for (int v = 0; v < source.vertex_count(); ++v) f.components.emplace_back(source.field(), target.dim(v), source.dim(v));
  return f;
}

Morphism identity_morphism(const Representation& m) {
  Morphism f;
  for (int v = 0; v < m.vertex_count(); ++v) f.components.push_back(Mat::identity(m.field(), m.dim(v)));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.components.size() != f.components.size()) throw ContractViolation("compose: vertex count mismatch");
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(f.components[v] + g.components[v]);
  return h;
}

Morphism scale(const Morphism& f, Scalar s) {
  Morphism h;
  for (const auto& c : f.components) h.components.push_back(c.scaled(s));
  return h;
}

Morphism shift(const Morphism& f, Scalar s) {
  Morphism h;
  for (const auto& c : f.components) {
    if (c.rows() != c.cols()) throw ContractViolation("shift of a non-endomorphism");
    h.components.push_back(c - Mat::identity(c.field(), c.rows()).scaled(s));
  }
  return h;
}

bool is_morphism(const Morphism& f, const Representation& source, const Representation& target) {
  const auto n = static_cast<std::size_t>(source.vertex_count());
  if (f.components.size() != n) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (f.components[v].rows() != target.dim(static_cast<int>(v)) ||
        f.components[v].cols() != source.dim(static_cast<int>(v)))
      return false;
  const auto& arrows = source.algebra().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& arr = arrows[a];
    if (!(target.map(static_cast<int>(a)) * f.components[arr.source] ==
          f.components[arr.target] * source.map(static_cast<int>(a))))
      return false;
  }
  return true;
}

bool is_injective(const Morphism& f, const Representation& source) {
  return f.rank() == source.total_dim();
}

bool is_surjective(const Morphism& f, const Representation& target) {
  return f.rank() == target.total_dim();
}

bool is_isomorphism(const Morphism& f, const Representation& source, const Representation& target) {
  return source.dims() == target.dims() && is_injective(f, source);
}

Vec flatten(const Morphism& f) {
  Vec out;
  for (const auto& c : f.components) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

Embedded submodule(const Representation& m, const std::vector<Mat>& bases) {
  const int n = m.vertex_count();
  if (bases.size() != static_cast<std::size_t>(n)) throw ContractViolation("submodule: need one basis per vertex");
  Morphism inclusion;
  std::vector<std::size_t> dims;
  for (int v = 0; v < n; ++v) {
    if (bases[v].rows() != m.dim(v)) throw ContractViolation("submodule: basis has wrong ambient dimension");
    inclusion.components.push_back(column_basis(bases[v]));
    dims.push_back(inclusion.components.back().cols());
  }
  std::vector<Mat> maps;
  const auto& arrows = m.algebra().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const Mat& ks = inclusion.components[arrows[a].source];
    const Mat& kt = inclusion.components[arrows[a].target];
    auto induced = solve(kt, m.map(static_cast<int>(a)) * ks);
    if (!induced) throw ContractViolation("submodule: subspaces are not stable under " + arrows[a].name);
    maps.push_back(std::move(*induced));
  }
  return {Representation(m.algebra_ptr(), std::move(dims), std::move(maps)), std::move(inclusion)};
}

Embedded generated_submodule(const Representation& m, const std::vector<Mat>& generators) {
  const int n = m.vertex_count();
  std::vector<Mat> span;
  for (int v = 0; v < n; ++v) span.push_back(column_basis(generators.at(v)));
  const auto& arrows = m.algebra().arrows();
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const int s = arrows[a].source, t = arrows[a].target;
      if (span[s].cols() == 0) continue;
      Mat joined = column_basis(hstack(span[t], m.map(static_cast<int>(a)) * span[s]));
      if (joined.cols() > span[t].cols()) {
        span[t] = std::move(joined);
        grew = true;
      }
    }
  }
  return submodule(m, span);
}

Projected quotient(const Representation& m, const std::vector<Mat>& sub_bases) {
  const int n = m.vertex_count();
  Morphism projection;
  std::vector<Mat> sections;
  std::vector<std::size_t> dims;
  for (int v = 0; v < n; ++v) {
    const Mat u = column_basis(sub_bases.at(v));
    Mat pi = kernel_matrix(u.transpose()).transpose();
    if (u.cols() == 0) pi = Mat::identity(m.field(), m.dim(v));
    auto section = solve(pi, Mat::identity(m.field(), pi.rows()));
    if (!section) throw ContractViolation("quotient: projection is not surjective");
    dims.push_back(pi.rows());
    projection.components.push_back(std::move(pi));
    sections.push_back(std::move(*section));
  }
  std::vector<Mat> maps;
  const auto& arrows = m.algebra().arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int s = arrows[a].source, t = arrows[a].target;
    const Mat& u = sub_bases[s];
    if (!(projection.components[t] * m.map(static_cast<int>(a)) * u).is_zero())
      throw ContractViolation("quotient: subspaces are not stable under " + arrows[a].name);
    maps.push_back(projection.components[t] * m.map(static_cast<int>(a)) * sections[s]);
  }
  return {Representation(m.algebra_ptr(), std::move(dims), std::move(maps)), std::move(projection)};
}

Embedded kernel(const Morphism& f, const Representation& source) {
  std::vector<Mat> bases;
  for (const auto& c : f.components) bases.push_back(kernel_matrix(c));
  return submodule(source, bases);
}

Embedded image(const Morphism& f, const Representation& target) {
  return submodule(target, f.components);
}

Projected cokernel(const Morphism& f, const Representation& target) {
  return quotient(target, f.components);
}

Representation direct_sum(const AlgebraPtr& algebra, std::span<const Representation> parts) {
  const int n = algebra->vertex_count();
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  for (const auto& p : parts) {
    if (p.algebra_ptr() != algebra) throw ContractViolation("direct_sum: summands over different algebras");
    for (int v = 0; v < n; ++v) dims[v] += p.dim(v);
  }
  const auto& arrows = algebra->arrows();
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    Mat m(algebra->field(), dims[arrows[a].target], dims[arrows[a].source]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      const Mat& block = p.map(static_cast<int>(a));
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) m(r0 + r, c0 + c) = block(r, c);
      r0 += block.rows();
      c0 += block.cols();
    }
    maps.push_back(std::move(m));
  }
  return Representation(algebra, std::move(dims), std::move(maps));
}

Representation direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw ContractViolation("direct_sum of an empty list needs the algebra");
  return direct_sum(parts.front().algebra_ptr(), parts);
}

std::vector<Morphism> summand_inclusions(std::span<const Representation> parts) {
  std::vector<Morphism> out;
  if (parts.empty()) return out;
  const int n = parts.front().vertex_count();
  std::vector<std::size_t> total(static_cast<std::size_t>(n), 0);
  for (const auto& p : parts)
    for (int v = 0; v < n; ++v) total[v] += p.dim(v);
  std::vector<std::size_t> offset(static_cast<std::size_t>(n), 0);
  for (const auto& p : parts) {
    Morphism inc;
    for (int v = 0; v < n; ++v) {
      Mat m(p.field(), total[v], p.dim(v));
      for (std::size_t i = 0; i < p.dim(v); ++i) m(offset[v] + i, i) = 1;
      offset[v] += p.dim(v);
      inc.components.push_back(std::move(m));
    }
    out.push_back(std::move(inc));
  }
  return out;
}

Representation dual_star(const Representation& m) {
  const auto& alg = m.algebra();
  if (alg.kind() == AlgebraKind::ZigZag) throw UnsupportedKind("dual_star is provided for A_n, B_n and C_n only");
  const auto& arrows = alg.arrows();
  std::vector<Mat> maps(arrows.size());
  for (std::size_t a = 0; a < arrows.size(); ++a) maps[arrows[a].reverse] = m.map(static_cast<int>(a)).transpose();
  return Representation(m.algebra_ptr(), m.dims(), std::move(maps));
}

Morphism dual_star(const Morphism& f) {
  Morphism t;
  for (const auto& c : f.components) t.components.push_back(c.transpose());
  return t;
}

Representation twist_alpha(const Representation& m) {
  const auto& alg = m.algebra();
  if (alg.kind() != AlgebraKind::C) throw UnsupportedKind("twist_alpha requires kind C");
  const int n = alg.vertex_count();
  std::vector<std::size_t> dims(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dims[n - 1 - v] = m.dim(v);
  std::vector<Mat> maps(alg.arrows().size());
  for (std::size_t a = 0; a < maps.size(); ++a) maps[alg.flip_arrow(static_cast<int>(a))] = m.map(static_cast<int>(a));
  return Representation(m.algebra_ptr(), std::move(dims), std::move(maps));
}

}  // namespace zzq
