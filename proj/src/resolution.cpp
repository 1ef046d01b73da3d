#include "zzq/resolution.hpp"

#include <limits>

#include "zzq/error.hpp"

namespace zzq {

std::string to_string(ResolutionStatus status) {
  switch (status) {
    case ResolutionStatus::Finite:
      return "finite";
    case ResolutionStatus::Periodic:
      return "periodic";
    case ResolutionStatus::Truncated:
      return "truncated";
  }
  return "?";
}

Representation syzygy(const Representation& m) {
  Cover c = projective_cover(m);
  return kernel(c.epi, c.projective.module).module;
}

Resolution resolve(const Representation& m, std::size_t k_max, const Fingerprint& fingerprint,
                   const SearchOptions& opts) {
  if (k_max < 1) throw InvalidInput("resolve: k_max must be at least 1");
  Resolution res;
  res.module = m;
  res.k_max = k_max;
  res.syzygies.push_back(m);
  if (m.is_zero()) {
    res.status = ResolutionStatus::Finite;
    return res;
  }

  std::vector<std::optional<std::string>> prints;
  auto print = [&](const Representation& x) { return fingerprint ? fingerprint(x) : std::nullopt; };
  prints.push_back(print(m));

  Morphism inclusion;  // syzygies[k] -> P_{k-1}
  // Adds P_k covering syzygies[k] and syzygies[k+1]; returns false if the latter vanishes.
  auto step = [&](std::size_t k) {
    Cover c = projective_cover(res.syzygies[k]);
    res.differentials.push_back(k == 0 ? c.epi : compose(inclusion, c.epi));
    Embedded ker = kernel(c.epi, c.projective.module);
    res.terms.push_back(std::move(c.projective));
    inclusion = std::move(ker.inclusion);
    res.syzygies.push_back(std::move(ker.module));
    return !res.syzygies.back().is_zero();
  };

  for (std::size_t k = 0;; ++k) {
    if (!step(k)) {
      res.status = ResolutionStatus::Finite;
      res.projective_dimension = k;
      return res;
    }
    const std::size_t j = k + 1;
    const Representation& omega = res.syzygies[j];
    prints.push_back(print(omega));
    for (std::size_t pre = 0; pre < j; ++pre) {
      const Representation& earlier = res.syzygies[pre];
      if (earlier.dims() != omega.dims()) continue;
      const bool same = prints[pre] && prints[j] ? *prints[pre] == *prints[j] : is_isomorphic(earlier, omega, opts);
      if (!same) continue;
      res.status = ResolutionStatus::Periodic;
      res.preperiod = pre;
      res.period = j - pre;
      step(j);
      step(j + 1);
      return res;
    }
    if (j == k_max) {
      step(j);
      res.status = ResolutionStatus::Truncated;
      return res;
    }
  }
}

ProjectiveDimension projective_dimension(const Resolution& res) {
  switch (res.status) {
    case ResolutionStatus::Finite:
      return {ProjectiveDimension::Kind::Finite, res.projective_dimension};
    case ResolutionStatus::Periodic:
      return {ProjectiveDimension::Kind::Infinite, 0};
    case ResolutionStatus::Truncated:
      break;
  }
  return {ProjectiveDimension::Kind::Unknown, 0};
}

std::string to_string(const ProjectiveDimension& pd) {
  switch (pd.kind) {
    case ProjectiveDimension::Kind::Finite:
      return std::to_string(pd.value);
    case ProjectiveDimension::Kind::Infinite:
      return "infinite";
    case ProjectiveDimension::Kind::Unknown:
      break;
  }
  return "unknown";
}

std::size_t ext_depth(const Resolution& res) {
  if (res.status != ResolutionStatus::Truncated) return std::numeric_limits<std::size_t>::max();
  return res.terms.size() - 2;
}

namespace {

std::size_t cochain_dim(const Resolution& res, const Representation& y, std::size_t k) {
  if (k >= res.terms.size()) return 0;
  std::size_t d = 0;
  for (int v : res.terms[k].tops) d += y.dim(v);
  return d;
}

/// Matrix of Hom(P_k, Y) -> Hom(P_{k+1}, Y), phi -> phi o d_{k+1}.
Mat coboundary(const Resolution& res, const Representation& y, std::size_t k) {
  const Field& field = y.field();
  const std::size_t cols = cochain_dim(res, y, k), rows = cochain_dim(res, y, k + 1);
  Mat out(field, rows, cols);
  if (rows == 0 || cols == 0) return out;
  const ProjectiveSum& src = res.terms[k];
  const ProjectiveSum& dst = res.terms[k + 1];
  const Morphism& d = res.differentials[k + 1];

  std::vector<std::size_t> col_offset{0};
  for (int v : src.tops) col_offset.push_back(col_offset.back() + y.dim(v));
  std::size_t row = 0;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const int v = dst.tops[i];
    const Vec image = d.at(v).column(dst.generator_slot(i));
    for (std::size_t r = 0; r < image.size(); ++r) {
      if (image[r] == 0) continue;
      const auto [j, path] = src.slots[v][r];
      const Mat block = y.path_action(path).scaled(image[r]);
      for (std::size_t a = 0; a < block.rows(); ++a)
        for (std::size_t b = 0; b < block.cols(); ++b) {
          Scalar& cell = out(row + a, col_offset[j] + b);
          cell = field.add(cell, block(a, b));
        }
    }
    row += y.dim(v);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> ext_dims(const Resolution& res, const Representation& y, std::size_t k_last) {
  if (res.module.algebra_ptr() != y.algebra_ptr()) throw ContractViolation("ext: different algebras");
  std::size_t direct = k_last;
  if (res.status == ResolutionStatus::Periodic) direct = std::min(direct, res.preperiod + res.period);
  if (res.status == ResolutionStatus::Finite) direct = std::min(direct, res.projective_dimension);
  if (res.status == ResolutionStatus::Truncated && k_last > ext_depth(res))
    throw InsufficientDepth("resolution truncated at k_max = " + std::to_string(res.k_max) + "; Ext^" +
                            std::to_string(k_last) + " needs a deeper resolution");

  std::vector<std::size_t> ranks;  // ranks[k] = rank of delta^k
  for (std::size_t k = 0; k <= direct; ++k) ranks.push_back(rank(coboundary(res, y, k)));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= k_last; ++k) {
    if (k <= direct) {
      out.push_back(cochain_dim(res, y, k) - ranks[k] - (k > 0 ? ranks[k - 1] : 0));
    } else if (res.status == ResolutionStatus::Finite) {
      out.push_back(0);
    } else {
      out.push_back(out[k - res.period]);
    }
  }
  return out;
}

std::size_t ext_dim(const Resolution& res, const Representation& y, std::size_t k) {
  return ext_dims(res, y, k).back();
}

std::size_t term_multiplicity(const Resolution& res, std::size_t k, int v) {
  if (k >= res.terms.size()) return 0;
  std::size_t c = 0;
  for (int t : res.terms[k].tops) c += t == v;
  return c;
}

}  // namespace zzq
