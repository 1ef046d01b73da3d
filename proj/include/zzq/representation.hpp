#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zzq/algebra.hpp"
#include "zzq/matrix.hpp"

namespace zzq {

/// A right module given as a quiver representation: one vector space per
/// vertex and one matrix per arrow. The matrix of an arrow s -> t has shape
/// dim(t) x dim(s); a path acts by the product of its arrow matrices, the
/// first arrow applied first.
class Representation {
 public:
  Representation() = default;
  /// Throws ContractViolation on shape mismatch. Relations are not checked here;
  /// see satisfies_relations().
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> maps);

  static Representation zero(AlgebraPtr algebra);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  int vertex_count() const { return algebra_->vertex_count(); }

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(int v) const { return dims_.at(static_cast<std::size_t>(v)); }
  std::size_t total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }

  const Mat& map(int arrow) const { return maps_.at(static_cast<std::size_t>(arrow)); }
  const std::vector<Mat>& maps() const noexcept { return maps_; }
  /// Action of a basis path of the algebra: a dim(target) x dim(source) matrix.
  Mat path_action(int basis_index) const;

  /// Every defining relation of the algebra holds for the arrow matrices.
  bool satisfies_relations() const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> maps_;
};

/// Module homomorphism: one matrix per vertex, component v of shape
/// target.dim(v) x source.dim(v).
struct Morphism {
  std::vector<Mat> components;

  const Mat& at(int v) const { return components.at(static_cast<std::size_t>(v)); }
  std::size_t rank() const;
  bool is_zero() const;
};

Morphism zero_morphism(const Representation& source, const Representation& target);
Morphism identity_morphism(const Representation& m);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, Scalar s);
/// f - s * id; f must be an endomorphism.
Morphism shift(const Morphism& f, Scalar s);
bool is_morphism(const Morphism& f, const Representation& source, const Representation& target);
bool is_injective(const Morphism& f, const Representation& source);
bool is_surjective(const Morphism& f, const Representation& target);
bool is_isomorphism(const Morphism& f, const Representation& source, const Representation& target);
/// Flattened coordinates, vertex by vertex, row-major.
Vec flatten(const Morphism& f);

/// A module together with its embedding into a larger one.
struct Embedded {
  Representation module;
  Morphism inclusion;
};

/// A module together with a surjection onto it.
struct Projected {
  Representation module;
  Morphism projection;
};

/// Submodule spanned at each vertex by the columns of bases[v] (need not be
/// independent). Throws ContractViolation if the subspaces are not stable.
Embedded submodule(const Representation& m, const std::vector<Mat>& bases);
/// Smallest submodule containing the given columns at each vertex.
Embedded generated_submodule(const Representation& m, const std::vector<Mat>& generators);
Projected quotient(const Representation& m, const std::vector<Mat>& sub_bases);

Embedded kernel(const Morphism& f, const Representation& source);
Embedded image(const Morphism& f, const Representation& target);
Projected cokernel(const Morphism& f, const Representation& target);

/// Block-diagonal sum. An empty list needs the algebra explicitly.
Representation direct_sum(std::span<const Representation> parts);
Representation direct_sum(const AlgebraPtr& algebra, std::span<const Representation> parts);
/// Inclusions of and projections onto the summands of direct_sum(parts).
std::vector<Morphism> summand_inclusions(std::span<const Representation> parts);

/// Simple preserving duality: vector-space dual transported along the arrow
/// swap. Kinds A, B, C.
Representation dual_star(const Representation& m);
/// Componentwise transpose; turns f : X -> Y into f* : Y* -> X*.
Morphism dual_star(const Morphism& f);
/// Twist by the vertex flip i -> n+1-i. Kind C only.
Representation twist_alpha(const Representation& m);

}  // namespace zzq
