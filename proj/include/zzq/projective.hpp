#pragma once

#include <utility>
#include <vector>

#include "zzq/representation.hpp"

namespace zzq {

/// P(v) = e_v A on its path basis: the vertex-w space has one coordinate per
/// basis path from v to w.
Representation indecomposable_projective(const AlgebraPtr& algebra, int v);

/// Direct sum of P(tops[0]), P(tops[1]), ... with its coordinate bookkeeping.
struct ProjectiveSum {
  std::vector<int> tops;
  Representation module;
  /// slots[w][r] = (summand, basis path) of coordinate r at vertex w.
  std::vector<std::vector<std::pair<int, int>>> slots;

  std::size_t size() const noexcept { return tops.size(); }
  /// Coordinate at vertex tops[k] of the generator e_{tops[k]} of summand k.
  std::size_t generator_slot(std::size_t k) const;
};

ProjectiveSum projective_sum(const AlgebraPtr& algebra, std::vector<int> tops);

/// The morphism P -> Y sending the generator of summand k to gens[k], a vector in Y_{tops[k]}.
Morphism morphism_from_generators(const ProjectiveSum& p, const Representation& y, const std::vector<Vec>& gens);

struct Cover {
  ProjectiveSum projective;
  Morphism epi;
};

/// Minimal projective cover, generators taken from a complement of the radical,
/// ordered by vertex. The zero module has the empty cover.
Cover projective_cover(const Representation& m);

struct Envelope {
  Representation injective;
  Morphism mono;
};

/// Injective envelope as the dual of the projective cover of the dual. Kinds A, B, C.
Envelope injective_envelope(const Representation& m);

}  // namespace zzq
