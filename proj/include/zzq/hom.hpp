#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zzq/representation.hpp"

namespace zzq {

/// Basis of Hom(source, target): all vertex-wise matrix tuples commuting with
/// the arrow actions.
struct HomSpace {
  std::vector<Morphism> basis;
  std::size_t dim() const noexcept { return basis.size(); }
};

HomSpace hom_basis(const Representation& source, const Representation& target);
std::size_t hom_dim(const Representation& source, const Representation& target);

/// Linear combination sum coeffs[i] * basis[i].
Morphism combine(const HomSpace& space, const Representation& source, const Representation& target,
                 const std::vector<Scalar>& coeffs);

/// Visits every element of the space when it has at most `bound` elements and
/// returns true; otherwise visits the basis and `samples` seeded random
/// combinations and returns false. Stops early once visit returns true.
bool visit_homs(const HomSpace& space, const Representation& source, const Representation& target,
                std::uint64_t bound, int samples, std::uint64_t seed,
                const std::function<bool(const Morphism&)>& visit);

/// Radical (sum of arrow images), top (quotient by the radical) and socle
/// (joint kernel of all outgoing arrows).
struct Layers {
  Embedded radical;
  Projected top;
  Embedded socle;
};

Layers layers(const Representation& m);
Embedded radical(const Representation& m);
Embedded socle(const Representation& m);
/// Dimension vector of the top, without building the quotient.
std::vector<std::size_t> top_dims(const Representation& m);
std::vector<std::size_t> socle_dims(const Representation& m);

}  // namespace zzq
