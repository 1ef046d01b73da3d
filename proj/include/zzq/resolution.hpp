#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zzq/decompose.hpp"
#include "zzq/projective.hpp"

namespace zzq {

enum class ResolutionStatus { Finite, Periodic, Truncated };

std::string to_string(ResolutionStatus status);

/// Minimal projective resolution
///   ... -> P_1 -> P_0 -> M -> 0
/// with syzygies[k] = kernel of P_{k-1} -> syzygies[k-1], syzygies[0] = M.
struct Resolution {
  Representation module;
  std::vector<ProjectiveSum> terms;
  /// differentials[0] : P_0 -> M, differentials[k] : P_k -> P_{k-1}.
  std::vector<Morphism> differentials;
  std::vector<Representation> syzygies;
  ResolutionStatus status = ResolutionStatus::Truncated;
  std::size_t projective_dimension = 0;  // Finite only
  std::size_t preperiod = 0;             // Periodic: syzygies[preperiod + period] ~ syzygies[preperiod]
  std::size_t period = 0;
  std::size_t k_max = 0;
};

/// Isomorphism-class fingerprint of a module; equal fingerprints must imply
/// isomorphic modules. nullopt means "no fingerprint", which falls back to
/// is_isomorphic.
using Fingerprint = std::function<std::optional<std::string>(const Representation&)>;

/// Syzygy: kernel of the projective cover.
Representation syzygy(const Representation& m);

/// Resolves until a syzygy vanishes (Finite), a syzygy repeats an earlier one
/// up to isomorphism (Periodic; one further term is then added so that every
/// Ext group is determined), or syzygies[k_max] is reached (Truncated).
Resolution resolve(const Representation& m, std::size_t k_max, const Fingerprint& fingerprint = {},
                   const SearchOptions& opts = {});

struct ProjectiveDimension {
  enum class Kind { Finite, Infinite, Unknown } kind;
  std::size_t value = 0;  // Finite only

  bool finite() const noexcept { return kind == Kind::Finite; }
};

ProjectiveDimension projective_dimension(const Resolution& res);
std::string to_string(const ProjectiveDimension& pd);

/// dim Ext^k(M, Y) for k = 0..k_last. Throws InsufficientDepth when a
/// truncated resolution does not reach P_{k+1}.
std::vector<std::size_t> ext_dims(const Resolution& res, const Representation& y, std::size_t k_last);
std::size_t ext_dim(const Resolution& res, const Representation& y, std::size_t k);

/// Largest k for which ext_dims can be answered without reduction, or
/// unbounded (SIZE_MAX) for finite and periodic resolutions.
std::size_t ext_depth(const Resolution& res);

/// Multiplicity of P(v) among the summands of the k-th term.
std::size_t term_multiplicity(const Resolution& res, std::size_t k, int v);

}  // namespace zzq
