#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zzq/hom.hpp"
#include "zzq/representation.hpp"

namespace zzq {

struct SearchOptions {
  /// Exhaustive searches over a space of p^d elements run only when p^d <= this.
  std::uint64_t exhaustive_bound = 1u << 16;
  int random_tries = 64;
  std::uint64_t seed = 0;
};

/// Witness that End(m) = GF(p) * 1 + radical with a nilpotent radical,
/// i.e. that m is indecomposable with scalar residue field.
struct LocalCertificate {
  std::vector<Morphism> radical;  // basis of rad End(m)
};

struct Summand {
  Representation module;
  Morphism inclusion;  // into the decomposed module
  std::optional<LocalCertificate> certificate;
};

/// Local certificate for m, or nullopt when End(m) is not local with residue GF(p).
/// Throws UndecidableDecomposition when neither a certificate nor a splitting is found.
std::optional<LocalCertificate> local_certificate(const Representation& m, const SearchOptions& opts = {});

/// Krull-Schmidt decomposition by Fitting splittings of endomorphisms.
std::vector<Summand> decompose_with_certificates(const Representation& m, const SearchOptions& opts = {});
std::vector<Representation> decompose(const Representation& m, const SearchOptions& opts = {});
bool is_indecomposable(const Representation& m, const SearchOptions& opts = {});

/// x ~ y for x with a local endomorphism ring: some g o f with f in Hom(x,y),
/// g in Hom(y,x) basis elements is invertible.
bool is_isomorphic_local(const Representation& x, const LocalCertificate& cert, const Representation& y);

/// General isomorphism test: invariants, seeded random search for an invertible
/// homomorphism, then matching of certified decompositions.
bool is_isomorphic(const Representation& x, const Representation& y, const SearchOptions& opts = {});

/// Eigenvalues in GF(p) of an endomorphism, collected over all vertices.
std::vector<Scalar> eigenvalues(const Morphism& f);

}  // namespace zzq
