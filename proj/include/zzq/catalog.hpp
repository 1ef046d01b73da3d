#pragma once

#include <optional>
#include <vector>

#include "zzq/decompose.hpp"
#include "zzq/label.hpp"
#include "zzq/representation.hpp"

namespace zzq {

/// The module named by a label. Throws InvalidLabel if the label is not valid
/// for the algebra.
///
/// String modules live on [i,j] with one-dimensional spaces; vertices of the
/// top alternate with vertices of the socle and each arrow from a top vertex
/// to a neighbouring socle vertex acts by 1. The ends are socle vertices for
/// M, top vertices for W; N has i in the socle and j in the top, S the reverse.
/// Delta(i) = N(i-1,i) and Nabla(i) = S(i-1,i) for i >= 2.
Representation canonical_module(const AlgebraPtr& algebra, const Label& label);

struct CatalogEntry {
  Label label;
  Representation module;
  LocalCertificate certificate;
  std::vector<std::size_t> top;  // dimension vector of the top
};

/// All indecomposable modules of a leaf quotient A_n, B_n or C_n, one per
/// isomorphism class, in label order. Projectives coinciding with string
/// modules (P(n) over B_n and C_n, P(1) over C_n) appear under the string name.
class Catalog {
 public:
  /// Builds every entry and certifies it indecomposable with a local
  /// endomorphism ring. Throws UnsupportedKind for general zig-zag algebras.
  explicit Catalog(AlgebraPtr algebra, SearchOptions opts = {});

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Entry with exactly this label, or nullptr.
  const CatalogEntry* find(const Label& label) const;
  /// Catalog label of an indecomposable module, or nullopt if none matches.
  std::optional<Label> identify(const Representation& m) const;
  /// Catalog label isomorphic to canonical_module(label).
  Label canonical(const Label& label) const;
  /// Multiset of catalog labels of the indecomposable summands, sorted.
  /// Throws Error if a summand is not in the catalog.
  std::vector<Label> decompose_labels(const Representation& m) const;

 private:
  AlgebraPtr algebra_;
  SearchOptions opts_;
  std::vector<CatalogEntry> entries_;
};

/// Labels of the catalog of a leaf quotient, before construction.
std::vector<Label> catalog_labels(const Algebra& algebra);

}  // namespace zzq
