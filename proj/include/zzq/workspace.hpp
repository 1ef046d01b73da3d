#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "zzq/catalog.hpp"
#include "zzq/resolution.hpp"

namespace zzq {

struct WorkspaceOptions {
  /// Resolution budget; 0 means the default 4n+2.
  std::size_t k_max = 0;
  SearchOptions search;
};

/// One leaf quotient with its catalog and memoized resolutions, Hom and Ext
/// dimensions keyed by catalog label. Lookups are safe from several threads;
/// values are computed outside the lock and the first insertion wins.
class Workspace {
 public:
  explicit Workspace(AlgebraPtr algebra, WorkspaceOptions opts = {});
  Workspace(AlgebraKind kind, int n, std::uint32_t p = 2, WorkspaceOptions opts = {});

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  int n() const noexcept { return algebra_->vertex_count(); }
  std::size_t k_max() const noexcept { return k_max_; }
  const SearchOptions& search() const noexcept { return opts_.search; }

  const Catalog& catalog() const;
  /// Validates the label and returns the catalog label of its module.
  Label canonical(const Label& label) const;
  const Representation& module(const Label& label) const;
  /// Catalog labels of the summands, sorted; throws if not catalog modules.
  std::vector<Label> labels_of(const Representation& m) const;
  /// Sorted summand labels joined by '+'.
  std::optional<std::string> fingerprint(const Representation& m) const;

  std::shared_ptr<const Resolution> resolution(const Label& label) const;
  Resolution resolve(const Representation& m) const;
  ProjectiveDimension pd(const Label& label) const;

  std::size_t hom(const Label& x, const Label& y) const;
  /// dim Ext^k(x, y) for k = 0..k_last.
  std::vector<std::size_t> ext(const Label& x, const Label& y, std::size_t k_last) const;
  std::size_t ext_at(const Label& x, const Label& y, std::size_t k) const { return ext(x, y, k).back(); }

  /// Ext^k(x, x) = 0 for all k >= 1 (decided with the periodic reduction for
  /// infinite projective dimension).
  bool ext_self_orthogonal(const Label& x) const;
  /// Largest degree that has to be inspected to decide vanishing of all Ext^k(x, -), k >= 1.
  std::size_t vanishing_bound(const Label& x) const;

 private:
  AlgebraPtr algebra_;
  WorkspaceOptions opts_;
  std::size_t k_max_;
  mutable std::once_flag catalog_once_;
  mutable std::unique_ptr<Catalog> catalog_;
  mutable std::mutex mutex_;
  mutable std::map<Label, std::shared_ptr<const Resolution>> resolutions_;
  mutable std::map<std::pair<Label, Label>, std::vector<std::size_t>> ext_;
};

}  // namespace zzq
