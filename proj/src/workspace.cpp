#include "zzq/workspace.hpp"

#include "zzq/error.hpp"
#include "zzq/hom.hpp"

namespace zzq {

Workspace::Workspace(AlgebraPtr algebra, WorkspaceOptions opts)
    : algebra_(std::move(algebra)), opts_(opts) {
  k_max_ = opts_.k_max ? opts_.k_max : static_cast<std::size_t>(4 * algebra_->vertex_count() + 2);
}

Workspace::Workspace(AlgebraKind kind, int n, std::uint32_t p, WorkspaceOptions opts)
    : Workspace(Algebra::leaf_quotient(n, kind, Field(p)), opts) {}

const Catalog& Workspace::catalog() const {
  std::call_once(catalog_once_, [&] { catalog_ = std::make_unique<Catalog>(algebra_, opts_.search); });
  return *catalog_;
}

Label Workspace::canonical(const Label& label) const {
  validate_label(*algebra_, label);
  return catalog().canonical(label);
}

const Representation& Workspace::module(const Label& label) const {
  return catalog().find(canonical(label))->module;
}

std::vector<Label> Workspace::labels_of(const Representation& m) const { return catalog().decompose_labels(m); }

std::optional<std::string> Workspace::fingerprint(const Representation& m) const {
  std::string s;
  for (const auto& l : labels_of(m)) s += (s.empty() ? "" : "+") + l.str();
  return s;
}

Resolution Workspace::resolve(const Representation& m) const {
  return zzq::resolve(
      m, k_max_, [this](const Representation& x) { return fingerprint(x); }, opts_.search);
}

std::shared_ptr<const Resolution> Workspace::resolution(const Label& label) const {
  const Label key = canonical(label);
  {
    std::lock_guard lock(mutex_);
    if (auto it = resolutions_.find(key); it != resolutions_.end()) return it->second;
  }
  auto res = std::make_shared<const Resolution>(resolve(module(key)));
  std::lock_guard lock(mutex_);
  return resolutions_.emplace(key, std::move(res)).first->second;
}

ProjectiveDimension Workspace::pd(const Label& label) const { return projective_dimension(*resolution(label)); }

std::size_t Workspace::hom(const Label& x, const Label& y) const { return ext(x, y, 0).front(); }

std::vector<std::size_t> Workspace::ext(const Label& x, const Label& y, std::size_t k_last) const {
  const auto key = std::make_pair(canonical(x), canonical(y));
  {
    std::lock_guard lock(mutex_);
    if (auto it = ext_.find(key); it != ext_.end() && it->second.size() > k_last)
      return {it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(k_last + 1)};
  }
  auto res = resolution(key.first);
  // Compute a little ahead so that nearby degrees hit the memo.
  std::size_t want = std::max(k_last, 2 * static_cast<std::size_t>(n()));
  if (res->status == ResolutionStatus::Truncated) want = std::max(k_last, std::min(want, ext_depth(*res)));
  auto dims = ext_dims(*res, module(key.second), want);
  std::vector<std::size_t> out(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(k_last + 1));
  std::lock_guard lock(mutex_);
  auto& slot = ext_[key];
  if (slot.size() < dims.size()) slot = std::move(dims);
  return out;
}

std::size_t Workspace::vanishing_bound(const Label& x) const {
  auto res = resolution(x);
  switch (res->status) {
    case ResolutionStatus::Finite:
      return res->projective_dimension;
    case ResolutionStatus::Periodic:
      return res->preperiod + res->period;
    case ResolutionStatus::Truncated:
      break;
  }
  throw InsufficientDepth("projective dimension of " + x.str() + " undecided within k_max = " +
                          std::to_string(k_max_));
}

bool Workspace::ext_self_orthogonal(const Label& x) const {
  const std::size_t bound = vanishing_bound(x);
  if (bound == 0) return true;
  const auto dims = ext(x, x, bound);
  for (std::size_t k = 1; k <= bound; ++k)
    if (dims[k] != 0) return false;
  return true;
}

}  // namespace zzq
