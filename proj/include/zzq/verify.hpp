#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "zzq/workspace.hpp"

namespace zzq {

/// Which algebras the acceptance checks run on. Each criterion has its own
/// range of n, which is intersected with [n_min, n_max].
struct VerifyScope {
  std::vector<AlgebraKind> kinds{AlgebraKind::A, AlgebraKind::B, AlgebraKind::C};
  int n_min = 2;
  int n_max = 8;
  std::uint32_t p = 2;
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  bool skipped = false;        // no algebra of the scope is covered
  std::string detail;          // summary, or the first counterexample
  std::vector<long long> digest;  // the numbers behind the verdict
};

constexpr int kCriterionCount = 17;
std::string criterion_title(int id);

/// Runs acceptance criteria, sharing workspaces between them.
class Verifier {
 public:
  explicit Verifier(VerifyScope scope);

  CriterionResult run(int id);
  std::vector<CriterionResult> run_all();

  const Workspace& workspace(AlgebraKind kind, int n, std::uint32_t p);
  const VerifyScope& scope() const noexcept { return scope_; }

 private:
  VerifyScope scope_;
  std::map<std::tuple<AlgebraKind, int, std::uint32_t>, std::unique_ptr<Workspace>> cache_;
};

}  // namespace zzq
