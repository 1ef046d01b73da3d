#pragma once

#include <vector>

#include "zzq/decompose.hpp"
#include "zzq/representation.hpp"

namespace zzq {

/// Order L_{order[0]} < L_{order[1]} < ... on 0-based vertices.
using SimpleOrder = std::vector<int>;

SimpleOrder natural_order(int n);
/// Throws InvalidInput unless the order is a permutation of 0..n-1.
void validate_order(const SimpleOrder& order, int n);

struct StandardModule {
  Representation module;      // Delta_v = P(v) / U_v
  Embedded trace;             // U_v: generated by P(v)_w for all w above v
};

/// Standard modules indexed by vertex.
std::vector<StandardModule> standard_for_order(const AlgebraPtr& algebra, const SimpleOrder& order);

/// Backtracking search for a filtration of m whose subquotients are among
/// `pieces`: peel off an epimorphism onto some piece and recurse on its kernel.
bool has_delta_filtration(const Representation& m, const std::vector<Representation>& pieces,
                          const SearchOptions& opts = {});

bool is_quasi_hereditary(const AlgebraPtr& algebra, const SimpleOrder& order, const SearchOptions& opts = {});

struct Thm2Report {
  int projective_injective_count = 0;
  std::vector<int> projective_injective;  // 0-based vertices v with P(v) injective
  bool duality_ok = false;
  bool order_ok = false;
};

/// Hypotheses of the characterization of B_n: the number of projective-injective
/// indecomposables, a simple preserving duality, quasi-heredity for the natural order.
Thm2Report thm2_hypothesis_report(const AlgebraPtr& algebra, const SearchOptions& opts = {});

}  // namespace zzq
