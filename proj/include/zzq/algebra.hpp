#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zzq/field.hpp"
#include "zzq/matrix.hpp"

namespace zzq {

enum class AlgebraKind { ZigZag, A, B, C };

std::string to_string(AlgebraKind kind);
/// "A", "B", "C" or "zigzag"; throws InvalidInput otherwise.
AlgebraKind parse_kind(const std::string& text);

/// Finite unoriented graph on vertices 0..vertex_count-1.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph path(int n);
};

struct Arrow {
  int source;
  int target;
  int reverse;  // index of the opposite arrow of the same edge
  std::string name;
};

/// A basis element: idempotent (no arrows), arrow (one) or two-cycle (two).
struct BasisPath {
  int source;
  int target;
  std::vector<int> arrows;  // representative arrow word, read left to right
  std::string name;
};

using AlgebraElement = Vec;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Zig-zag algebra of a graph, or one of its type-A leaf quotients, as a based
/// algebra with a structure-constant table. Products of basis elements are
/// either zero or a single basis element.
///
/// Composition convention: x * y means "first x, then y". Vertices are 0-based
/// here; names (e1, a1, b1, c1, ...) are 1-based.
class Algebra {
 public:
  /// A_Q. Throws InvalidInput unless the graph is connected, loop-free, has
  /// at least one edge and no repeated edges.
  static AlgebraPtr zigzag(const Graph& graph, Field field);
  /// A_n (kind A), B_n (kind B: loop at n killed), C_n (kind C: loops at 1 and n killed).
  static AlgebraPtr leaf_quotient(int n, AlgebraKind kind, Field field);

  const Field& field() const noexcept { return field_; }
  AlgebraKind kind() const noexcept { return kind_; }
  bool is_type_a() const noexcept { return kind_ != AlgebraKind::ZigZag; }
  int vertex_count() const noexcept { return graph_.vertex_count; }
  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::vector<BasisPath>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  int idempotent(int v) const { return idempotent_index_.at(v); }
  int arrow_element(int arrow) const { return arrow_index_.at(arrow); }
  /// Basis index of the two-cycle c_v, or -1 when it is zero in the algebra.
  int loop(int v) const { return loop_index_.at(v); }
  bool loop_survives(int v) const { return loop(v) >= 0; }

  /// Type-A arrows, 1-based edge index i: a_i : i -> i+1 and b_i : i+1 -> i.
  int arrow_a(int i) const;
  int arrow_b(int i) const;

  /// Basis index of the product, or -1 for zero.
  int product(int x, int y) const { return table_[static_cast<std::size_t>(x) * basis_.size() + y]; }

  AlgebraElement zero_element() const { return AlgebraElement(basis_.size(), 0); }
  AlgebraElement basis_element(int i) const;
  AlgebraElement unit() const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Involution fixing e_v and c_v and swapping each arrow with its reverse.
  /// Throws UnsupportedKind on a general zig-zag algebra.
  AlgebraElement anti_automorphism(const AlgebraElement& x) const;
  int anti_automorphism_basis(int i) const;
  /// Automorphism induced by i -> n+1-i. Kind C only.
  AlgebraElement flip_automorphism(const AlgebraElement& x) const;
  int flip_basis(int i) const;
  int flip_arrow(int arrow) const;

  std::string descriptor() const;

 private:
  Algebra(Graph graph, Field field, AlgebraKind kind, std::vector<bool> killed_loops);

  Field field_;
  AlgebraKind kind_;
  Graph graph_;
  std::vector<Arrow> arrows_;
  std::vector<BasisPath> basis_;
  std::vector<int> idempotent_index_;
  std::vector<int> arrow_index_;
  std::vector<int> loop_index_;
  std::vector<int> table_;
};

}  // namespace zzq
