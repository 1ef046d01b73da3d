#pragma once

#include <compare>
#include <string>

#include "zzq/algebra.hpp"

namespace zzq {

/// Declaration order is the canonical output order.
enum class Family { L, P, I, M, N, W, S, Delta, Nabla, T };

/// Symbolic module name with 1-based indices. Single-index families leave j = 0.
struct Label {
  Family family = Family::L;
  int i = 0;
  int j = 0;

  static Label simple(int v) { return {Family::L, v, 0}; }
  static Label projective(int v) { return {Family::P, v, 0}; }
  static Label injective(int v) { return {Family::I, v, 0}; }
  static Label delta(int v) { return {Family::Delta, v, 0}; }
  static Label nabla(int v) { return {Family::Nabla, v, 0}; }
  static Label string(Family f, int i, int j) { return {f, i, j}; }

  bool two_indices() const noexcept;
  std::string str() const;

  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Grammar: L(i) P(i) I(i) M(i,j) N(i,j) W(i,j) S(i,j) Delta(i) Nabla(i) T(i),
/// whitespace-free, 1-based. Throws InvalidLabel with the grammar on failure.
Label parse_label(const std::string& text);

extern const char* const kLabelGrammar;

/// Throws InvalidLabel unless the label names a module over the algebra.
void validate_label(const Algebra& algebra, const Label& label);

/// Human-facing name. Over B_n the standard and costandard modules are shown as
/// Delta(i) / Nabla(i) instead of the string names N(i-1,i) / S(i-1,i).
std::string display_name(const Algebra& algebra, const Label& label);

}  // namespace zzq
