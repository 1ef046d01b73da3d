#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zzq/workspace.hpp"

namespace zzq {

/// A map x -> T' with T' a direct sum of the given modules.
struct Approximation {
  Representation target;
  Morphism map;
  /// Index into the candidate list of each summand of target, in order.
  std::vector<std::size_t> summands;
};

/// x -> sum_i T_i^{dim Hom(x, T_i)}, coordinates running over hom bases.
Approximation left_add_approximation(const Representation& x, const std::vector<Representation>& t_summands);

/// Minimal left add(T)-approximation for pairwise non-isomorphic catalog
/// modules T_i: one copy of T_i per basis vector of
/// Hom(x, T_i) / sum_j rad(T_j, T_i) Hom(x, T_j).
Approximation minimal_left_approximation(const Workspace& ws, const Representation& x, const std::vector<Label>& t);

/// Basic module given by catalog labels, sorted.
using TiltingModule = std::vector<Label>;

/// Coresolves every indecomposable projective by iterated minimal left
/// add(T)-approximations, each of which has to be injective, within `bound` steps.
bool coresolves_regular(const Workspace& ws, const std::vector<Label>& t, std::size_t bound);

/// Finite projective dimension, Ext^k(X, Y) = 0 for summands X, Y and
/// 1 <= k <= max pd, and a coresolution of the regular module of length <= 2n.
bool is_generalized_tilting(const Workspace& ws, const std::vector<Label>& t);

/// Catalog labels of the projective-injective indecomposables.
std::vector<Label> projective_injectives(const Workspace& ws);

struct TiltingEdge {
  std::size_t larger;   // index of M + X, X the submodule end of 0 -> X -> M' -> Y -> 0
  std::size_t smaller;  // index of M + Y
  Label x;
  Label y;
  std::vector<Label> middle;  // summands of M'
};

struct TiltingPoset {
  std::vector<TiltingModule> members;
  std::vector<TiltingEdge> edges;
  /// Members from smallest to largest when the Hasse graph is a path.
  std::optional<std::vector<std::size_t>> chain;
};

/// All basic generalized tilting modules with n summands, sorted. Kinds B and C.
TiltingPoset enumerate_tilting(const Workspace& ws);

/// Adds the exchange edges between members differing in one summand.
void hasse_edges(const Workspace& ws, TiltingPoset& poset);

/// Summands of a member that are not projective-injective.
std::vector<Label> distinguishing_summands(const Workspace& ws, const TiltingModule& t);
/// Node name: display names of the distinguishing summands joined by '+'.
std::string node_name(const Workspace& ws, const TiltingModule& t);

/// Undirected DOT graph of the exchange edges, one node per member in member order.
std::string to_dot(const Workspace& ws, const TiltingPoset& poset);

}  // namespace zzq
