#include "zzq/exceptional.hpp"

#include <algorithm>
#include <set>

#include "zzq/error.hpp"
#include "zzq/hom.hpp"

namespace zzq {

namespace {

constexpr std::uint64_t kMapBound = 4096;
constexpr int kMapSamples = 256;

}  // namespace

bool is_exceptional(const Workspace& ws, const Label& m) { return ws.hom(m, m) == 1 && ws.ext_self_orthogonal(m); }

std::vector<Label> exceptional_modules(const Workspace& ws) {
  std::vector<Label> out;
  for (const auto& e : ws.catalog().entries())
    if (is_exceptional(ws, e.label)) out.push_back(e.label);
  return out;
}

bool may_follow(const Workspace& ws, const Label& earlier, const Label& later) {
  const std::size_t bound = ws.vanishing_bound(later);
  const auto e = ws.ext(later, earlier, bound);
  return std::all_of(e.begin(), e.end(), [](std::size_t d) { return d == 0; });
}

namespace {

struct FollowGraph {
  std::vector<Label> nodes;
  std::vector<std::vector<bool>> follows;  // follows[a][b]: b may come after a
};

FollowGraph sequence_graph(const Workspace& ws) {
  FollowGraph g;
  g.nodes = exceptional_modules(ws);
  const std::size_t m = g.nodes.size();
  g.follows.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      g.follows[a][b] = a != b && may_follow(ws, g.nodes[a], g.nodes[b]);
  return g;
}

template <class Visit>
void walk(const FollowGraph& g, std::vector<std::size_t>& seq, std::size_t length, Visit&& visit) {
  if (seq.size() == length) {
    visit(seq);
    return;
  }
  for (std::size_t c = 0; c < g.nodes.size(); ++c) {
    bool ok = true;
    for (auto s : seq) ok = ok && g.follows[s][c];
    if (!ok) continue;
    seq.push_back(c);
    walk(g, seq, length, visit);
    seq.pop_back();
  }
}

}  // namespace

std::vector<ExceptionalSequence> enumerate_exceptional_sequences(const Workspace& ws, std::size_t length,
                                                                 bool full_only) {
  if (ws.algebra().kind() != AlgebraKind::B && ws.algebra().kind() != AlgebraKind::C)
    throw UnsupportedKind("exceptional sequences need kind B or C");
  std::vector<ExceptionalSequence> out;
  if (length == 0) return out;
  if (full_only && length != static_cast<std::size_t>(ws.n())) return out;
  const FollowGraph g = sequence_graph(ws);
  std::vector<std::size_t> seq;
  walk(g, seq, length, [&](const std::vector<std::size_t>& idx) {
    ExceptionalSequence s;
    for (auto i : idx) s.push_back(g.nodes[i]);
    if (!full_only || is_full_sequence(ws, s)) out.push_back(std::move(s));
  });
  return out;
}

std::size_t max_exceptional_length(const Workspace& ws) {
  const FollowGraph g = sequence_graph(ws);
  std::size_t best = 0;
  auto grow = [&](auto&& self, std::vector<std::size_t>& seq) -> void {
    best = std::max(best, seq.size());
    for (std::size_t c = 0; c < g.nodes.size(); ++c) {
      bool ok = true;
      for (auto s : seq) ok = ok && g.follows[s][c];
      if (!ok) continue;
      seq.push_back(c);
      self(self, seq);
      seq.pop_back();
    }
  };
  std::vector<std::size_t> seq;
  grow(grow, seq);
  return best;
}

std::vector<Label> generation_closure(const Workspace& ws, const ExceptionalSequence& seq, bool* exhaustive) {
  std::set<Label> closure;
  for (const auto& l : seq) closure.insert(ws.canonical(l));
  bool complete = true;
  std::set<std::pair<Label, Label>> done;
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Label> current(closure.begin(), closure.end());
    for (const auto& a : current)
      for (const auto& b : current) {
        if (!done.insert({a, b}).second) continue;
        const Representation& x = ws.module(a);
        const Representation& y = ws.module(b);
        const HomSpace space = hom_basis(x, y);
        if (space.dim() == 0) continue;
        std::vector<Representation> found;
        const bool all = visit_homs(space, x, y, kMapBound, kMapSamples, ws.search().seed, [&](const Morphism& f) {
          if (f.is_zero()) return false;
          if (is_injective(f, x)) found.push_back(cokernel(f, y).module);
          if (is_surjective(f, y)) found.push_back(kernel(f, x).module);
          return false;
        });
        complete = complete && all;
        for (const auto& r : found)
          if (!r.is_zero())
            for (const auto& l : ws.labels_of(r)) grew = closure.insert(l).second || grew;
      }
  }
  if (exhaustive) *exhaustive = complete;
  return {closure.begin(), closure.end()};
}

bool is_full_sequence(const Workspace& ws, const ExceptionalSequence& seq) {
  if (seq.size() != static_cast<std::size_t>(ws.n())) return false;
  bool exhaustive = true;
  const auto closure = generation_closure(ws, seq, &exhaustive);
  bool all_simples = true;
  for (int v = 1; v <= ws.n(); ++v)
    all_simples = all_simples && std::binary_search(closure.begin(), closure.end(), ws.canonical(Label::simple(v)));
  if (all_simples) return true;
  if (!exhaustive) throw IndeterminateFullness("generation closure missed a simple module with sampled Hom spaces");
  return false;
}

}  // namespace zzq
