#pragma once

#include <vector>

#include "zzq/workspace.hpp"

namespace zzq {

using ExceptionalSequence = std::vector<Label>;

/// End(m) = k and Ext^k(m, m) = 0 for k >= 1.
bool is_exceptional(const Workspace& ws, const Label& m);

/// Catalog labels of the exceptional modules, in label order.
std::vector<Label> exceptional_modules(const Workspace& ws);

/// Hom(later, earlier) = 0 and Ext^k(later, earlier) = 0 for all k.
bool may_follow(const Workspace& ws, const Label& earlier, const Label& later);

/// Exceptional sequences of exactly `length` catalog modules, in lexicographic
/// order of label tuples. With full_only, only sequences of length n that pass
/// is_full_sequence.
std::vector<ExceptionalSequence> enumerate_exceptional_sequences(const Workspace& ws, std::size_t length,
                                                                 bool full_only);

/// Length of the longest exceptional sequence.
std::size_t max_exceptional_length(const Workspace& ws);

/// Length n, and the closure of the members under kernels of epimorphisms and
/// cokernels of monomorphisms (and direct summands) contains every simple.
/// Throws IndeterminateFullness when the closure misses a simple after a search
/// over sampled rather than complete Hom spaces.
bool is_full_sequence(const Workspace& ws, const ExceptionalSequence& seq);

/// The closure used by is_full_sequence, as sorted catalog labels.
std::vector<Label> generation_closure(const Workspace& ws, const ExceptionalSequence& seq, bool* exhaustive = nullptr);

}  // namespace zzq
