#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "gridperm/length_histogram.hpp"
#include "gridperm/packed.hpp"
#include "gridperm/perm_set.hpp"
#include "gridperm/polynomial.hpp"

namespace gridperm {

struct ClosureOptions {
    // Threads expanding each level. Results do not depend on this.
    unsigned workers = 1;
};

// Completion and compacting: every compact τ contained in some member of
// `generators`, together with ε. Uses the packed closure when every member
// fits a packed key and the reference closure otherwise.
PermSet complete_and_compact(const PermSet& generators, const ClosureOptions& options = {});

// Deletion search over plain SignedPerm values with one visited set shared
// by all generators. Non-compact permutations are expanded but not emitted.
PermSet complete_and_compact_reference(const PermSet& generators);

// Counts of compact members of the closure by length.
LengthHistogram length_histogram(const PermSet& compact_set);

// Closure over packed keys, streamed one length at a time. Only compact
// cores are expanded: a compact τ below σ is always below the compact core
// of σ, so non-compact intermediates never need to be stored.
//
// `on_level(length, keys)` is called from the longest length down to 0 with
// the sorted, deduplicated keys of that length; the storage is released
// afterwards.
void packed_closure(std::span<const packed::Key> generators, const ClosureOptions& options,
                    const std::function<void(std::size_t, std::span<const packed::Key>)>& on_level);

LengthHistogram packed_closure_histogram(std::span<const packed::Key> generators,
                                         const ClosureOptions& options = {});

// |Grid(generators) ∩ B_n| for every n >= 1.
Polynomial enumerate(const PermSet& generators, const ClosureOptions& options = {});

// Membership of sigma in Grid(S) for S produced by complete_and_compact.
bool grid_member(const SignedPerm& sigma, const PermSet& compact_set);

}  // namespace gridperm
