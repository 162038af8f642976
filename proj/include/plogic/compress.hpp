#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plogic/worlds.hpp"

namespace plogic {

// If `a` and `b` agree everywhere except one position holding t in one and
// f in the other (dc only agrees with dc), returns the common world with dc
// at that position. Throws std::invalid_argument on a length mismatch.
std::optional<World> merge_pair(const World& a, const World& b);

struct CompressionStats {
  std::size_t worlds_before = 0;
  std::size_t worlds_after = 0;
  std::size_t merges = 0;
  // Passes run, including the final pass that found nothing to merge.
  std::size_t passes = 0;
};

// Greedy pairwise merging until a fixpoint. Each pass scans pairs (i, j),
// i < j, in index order; a world takes part in at most one merge per pass
// and the merged world takes the place of the first partner. The result's
// expansions partition the input's expansion set.
//
// Requires pairwise-disjoint expansions in the input (std::invalid_argument
// otherwise).
Tableau compress_tableau(const Tableau& t, CompressionStats* stats = nullptr);

// True iff `compressed` has pairwise-disjoint expansions whose union is the
// expansion set of `original`. Throws std::invalid_argument when the
// sentence lists differ.
bool verify_equivalence(const Tableau& original, const Tableau& compressed);

// For each world of a dc-free `original`, the index of the compressed world
// whose expansion contains it. Throws std::invalid_argument if some world is
// not covered.
std::vector<std::size_t> covering_worlds(const Tableau& original, const Tableau& compressed);

// Sums original world weights into their covering compressed worlds.
std::vector<double> project_weights(const std::vector<double>& weights,
                                    const std::vector<std::size_t>& cover,
                                    std::size_t compressed_count);

}  // namespace plogic
