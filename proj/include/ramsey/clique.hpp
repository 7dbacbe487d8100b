#pragma once
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

// branch-and-bound maximum clique over explicit adjacency rows, restricted to
// U.  Expansion order is ascending vertex index with remove-after-explore and
// strict-improvement updates, so the result is the lexicographically least
// maximum clique.  With cap <= |U| reachable, returns the first clique of size
// cap found instead (early exit; any cap-sized clique suffices).
Bitset max_clique(const std::vector<Bitset>& adj, const Bitset& U, int cap);

Bitset max_clique(const Graph& g, const Bitset& U, int cap);

// blue clique of size >= cap in U, or the maximum blue clique when none
Bitset max_blue_clique(const TwoColoring& c, const Bitset& U, int cap);

}  // namespace ramsey
