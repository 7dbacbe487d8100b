#pragma once
#include <optional>
#include <string>

#include "ramsey/coloring.hpp"

namespace ramsey {

struct ArrowResult {
    int N = 0;
    std::string pattern;  // descriptor "n=<order> m=<edges>"
    bool arrows = false;
    std::optional<TwoColoring> witness;  // engaged iff !arrows; verified copy-free
    long nodes_visited = 0;              // DFS nodes, for the exhaustiveness record
};

// decide whether every 2-coloring of K_N contains a monochromatic copy of the
// pattern: DFS over edges in lex order, blue branch first, pruning a branch as
// soon as a monochromatic copy is complete among the colored edges, with
// isomorphism rejection at row boundaries (canonical form over the boundary
// stabilizer Sym(head) x Sym(tail)).  The witness, when one exists, is the
// first copy-free completion in DFS order.
ArrowResult arrows(int N, const Graph& pattern, long max_edges = 30);

// least N <= N_max with arrows(N) true (every smaller N verified false along
// the way); nullopt when no such N
std::optional<int> ramsey_number_exact(const Graph& pattern, int N_max,
                                       long max_edges = 30);

}  // namespace ramsey
