#pragma once
#include <optional>
#include <variant>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

struct Embedding {
    std::vector<int> map;  // pattern vertex i -> host vertex map[i], injective
    std::optional<Color> color;  // engaged when the host is a coloring
};

// thrown by sparse_subset when the host turns out to contain the pattern;
// carries the copy as evidence
struct pattern_present_error : precondition_error {
    explicit pattern_present_error(std::vector<int> w)
        : precondition_error("host contains the pattern"), witness(std::move(w)) {}
    std::vector<int> witness;
};

struct SparsePairWitness {
    Bitset X, Y;
    Density density;
};

struct SparsityParams {
    Rat eps;
    int delta = 0;  // pattern max degree
    int n = 0;      // pattern order
    Rat rho;        // eps^delta / (delta+1)
    long h = 0;     // ceil(log2(2/eps))
    static SparsityParams make(const Rat& eps, const Graph& pattern);
};

// complete backtracking search for a color-preserving copy of the pattern,
// optionally confined to `allowed`.  Isolated pattern vertices are placed
// last on the smallest unused hosts.
std::optional<Embedding> find_mono_copy(const TwoColoring& c, Color color, const Graph& pattern);
std::optional<Embedding> find_mono_copy_in(const TwoColoring& c, Color color,
                                           const Graph& pattern, const Bitset& allowed);

// same search against a plain graph host
std::optional<std::vector<int>> embed_in_graph(const Graph& host, const Graph& pattern,
                                               const Bitset& allowed);

// confirm a claimed monochromatic copy edge by edge (injectivity, range and
// one host color for every pattern edge); throws ramsey::error on any defect
void check_mono_copy(const TwoColoring& c, const Graph& pattern, const Embedding& e);

using EmbedOrSparse = std::variant<Embedding, SparsePairWitness>;

// either a copy of the pattern in the host or a verified (rho, eps)-sparse
// pair with |X| = |Y| >= ceil(rho * |host|).  Below the order threshold
// (delta+1) * eps^{-delta} * n a declared_failure may be thrown instead.
EmbedOrSparse embed_or_sparse_pair(const Graph& host, const Graph& pattern, const Rat& eps);
EmbedOrSparse embed_or_sparse_pair_in(const Graph& host, const Graph& pattern, const Rat& eps,
                                      const Bitset& U);

// subset S with edge density <= eps (hard assertion on every return path),
// built by the depth-h refinement over embed_or_sparse_pair at eps/8.
// Throws pattern_present_error when a copy of the pattern is discovered.
Bitset sparse_subset(const Graph& host, const Graph& pattern, const Rat& eps);
Bitset sparse_subset_in(const Graph& host, const Graph& pattern, const Rat& eps,
                        const Bitset& U0, bool verify_pattern_free);

}  // namespace ramsey
