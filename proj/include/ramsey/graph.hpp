#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/bits.hpp"
#include "ramsey/numbers.hpp"

namespace ramsey {

// densities are exact rationals end to end; all threshold tests cross-multiply
using Density = Rat;

class Graph {
  public:
    Graph() : n_(0), m_(0) {}
    explicit Graph(int n) : n_(n), m_(0), adj_(n, Bitset(n)) {}

    int n() const { return n_; }
    long m() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    const Bitset& adj(int v) const { return adj_[v]; }

    int degree(int v) const { return adj_[v].count(); }
    int degree_in(int v, const Bitset& U) const { return adj_[v].count_and(U); }
    int max_degree() const;

    long edges_within(const Bitset& U) const;
    long edges_between(const Bitset& X, const Bitset& Y) const;

    // induced subgraph reindexed to 0..|U|-1; orig (if given) receives the
    // original index of each new vertex, ascending
    Graph induced(const Bitset& U, std::vector<int>* orig = nullptr) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    static Graph complete(int n);
    static Graph empty_graph(int n) { return Graph(n); }
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete_bipartite(int a, int b);

  private:
    int n_;
    long m_;
    std::vector<Bitset> adj_;
};

// d(U) = e(U) / C(|U|,2); |U| >= 2 required
Density edge_density(const Graph& g, const Bitset& U);
// d(X,Y) = e(X,Y) / (|X||Y|); X, Y disjoint and nonempty
Density pair_density(const Graph& g, const Bitset& X, const Bitset& Y);

// least d such that peeling minimum-degree vertices never sees degree > d
int degeneracy(const Graph& g);

struct PatternSplit {
    std::vector<int> A;         // the s vertices of largest degree, ascending
    Graph gprime;               // induced subgraph on the rest, reindexed
    std::vector<int> prime_orig;  // gprime vertex i == original vertex prime_orig[i]
    int delta_gprime = 0;
};

// A = s largest-degree vertices (ties toward smaller index); guarantees
// delta_gprime <= 2m/s for s >= 1
PatternSplit top_degree_split(const Graph& g, int s);

// text format: `c` comments, `p edge <n> <m>`, `e <u> <v>` (1-indexed)
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace ramsey
