#include "ramsey/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

void Graph::add_edge(int u, int v) {
    if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw parse_error("edge endpoint out of range");
    if (adj_[u].test(v)) throw parse_error("duplicate edge");
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

long Graph::edges_within(const Bitset& U) const {
    long twice = 0;
    for (int v = U.first(); v != -1; v = U.next(v)) twice += adj_[v].count_and(U);
    return twice / 2;
}

long Graph::edges_between(const Bitset& X, const Bitset& Y) const {
    long e = 0;
    for (int v = X.first(); v != -1; v = X.next(v)) e += adj_[v].count_and(Y);
    return e;
}

Graph Graph::induced(const Bitset& U, std::vector<int>* orig) const {
    std::vector<int> verts = U.members();
    Graph h((int)verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adj_[verts[i]].test(verts[j])) h.add_edge((int)i, (int)j);
    if (orig) *orig = std::move(verts);
    return h;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Density edge_density(const Graph& g, const Bitset& U) {
    Int k = U.count();
    if (k < 2) throw precondition_error("edge_density: |U| < 2");
    return Rat(Int(g.edges_within(U)), k * (k - 1) / 2);
}

Density pair_density(const Graph& g, const Bitset& X, const Bitset& Y) {
    if (X.intersects(Y)) throw precondition_error("pair_density: sets overlap");
    Int sx = X.count(), sy = Y.count();
    if (sx == 0 || sy == 0) throw precondition_error("pair_density: empty set");
    return Rat(Int(g.edges_between(X, Y)), sx * sy);
}

int degeneracy(const Graph& g) {
    Bitset alive = Bitset::full(g.n());
    int best = 0;
    for (int left = g.n(); left > 0; --left) {
        int pick = -1, pickdeg = 0;
        for (int v = alive.first(); v != -1; v = alive.next(v)) {
            int d = g.degree_in(v, alive);
            if (pick == -1 || d < pickdeg) {  // ties keep the smaller index
                pick = v;
                pickdeg = d;
            }
        }
        best = std::max(best, pickdeg);
        alive.reset(pick);
    }
    return best;
}

PatternSplit top_degree_split(const Graph& g, int s) {
    if (s < 0 || s > g.n()) throw precondition_error("top_degree_split: bad size");
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);  // stable: equal degrees keep index order
    });
    PatternSplit out;
    out.A.assign(order.begin(), order.begin() + s);
    std::sort(out.A.begin(), out.A.end());
    Bitset rest = Bitset::full(g.n());
    for (int v : out.A) rest.reset(v);
    out.gprime = g.induced(rest, &out.prime_orig);
    out.delta_gprime = out.gprime.max_degree();
    // degree bound: s+1 vertices of degree > 2m/s would exceed total degree 2m
    if (s >= 1 && (long)out.delta_gprime * s > 2 * g.m())
        throw error("top_degree_split: degree bound violated (internal)");
    return out;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> t;
    std::string w;
    while (ss >> w) t.push_back(w);
    return t;
}

long parse_count(const std::string& s, int lineno, const char* what) {
    if (s.empty() || s.size() > 18)
        throw parse_error("line " + std::to_string(lineno) + ": bad " + what + " '" + s + "'");
    for (char ch : s)
        if (!isdigit((unsigned char)ch))
            throw parse_error("line " + std::to_string(lineno) + ": bad " + what + " '" + s +
                              "'");
    return std::stol(s);
}

int parse_index(const std::string& s, int n, int lineno) {
    long v = parse_count(s, lineno, "vertex");
    if (v < 1 || v > n)
        throw parse_error("line " + std::to_string(lineno) + ": vertex " + s +
                          " out of range 1.." + std::to_string(n));
    return (int)(v - 1);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long declared_m = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (have_header || t.size() != 4 || t[1] != "edge")
                throw parse_error("line " + std::to_string(lineno) + ": expected 'p edge <n> <m>'");
            int n = (int)parse_count(t[2], lineno, "order");
            declared_m = parse_count(t[3], lineno, "edge count");
            g = Graph(n);
            have_header = true;
        } else if (t[0] == "e") {
            if (!have_header)
                throw parse_error("line " + std::to_string(lineno) + ": edge before header");
            if (t.size() != 3)
                throw parse_error("line " + std::to_string(lineno) + ": expected 'e <u> <v>'");
            int u = parse_index(t[1], g.n(), lineno);
            int v = parse_index(t[2], g.n(), lineno);
            try {
                g.add_edge(u, v);
            } catch (const parse_error& e) {
                throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
            }
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown record '" + t[0] + "'");
        }
    }
    if (!have_header) throw parse_error("missing 'p edge' header");
    if (g.m() != declared_m)
        throw parse_error("edge count " + std::to_string(g.m()) + " does not match header " +
                          std::to_string(declared_m));
    return g;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.adj(u).next(u); v != -1; v = g.adj(u).next(v))
            out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

}  // namespace ramsey
