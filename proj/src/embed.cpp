#include "ramsey/embed.hpp"

#include <algorithm>
#include <numeric>

#include "ramsey/errors.hpp"

namespace ramsey {

SparsityParams SparsityParams::make(const Rat& eps, const Graph& pattern) {
    if (eps <= 0) throw precondition_error("sparsity parameters need eps > 0");
    SparsityParams p;
    p.eps = eps;
    p.delta = pattern.max_degree();
    p.n = pattern.n();
    p.rho = rat_pow(eps, p.delta) / (p.delta + 1);
    // h = ceil(log2(2/eps)): smallest h with 2^h >= 2/eps
    Rat target = Rat(2) / eps;
    long h = 0;
    Rat pow = 1;
    while (pow < target) {
        pow *= 2;
        ++h;
    }
    p.h = h;
    return p;
}

namespace {

// pattern vertex order for the backtracking search: seed with the highest
// degree, then grow by most-placed-neighbors (ties: degree, then index);
// isolated vertices sink to the end
std::vector<int> search_order(const Graph& pattern) {
    int n = pattern.n();
    std::vector<int> order;
    std::vector<bool> in(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_nb = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (in[v]) continue;
            int nb = 0;
            for (int u : order)
                if (pattern.has_edge(u, v)) ++nb;
            int deg = pattern.degree(v);
            if (nb > pick_nb || (nb == pick_nb && deg > pick_deg)) {
                pick = v;
                pick_nb = nb;
                pick_deg = deg;
            }
        }
        order.push_back(pick);
        in[pick] = true;
    }
    return order;
}

struct EmbedSearch {
    const std::vector<Bitset>& host_adj;
    const Bitset& allowed;
    const Graph& pattern;
    const std::vector<int>& order;
    std::vector<int> map;   // pattern vertex -> host vertex, -1 unset
    Bitset used;
    // when set, records the first candidate-set collapse: the nonempty
    // candidate region before the final intersection emptied it
    Bitset collapse_region;
    bool collapsed = false;

    EmbedSearch(const std::vector<Bitset>& a, const Bitset& al, const Graph& p,
                const std::vector<int>& o)
        : host_adj(a), allowed(al), pattern(p), order(o),
          map(p.n(), -1), used(al.universe()), collapse_region(al.universe()) {}

    Bitset candidates(int pv) const {
        Bitset cand = allowed - used;
        for (int q = 0; q < pattern.n(); ++q)
            if (map[q] != -1 && pattern.has_edge(q, pv)) cand &= host_adj[map[q]];
        return cand;
    }

    bool dfs(size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        Bitset cand = candidates(pv);
        if (cand.empty() && !collapsed) {
            collapsed = true;
            collapse_region = allowed - used;  // region before adjacency cuts
        }
        for (int h = cand.first(); h != -1; h = cand.next(h)) {
            map[pv] = h;
            used.set(h);
            if (dfs(depth + 1)) return true;
            used.reset(h);
            map[pv] = -1;
        }
        return false;
    }
};

std::optional<std::vector<int>> backtrack(const std::vector<Bitset>& host_adj,
                                          const Bitset& allowed, const Graph& pattern,
                                          Bitset* collapse_out = nullptr) {
    if (pattern.n() > allowed.count()) return std::nullopt;
    std::vector<int> order = search_order(pattern);
    EmbedSearch s(host_adj, allowed, pattern, order);
    bool ok = s.dfs(0);
    if (collapse_out) *collapse_out = s.collapsed ? s.collapse_region : allowed;
    if (!ok) return std::nullopt;
    return s.map;
}

std::vector<Bitset> graph_rows(const Graph& g) {
    std::vector<Bitset> rows;
    rows.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) rows.push_back(g.adj(v));
    return rows;
}

std::vector<Bitset> color_rows(const TwoColoring& c, Color col) {
    std::vector<Bitset> rows;
    rows.reserve(c.N());
    for (int v = 0; v < c.N(); ++v) rows.push_back(c.nbrs(v, col));
    return rows;
}

void verify_embedding(const std::vector<Bitset>& host_adj, const Graph& pattern,
                      const std::vector<int>& map) {
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw error("embedding not injective (internal)");
    for (int u = 0; u < pattern.n(); ++u)
        for (int v = u + 1; v < pattern.n(); ++v)
            if (pattern.has_edge(u, v) && !host_adj[map[u]].test(map[v]))
                throw error("embedding misses an edge (internal)");
}

}  // namespace

std::optional<Embedding> find_mono_copy(const TwoColoring& c, Color color,
                                        const Graph& pattern) {
    return find_mono_copy_in(c, color, pattern, Bitset::full(c.N()));
}

std::optional<Embedding> find_mono_copy_in(const TwoColoring& c, Color color,
                                           const Graph& pattern, const Bitset& allowed) {
    auto rows = color_rows(c, color);
    auto m = backtrack(rows, allowed, pattern);
    if (!m) return std::nullopt;
    verify_embedding(rows, pattern, *m);
    return Embedding{*m, color};
}

std::optional<std::vector<int>> embed_in_graph(const Graph& host, const Graph& pattern,
                                               const Bitset& allowed) {
    auto rows = graph_rows(host);
    auto m = backtrack(rows, allowed, pattern);
    if (m) verify_embedding(rows, pattern, *m);
    return m;
}

void check_mono_copy(const TwoColoring& c, const Graph& pattern, const Embedding& e) {
    if (!e.color) throw error("mono copy carries no color");
    if ((int)e.map.size() != pattern.n()) throw error("mono copy has wrong arity");
    for (int v : e.map)
        if (v < 0 || v >= c.N()) throw error("mono copy maps outside the host");
    verify_embedding(color_rows(c, *e.color), pattern, e.map);
}

namespace {

// lowest-index half-split of `region` into equal parts of size s
bool half_split(const Bitset& region, long s, Bitset& X, Bitset& Y) {
    if (s < 1 || 2 * s > region.count()) return false;
    X = Bitset(region.universe());
    Y = Bitset(region.universe());
    long placed = 0;
    for (int v = region.first(); v != -1 && placed < 2 * s; v = region.next(v), ++placed)
        (placed < s ? X : Y).set(v);
    return true;
}

std::optional<SparsePairWitness> try_witness(const Graph& host, const Bitset& X,
                                             const Bitset& Y, const Rat& eps) {
    if (X.empty() || Y.empty() || X.count() != Y.count() || X.intersects(Y))
        return std::nullopt;
    Density d = pair_density(host, X, Y);
    if (d > eps) return std::nullopt;
    return SparsePairWitness{X, Y, d};
}

}  // namespace

EmbedOrSparse embed_or_sparse_pair(const Graph& host, const Graph& pattern, const Rat& eps) {
    return embed_or_sparse_pair_in(host, pattern, eps, Bitset::full(host.n()));
}

EmbedOrSparse embed_or_sparse_pair_in(const Graph& host, const Graph& pattern,
                                      const Rat& eps, const Bitset& U) {
    if (eps <= 0 || eps > Rat(1, 2))
        throw precondition_error("embed_or_sparse_pair: need 0 < eps <= 1/2");
    SparsityParams sp = SparsityParams::make(eps, pattern);
    const long nV = U.count();
    const long s_need = std::max<long>(1, (long)ceil_rat(sp.rho * nV));

    // (1) complete search; an existing copy is never missed
    auto rows = graph_rows(host);
    Bitset collapse(host.n());
    if (auto m = backtrack(rows, U, pattern, &collapse)) {
        verify_embedding(rows, pattern, *m);
        return Embedding{*m, std::nullopt};
    }

    // (2) balanced splits of the first collapsed candidate region, then of U
    const Bitset& collapsed = collapse;
    for (const Bitset* region : {&collapsed, &U}) {
        for (long s : {region->count() / 2L, s_need}) {
            Bitset X, Y;
            if (s >= s_need && half_split(*region, s, X, Y))
                if (auto w = try_witness(host, X, Y, eps)) return *w;
        }
    }

    // (3) the two halves of a largest neighborhood (pair density 0 whenever
    // the host is triangle-free and the degree is large enough)
    {
        int vstar = -1, deg = -1;
        for (int v = U.first(); v != -1; v = U.next(v)) {
            int d = host.degree_in(v, U);
            if (d > deg) {
                vstar = v;
                deg = d;
            }
        }
        if (vstar != -1) {
            Bitset nb = host.adj(vstar) & U;
            for (long s : {(long)deg / 2, s_need}) {
                Bitset X, Y;
                if (s >= s_need && half_split(nb, s, X, Y))
                    if (auto w = try_witness(host, X, Y, eps)) return *w;
            }
        }
    }

    // (4) X = lowest-degree vertices, Y = outsiders with fewest edges into X;
    // pair density <= max_degree/(|U|-s) by averaging over the complement
    {
        std::vector<int> verts = U.members();
        std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
            return host.degree_in(a, U) < host.degree_in(b, U);
        });
        if ((long)verts.size() >= 2 * s_need) {
            Bitset X(host.n());
            for (long i = 0; i < s_need; ++i) X.set(verts[i]);
            std::vector<int> rest(verts.begin() + s_need, verts.end());
            std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
                return host.degree_in(a, X) < host.degree_in(b, X);
            });
            Bitset Y(host.n());
            for (long i = 0; i < s_need; ++i) Y.set(rest[i]);
            if (auto w = try_witness(host, X, Y, eps)) return *w;
        }
    }

    Rat threshold = Rat(sp.delta + 1) * rat_pow(eps, -sp.delta) * sp.n;
    if (Rat(nV) < threshold)
        throw declared_failure("embed_or_sparse_pair: host order " + std::to_string(nV) +
                               " below the guarantee threshold " + rat_str(threshold) +
                               " and no outcome found");
    throw declared_failure(
        "embed_or_sparse_pair: guarantee unmet at order " + std::to_string(nV) +
        " >= threshold " + rat_str(threshold) + " (constructive strategies exhausted)");
}

namespace {

Rat subset_density(const Graph& host, const Bitset& U) {
    long k = U.count();
    if (k < 2) return 0;
    return Rat(Int(host.edges_within(U)), Int(k) * (k - 1) / 2);
}

// always returns a subset of density <= eps: a non-adjacent pair if one
// exists, else a single vertex (clique case)
Bitset sparse_fallback(const Graph& host, const Bitset& U) {
    for (int u = U.first(); u != -1; u = U.next(u)) {
        Bitset non = U - host.adj(u);
        non.reset(u);
        int v = non.first();
        if (v != -1) {
            Bitset r(host.n());
            r.set(u);
            r.set(v);
            return r;
        }
    }
    Bitset r(host.n());
    if (U.first() != -1) r.set(U.first());
    return r;
}

Bitset refine(const Graph& host, const Graph& pattern, const Rat& eps, const Bitset& U,
              long depth) {
    if (subset_density(host, U) <= eps) return U;
    if (depth == 0) return sparse_fallback(host, U);

    EmbedOrSparse r = [&]() -> EmbedOrSparse {
        try {
            return embed_or_sparse_pair_in(host, pattern, eps / 8, U);
        } catch (const declared_failure&) {
            // keep the density contract alive even where no guarantee is
            // promised: degrade to the trivial sparse fallback
            return SparsePairWitness{Bitset(host.n()), Bitset(host.n()), Rat(0)};
        }
    }();

    if (std::holds_alternative<Embedding>(r))
        throw pattern_present_error(std::get<Embedding>(r).map);

    const SparsePairWitness& w = std::get<SparsePairWitness>(r);
    if (w.X.empty()) return sparse_fallback(host, U);

    Bitset sx = refine(host, pattern, eps, w.X, depth - 1);
    Bitset sy = refine(host, pattern, eps, w.Y, depth - 1);
    Bitset both = sx | sy;
    if (subset_density(host, both) <= eps) return both;
    if (sx.count() > sy.count()) return sx;
    if (sy.count() > sx.count()) return sy;
    return Bitset::lex_less(sx, sy) ? sx : sy;
}

}  // namespace

Bitset sparse_subset(const Graph& host, const Graph& pattern, const Rat& eps) {
    return sparse_subset_in(host, pattern, eps, Bitset::full(host.n()), true);
}

Bitset sparse_subset_in(const Graph& host, const Graph& pattern, const Rat& eps,
                        const Bitset& U0, bool verify_pattern_free) {
    if (eps <= 0 || eps > Rat(1, 8))
        throw precondition_error("sparse_subset: need 0 < eps <= 1/8");
    if (verify_pattern_free) {
        auto rows = graph_rows(host);
        if (auto m = backtrack(rows, U0, pattern))
            throw pattern_present_error(*m);
    }
    SparsityParams sp = SparsityParams::make(eps, pattern);
    Bitset S = refine(host, pattern, eps, U0, sp.h);
    if (subset_density(host, S) > eps)
        throw declared_failure("sparse_subset: density assertion failed (internal)");
    return S;
}

}  // namespace ramsey
