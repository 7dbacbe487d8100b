#include "ramsey/arrows.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ramsey/embed.hpp"

namespace ramsey {

namespace {

struct ArrowSearch {
    int N;
    const Graph& pat;
    std::vector<std::pair<int, int>> edges;      // lex order (0,1),(0,2),...
    std::vector<std::pair<int, int>> pat_edges;  // anchors for the copy check
    std::vector<Bitset> radj, badj;              // partial coloring, by color
    std::vector<char> colors;                    // 1 = red, per edge index
    std::vector<std::unordered_set<std::string>> seen;  // per row boundary
    std::optional<TwoColoring> witness;
    long nodes = 0;

    ArrowSearch(int N_, const Graph& pat_) : N(N_), pat(pat_) {
        for (int u = 0; u < N; ++u)
            for (int v = u + 1; v < N; ++v) edges.emplace_back(u, v);
        for (int p = 0; p < pat.n(); ++p)
            for (int q = p + 1; q < pat.n(); ++q)
                if (pat.has_edge(p, q)) pat_edges.emplace_back(p, q);
        radj.assign(N, Bitset(N));
        badj.assign(N, Bitset(N));
        colors.assign(edges.size(), 0);
        seen.resize(N);
    }

    // complete the partial embedding over the one-color rows; vertices are
    // filled in ascending pattern index, already-placed ones skipped
    bool extend(std::vector<int>& map, Bitset& used, int next,
                const std::vector<Bitset>& rows) {
        while (next < pat.n() && map[next] >= 0) ++next;
        if (next == pat.n()) return true;
        Bitset cand = used.complement();
        for (int p = 0; p < pat.n(); ++p)
            if (map[p] >= 0 && pat.has_edge(p, next)) cand &= rows[map[p]];
        for (int h = cand.first(); h >= 0; h = cand.next(h)) {
            map[next] = h;
            used.set(h);
            if (extend(map, used, next + 1, rows)) return true;
            map[next] = -1;
            used.reset(h);
        }
        return false;
    }

    // is there a monochromatic copy of the pattern, in the color just used,
    // whose image contains the new edge (u,v)?  Such a copy survives every
    // completion, so the branch is dead.
    bool completes_copy(Color col, int u, int v) {
        const std::vector<Bitset>& rows = col == Color::red ? radj : badj;
        std::vector<int> map(pat.n(), -1);
        Bitset used(N);
        for (auto [p, q] : pat_edges) {
            const int ends[2][2] = {{u, v}, {v, u}};
            for (auto& e : ends) {
                map.assign(pat.n(), -1);
                used = Bitset(N);
                map[p] = e[0];
                map[q] = e[1];
                used.set(e[0]);
                used.set(e[1]);
                if (extend(map, used, 0, rows)) return true;
            }
        }
        return false;
    }

    // canonical encoding of the colored region after finishing row u: the
    // lex-least red bitstring over relabelings that keep {0..u} and the rest
    // setwise fixed (exactly the permutations preserving the colored slots)
    std::string canonical_at_row(int u) {
        std::vector<int> ph(u + 1), pt(N - u - 1);
        std::iota(ph.begin(), ph.end(), 0);
        std::iota(pt.begin(), pt.end(), u + 1);
        std::string best;
        do {
            do {
                std::string enc;
                enc.reserve((edges.size() + 7) / 8);
                unsigned char cur = 0;
                int nb = 0;
                for (int a = 0; a <= u; ++a) {
                    int oa = ph[a];
                    for (int b = a + 1; b < N; ++b) {
                        int ob = b <= u ? ph[b] : pt[b - u - 1];
                        cur = (unsigned char)((cur << 1) | (radj[oa].test(ob) ? 1 : 0));
                        if (++nb == 8) {
                            enc.push_back((char)cur);
                            cur = 0;
                            nb = 0;
                        }
                    }
                }
                if (nb) enc.push_back((char)(cur << (8 - nb)));
                if (best.empty() || enc < best) best = std::move(enc);
            } while (std::next_permutation(pt.begin(), pt.end()));
        } while (std::next_permutation(ph.begin(), ph.end()));
        return best;
    }

    // true once a copy-free completion is found (witness stored)
    bool dfs(std::size_t idx) {
        ++nodes;
        if (idx == edges.size()) {
            Graph red(N);
            for (std::size_t k = 0; k < edges.size(); ++k)
                if (colors[k]) red.add_edge(edges[k].first, edges[k].second);
            witness = TwoColoring(std::move(red));
            return true;
        }
        auto [u, v] = edges[idx];
        for (int c = 0; c < 2; ++c) {  // blue first
            Color col = c ? Color::red : Color::blue;
            std::vector<Bitset>& rows = c ? radj : badj;
            rows[u].set(v);
            rows[v].set(u);
            colors[idx] = (char)c;
            bool dead = completes_copy(col, u, v);
            if (!dead && v == N - 1 && idx + 1 < edges.size()) {
                // row u just finished; reject isomorphic repeats
                if (!seen[u].insert(canonical_at_row(u)).second) dead = true;
            }
            if (!dead && dfs(idx + 1)) return true;
            rows[u].reset(v);
            rows[v].reset(u);
        }
        return false;
    }
};

}  // namespace

ArrowResult arrows(int N, const Graph& pattern, long max_edges) {
    if (N < 0) throw precondition_error("arrows: need N >= 0");
    ArrowResult res;
    res.N = N;
    res.pattern = "n=" + std::to_string(pattern.n()) + " m=" + std::to_string(pattern.m());

    if (pattern.n() > N) {
        // no copy can fit; the all-blue coloring is a witness
        res.arrows = false;
        res.witness = TwoColoring(Graph(N));
        res.nodes_visited = 0;
        return res;
    }
    if (pattern.m() == 0) {
        // edgeless patterns sit inside every coloring
        res.arrows = true;
        res.nodes_visited = 0;
        return res;
    }
    long E = (long)N * (N - 1) / 2;
    if (E > max_edges)
        throw resource_limit_error("arrows: C(N,2)=" + std::to_string(E) +
                                   " exceeds the exhaustive limit " +
                                   std::to_string(max_edges));

    ArrowSearch s(N, pattern);
    bool found = s.dfs(0);
    res.nodes_visited = s.nodes;
    res.arrows = !found;
    if (found) {
        // hard postcondition: the witness really is copy-free in both colors
        if (find_mono_copy(*s.witness, Color::red, pattern) ||
            find_mono_copy(*s.witness, Color::blue, pattern))
            throw error("arrows: witness failed verification (internal)");
        res.witness = std::move(s.witness);
    }
    return res;
}

std::optional<int> ramsey_number_exact(const Graph& pattern, int N_max, long max_edges) {
    for (int v = 0; v < pattern.n(); ++v)
        if (pattern.degree(v) == 0)
            throw precondition_error("ramsey_number_exact: pattern has an isolated vertex");
    for (int N = 0; N <= N_max; ++N)
        if (arrows(N, pattern, max_edges).arrows) return N;
    return std::nullopt;
}

}  // namespace ramsey
