#include "ramsey/clique.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

struct Searcher {
    const std::vector<Bitset>& adj;
    int cap;
    Bitset best;
    bool capped = false;

    // number of greedy color classes of P: a clique meets each class at most
    // once, so |R| + classes bounds every clique below this node
    int color_bound(const Bitset& P) const {
        std::vector<Bitset> cls;
        for (int v = P.first(); v != -1; v = P.next(v)) {
            bool placed = false;
            for (auto& c : cls)
                if (!c.intersects(adj[v])) {
                    c.set(v);
                    placed = true;
                    break;
                }
            if (!placed) {
                cls.emplace_back(P.universe());
                cls.back().set(v);
            }
        }
        return (int)cls.size();
    }

    void expand(Bitset& R, Bitset P) {
        if (capped) return;
        int rsize = R.count();
        if (rsize >= cap) {
            best = R;
            capped = true;
            return;
        }
        if (P.empty()) {
            if (rsize > best.count()) best = R;  // strict: keeps first maximum
            return;
        }
        if (rsize + color_bound(P) <= best.count()) return;
        for (int v = P.first(); v != -1; v = P.next(v)) {
            if (capped) return;
            if (rsize + P.count() <= best.count()) return;
            R.set(v);
            expand(R, P & adj[v]);
            R.reset(v);
            P.reset(v);
        }
    }
};

}  // namespace

Bitset max_clique(const std::vector<Bitset>& adj, const Bitset& U, int cap) {
    if (cap < 1) throw precondition_error("max_clique: cap must be >= 1");
    Searcher s{adj, cap, Bitset(U.universe())};
    Bitset R(U.universe());
    s.expand(R, U);
    return s.best;
}

Bitset max_clique(const Graph& g, const Bitset& U, int cap) {
    std::vector<Bitset> adj;
    adj.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) adj.push_back(g.adj(v));
    return max_clique(adj, U, cap);
}

Bitset max_blue_clique(const TwoColoring& c, const Bitset& U, int cap) {
    std::vector<Bitset> blue;
    blue.reserve(c.N());
    for (int v = 0; v < c.N(); ++v) blue.push_back(c.blue_nbrs(v) & U);
    return max_clique(blue, U, cap);
}

}  // namespace ramsey
