#include "ramsey/extraction.hpp"

#include <algorithm>
#include <map>

#include "ramsey/clique.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/interval.hpp"

namespace ramsey {

namespace {

MonoPair es_rec(const TwoColoring& c, const Bitset& U, int k, int l) {
    if (k == 0) return {Color::red, Bitset(c.N()), U};
    if (l == 0) return {Color::blue, Bitset(c.N()), U};
    if (U.empty()) {
        // both counters positive, nothing left: only reachable when the |Y|
        // guarantee was already vacuous; a valid (if short) pair suffices
        return {Color::red, Bitset(c.N()), Bitset(c.N())};
    }
    int v = U.first();
    int nu = U.count();
    Bitset redn = c.red_nbrs(v) & U;
    int red_deg = redn.count();
    // red first: red degree >= (k/(k+l)) * (|U|-1), cross-multiplied
    if ((long)red_deg * (k + l) >= (long)k * (nu - 1)) {
        MonoPair sub = es_rec(c, redn, k - 1, l);
        if (sub.color == Color::red) sub.X.set(v);
        return sub;
    }
    Bitset bluen = U;
    bluen.reset(v);
    bluen -= redn;
    MonoPair sub = es_rec(c, bluen, k, l - 1);
    if (sub.color == Color::blue) sub.X.set(v);
    return sub;
}

}  // namespace

MonoPair es_pair(const TwoColoring& c, int k, int l) {
    return es_pair_in(c, Bitset::full(c.N()), k, l);
}

MonoPair es_pair_in(const TwoColoring& c, const Bitset& U, int k, int l) {
    if (k < 0 || l < 0) throw precondition_error("es_pair: negative counter");
    MonoPair p = es_rec(c, U, k, l);
    if (!is_mono_pair(c, p.color, p.X, p.Y))
        throw error("es_pair: postcondition violated (internal)");
    return p;
}

namespace {

// |S_R| for a candidate mask, bucket representation: (key mask, count)
long score_mask(const std::vector<std::pair<uint64_t, long>>& buckets, uint64_t rmask) {
    long s = 0;
    for (auto& [key, cnt] : buckets)
        if ((key & ~rmask) == 0) s += cnt;
    return s;
}

long score_sets(const std::vector<std::pair<Bitset, long>>& buckets, const Bitset& R) {
    long s = 0;
    for (auto& [key, cnt] : buckets)
        if (key.subset_of(R)) s += cnt;
    return s;
}

}  // namespace

Bitset choose_R(const TwoColoring& c, const Bitset& B, const Bitset& Sprime, long r,
                long exact_limit) {
    int N = c.N();
    std::vector<int> bverts = B.members();
    long bsize = (long)bverts.size();
    if (r > bsize) r = bsize;
    if (r <= 0) return Bitset(N);

    // one bucket per distinct red-neighborhood-in-B, with multiplicity
    std::map<std::vector<int>, long> bucket_map;
    for (int v = Sprime.first(); v != -1; v = Sprime.next(v))
        ++bucket_map[(c.red_nbrs(v) & B).members()];

    Int combos = binomial(bsize, r);
    if (combos <= exact_limit && bsize <= 64) {
        // compress keys to masks over B's member list
        std::vector<int> pos(N, -1);
        for (size_t i = 0; i < bverts.size(); ++i) pos[bverts[i]] = (int)i;
        std::vector<std::pair<uint64_t, long>> buckets;
        for (auto& [key, cnt] : bucket_map) {
            uint64_t m = 0;
            for (int v : key) m |= uint64_t(1) << pos[v];
            buckets.emplace_back(m, cnt);
        }
        // lexicographic enumeration of r-subsets of the sorted member list;
        // strict improvement keeps the lexicographically least maximizer
        std::vector<int> idx(r);
        for (long i = 0; i < r; ++i) idx[i] = (int)i;
        long best_score = -1;
        std::vector<int> best_idx;
        while (true) {
            uint64_t rmask = 0;
            for (int i : idx) rmask |= uint64_t(1) << i;
            long sc = score_mask(buckets, rmask);
            if (sc > best_score) {
                best_score = sc;
                best_idx = idx;
            }
            long i = r - 1;
            while (i >= 0 && idx[i] == bsize - r + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (long j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }
        Bitset R(N);
        for (int i : best_idx) R.set(bverts[i]);
        return R;
    }

    // greedy: largest buckets first (ties toward the lexicographically
    // smaller key), absorb while the union of keys still fits in r
    std::vector<std::pair<Bitset, long>> buckets;
    for (auto& [key, cnt] : bucket_map)
        buckets.emplace_back(Bitset::of(N, key), cnt);
    std::stable_sort(buckets.begin(), buckets.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return Bitset::lex_less(a.first, b.first);
    });
    Bitset R(N);
    for (auto& [key, cnt] : buckets) {
        Bitset u = R | key;
        if (u.count() <= r) R = u;
    }
    for (int v = B.first(); v != -1 && R.count() < r; v = B.next(v))
        if (!R.test(v)) R.set(v);
    // pigeonhole postcondition: an optimal R achieves |S_R| * C(|B|,r) >= |S'|
    long got = score_sets(buckets, R);
    if (Int(got) * combos < Int(Sprime.count()))
        throw declared_failure("choose_R: greedy selection below the pigeonhole bound " +
                               std::to_string(Sprime.count()) + "/C(" + std::to_string(bsize) +
                               "," + std::to_string(r) + ")");
    return R;
}

std::pair<MonoPair, EszTrace> esz_pair(const TwoColoring& c, const ExtractionParams& p) {
    return esz_pair_in(c, Bitset::full(c.N()), p);
}

std::pair<MonoPair, EszTrace> esz_pair_in(const TwoColoring& c, const Bitset& U0,
                                          const ExtractionParams& p) {
    const long N = U0.count();
    const Rat& eps = p.eps;
    if (eps <= 0) throw precondition_error("esz_pair: eps must be positive");
    if (p.t < 1) throw precondition_error("esz_pair: t must be >= 1");

    // eps is an upper bound on red density within the working set
    long red_edges = c.red().edges_within(U0);
    if (N >= 2) {
        Rat dens(Int(red_edges), Int(N) * (N - 1) / 2);
        if (dens > eps)
            throw precondition_error("esz_pair: red density " + rat_str(dens) +
                                     " exceeds eps = " + rat_str(eps));
    }

    if (p.strictness == Strictness::paper) {
        if (eps > Rat(1, 7))
            throw precondition_error("esz_pair: paper strictness needs eps <= 1/7");
        if (Rat(p.t) * eps < 1)
            throw precondition_error("esz_pair: paper strictness needs t >= 1/eps");
        // N >= t * eps^{-14 eps t}: certified with outward rounding
        XNum e(eps);
        XNum bound = XNum(Rat(p.t)) * (e.log2() * XNum(Rat(-14) * eps * p.t)).exp2();
        if (XNum(Rat(N)).ge(bound) != XNum::Cmp::yes)
            throw precondition_error(
                "esz_pair: paper strictness needs N >= t*eps^(-14*eps*t); N = " +
                std::to_string(N) + " is below (bound ~ " + bound.str() + ")");
    }

    EszTrace tr;
    tr.deletion_threshold = eps * N;

    // (1) deletion loop: while some survivor has red degree >= eps*N within
    // the survivors, delete the smallest-index one
    Bitset S = U0;
    {
        std::vector<long> deg(c.N(), 0);
        for (int v = S.first(); v != -1; v = S.next(v)) deg[v] = c.red().degree_in(v, S);
        const Int thr_num = numerator(tr.deletion_threshold);
        const Int thr_den = denominator(tr.deletion_threshold);
        long deleted = 0;
        while (true) {
            int victim = -1;
            for (int v = S.first(); v != -1; v = S.next(v))
                if (Int(deg[v]) * thr_den >= thr_num) {
                    victim = v;
                    break;
                }
            if (victim == -1) break;
            S.reset(victim);
            ++deleted;
            Bitset nb = c.red_nbrs(victim) & S;
            for (int v = nb.first(); v != -1; v = nb.next(v)) --deg[v];
        }
        // counting argument: every deletion removed >= eps*N distinct red
        // edges, and there are at most eps*N^2/2 of them
        if (2 * deleted > N) throw error("esz_pair: deleted more than N/2 (internal)");
    }
    tr.S = S;

    // (2) blue clique of size 2t if present, else a true maximum
    tr.B = max_blue_clique(c, S, (int)std::min<long>(2 * p.t, N + 1));
    long bsize = tr.B.count();

    // (3) filter S\B by red degree into B (threshold is the exact rational)
    tr.filter_threshold = Rat(3) * eps * bsize;
    tr.Sprime = Bitset(c.N());
    {
        const Int fn = numerator(tr.filter_threshold);
        const Int fd = denominator(tr.filter_threshold);
        Bitset rest = S - tr.B;
        for (int v = rest.first(); v != -1; v = rest.next(v)) {
            long d = c.red().degree_in(v, tr.B);
            if (Int(d) * fd < fn) tr.Sprime.set(v);
        }
    }

    // (4) R of size floor(3*eps*|B|) maximizing |S_R|
    long r = (long)floor_rat(tr.filter_threshold);
    if (r > bsize) r = bsize;
    tr.R = choose_R(c, tr.B, tr.Sprime, r);
    tr.S_R = Bitset(c.N());
    for (int v = tr.Sprime.first(); v != -1; v = tr.Sprime.next(v))
        if ((c.red_nbrs(v) & tr.B).subset_of(tr.R)) tr.S_R.set(v);

    MonoPair out;
    if (bsize == 2 * p.t) {
        // (5a) blue pair: B\R is a blue clique and every S_R vertex has its
        // red B-neighborhood inside R, so all (B\R)--S_R edges are blue
        out.color = Color::blue;
        out.X = tr.B - tr.R;
        out.Y = tr.S_R;
    } else {
        // (5b) recurse: no blue clique of size |R|+1 can live in S_R, or it
        // would extend B\R past the maximum
        long l = std::max((long)ceil_rat(Rat(7) * eps * p.t), (long)tr.R.count() + 1);
        out = es_pair_in(c, tr.S_R, (int)p.t, (int)l);
    }

    if (!is_mono_pair(c, out.color, out.X, out.Y))
        throw error("esz_pair: postcondition violated (internal)");

    if (p.strictness == Strictness::paper) {
        if (bsize != 2 * p.t && (out.color != Color::red || out.X.count() != p.t))
            throw error("esz_pair: paper strictness expected a red pair with |X| = t");
        if (out.X.count() < p.t)
            throw error("esz_pair: paper strictness expected |X| >= t");
        // |Y| >= eps^{14 eps t} * N
        XNum e{p.eps};
        XNum lb = (e.log2() * XNum(Rat(14) * eps * p.t)).exp2() * XNum(Rat(N));
        if (XNum(Rat(out.Y.count())).ge(lb) != XNum::Cmp::yes)
            throw error("esz_pair: paper strictness |Y| bound not certified");
        tr.quantitative_checked = true;
    }
    return {out, tr};
}

}  // namespace ramsey
