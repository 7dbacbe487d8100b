#include "ramsey/amplify.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ramsey {

namespace {

XNum cube(const XNum& x) { return x * x * x; }

// (log2 m)^3 / 8, the upper end of the amplification alpha window
XNum alpha_window_top(long m, mpfr_prec_t prec) {
    return cube(XNum(Rat(m)).log2(prec)) / XNum(8);
}

// assemble the full pattern copy: split.A maps onto the members of X in
// ascending order, the remainder copy fills the prime_orig positions
Embedding assemble_copy(const TwoColoring& c, const Graph& G, const PatternSplit& split,
                        const Bitset& X, Color color, const std::vector<int>& inner) {
    std::vector<int> full(G.n(), -1);
    std::vector<int> xm = X.members();
    for (std::size_t j = 0; j < split.A.size(); ++j) full[split.A[j]] = xm[j];
    for (std::size_t i = 0; i < inner.size(); ++i) full[split.prime_orig[i]] = inner[i];
    Embedding e{std::move(full), color};
    check_mono_copy(c, G, e);
    return e;
}

// every pattern embeds into a monochromatic clique of its order; X qualifies
// whenever the pair is valid and large enough
std::optional<Embedding> copy_via_clique(const TwoColoring& c, const Graph& G,
                                         const MonoPair& pair) {
    if (pair.X.count() < G.n()) return std::nullopt;
    std::vector<int> xm = pair.X.members();
    Embedding e{std::vector<int>(xm.begin(), xm.begin() + G.n()), pair.color};
    check_mono_copy(c, G, e);
    return e;
}

}  // namespace

AmplifyParams AmplifyParams::make(const XNum& alpha, long m, Strictness profile,
                                  mpfr_prec_t prec) {
    if (m < 1) throw precondition_error("amplify: need m >= 1");
    AmplifyParams p;
    p.alpha = alpha;
    p.m = m;
    p.profile = profile;
    if (alpha.ge(XNum(1)) != XNum::Cmp::yes)
        throw precondition_error("amplify: need alpha >= 1");
    if (profile == Strictness::paper) {
        if (alpha.ge(XNum(27)) != XNum::Cmp::yes)
            throw precondition_error("amplify: paper profile needs alpha >= 27");
        if (alpha_window_top(m, prec).ge(alpha) != XNum::Cmp::yes)
            throw precondition_error("amplify: paper profile needs alpha <= (log2 m)^3/8");
    }

    // eps = 2^{-ceil(3*alpha^{1/3})}; the ceiling must be certified, so retry
    // at growing precision until the interval separates from the integer
    std::optional<Int> e3;
    for (mpfr_prec_t pp = prec; pp <= 4096 && !e3; pp *= 2)
        e3 = (XNum(3) * alpha.cbrt(pp)).certified_ceil();
    if (!e3) throw error("amplify: epsilon exponent not certifiable from this alpha");
    if (*e3 > 1000000)
        throw resource_limit_error("amplify: alpha too large for a representable epsilon");
    long e = (long)*e3;
    p.eps_log2 = -e;
    p.eps = Rat(Int(1), Int(1) << e);
    p.eps_paper = (XNum(-3) * alpha.cbrt(prec)).exp2(prec);

    XNum tx = (XNum(2) * alpha.cbrt(prec)).exp2(prec) * XNum(Rat(m)).sqrt(prec);
    p.t = tx.ceil_upper();
    if (p.t < 1) p.t = 1;
    return p;
}

AmplifyResult amplify(const TwoColoring& c, const Graph& G, const MonoPair& pair,
                      const AmplifyParams& p) {
    if (G.m() != p.m)
        throw precondition_error("amplify: params were built for a different edge count");
    if (!is_mono_pair(c, pair.color, pair.X, pair.Y))
        throw precondition_error("amplify: input pair is not monochromatic");

    const long xs = pair.X.count();
    const long ys = pair.Y.count();
    XNum sqrt_m = XNum(Rat(p.m)).sqrt();
    if (p.profile == Strictness::paper) {
        if (XNum(xs).ge(p.alpha * sqrt_m) != XNum::Cmp::yes)
            throw precondition_error("amplify: paper profile needs |X| >= alpha*sqrt(m)");
        XNum floor_y = (XNum(125) / p.alpha.cbrt() * sqrt_m).exp2();
        if (XNum(ys).ge(floor_y) != XNum::Cmp::yes)
            throw precondition_error(
                "amplify: paper profile needs |Y| >= 2^(125*alpha^(-1/3)*sqrt(m))");
    }

    const int s = (int)std::min<long>(xs, G.n());
    PatternSplit split = top_degree_split(G, s);

    // a copy of the remainder in the pair color inside Y completes the pattern
    if (auto e = find_mono_copy_in(c, pair.color, split.gprime, pair.Y))
        return MonoCopy{assemble_copy(c, G, split, pair.X, pair.color, e->map)};

    // otherwise sparsify Y in that color and re-extract; the sparsifier may
    // still stumble on a copy, which is just as good
    Graph colorg = c.color_graph(pair.color);
    Bitset S(c.N());
    try {
        S = sparse_subset_in(colorg, split.gprime, p.eps, pair.Y, false);
    } catch (const pattern_present_error& w) {
        return MonoCopy{assemble_copy(c, G, split, pair.X, pair.color, w.witness)};
    }

    Int t_cap = Int(c.N()) + 1;
    Int t_eff = p.t < t_cap ? p.t : t_cap;
    if (p.profile == Strictness::paper && t_eff != p.t)
        throw precondition_error("amplify: t exceeds N+1, host too small for the paper profile");
    ExtractionParams ep;
    ep.eps = p.eps;
    ep.t = (long)t_eff;
    ep.strictness = p.profile;

    // esz_pair works red-side; flip once when the pair color is blue
    std::optional<TwoColoring> flip;
    const TwoColoring* work = &c;
    if (pair.color == Color::blue) {
        flip = c.flipped();
        work = &*flip;
    }
    MonoPair out = esz_pair_in(*work, S, ep).first;
    if (pair.color == Color::blue) out.color = other(out.color);
    if (!is_mono_pair(c, out.color, out.X, out.Y))
        throw error("amplify: extracted pair failed re-verification (internal)");

    if (p.profile == Strictness::paper) {
        if (Int(out.X.count()) < p.t)
            throw error("amplify: |X'| below t under the paper profile (internal)");
        XNum keep = (XNum(-120) / p.alpha.cbrt() * sqrt_m).exp2() * XNum(ys);
        if (XNum(out.Y.count()).ge(keep) != XNum::Cmp::yes)
            throw error("amplify: |Y'| below the certified fraction (internal)");
    }
    return out;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::mono_copy: return "mono_copy";
        case Outcome::exhausted: return "exhausted";
        case Outcome::precondition_stop: return "precondition_stop";
    }
    return "unknown";
}

AmplificationTrace prove_or_find(const TwoColoring& c, const Graph& G, Strictness profile) {
    AmplificationTrace tr;
    tr.m = G.m();
    for (int v = 0; v < G.n(); ++v)
        if (G.degree(v) == 0)
            throw precondition_error("prove_or_find: pattern has an isolated vertex");
    if (G.n() == 0) {
        tr.outcome = Outcome::mono_copy;
        tr.copy = Embedding{{}, Color::red};
        tr.notes.push_back("empty pattern embeds vacuously");
        return tr;
    }
    if (c.N() < G.n()) {
        tr.outcome = Outcome::exhausted;
        tr.notes.push_back("host smaller than the pattern: no copy can exist");
        return tr;
    }

    Strictness effective = profile;
    if (profile == Strictness::paper) {
        XNum need = XNum(250) * XNum(Rat(tr.m)).sqrt();
        if (XNum(Rat(c.N())).log2().ge(need) != XNum::Cmp::yes) {
            effective = Strictness::relaxed;
            tr.notes.push_back(
                "paper profile degraded to relaxed: host has log2 N < 250*sqrt(m)");
        }
    }

    if (tr.m <= 3906) {
        // direct route: the clique from es_pair or the complete search, so
        // the negative verdict is exact
        tr.notes.push_back("direct route for m <= 3906");
        MonoPair pair = es_pair(c, G.n(), G.n());
        if (auto e = copy_via_clique(c, G, pair)) {
            tr.outcome = Outcome::mono_copy;
            tr.copy = *e;
            tr.notes.push_back("pattern embedded in a monochromatic clique from es_pair");
            return tr;
        }
        if (auto e = find_mono_copy(c, Color::red, G)) {
            tr.outcome = Outcome::mono_copy;
            tr.copy = *e;
            tr.notes.push_back("complete search found a red copy");
            return tr;
        }
        if (auto e = find_mono_copy(c, Color::blue, G)) {
            tr.outcome = Outcome::mono_copy;
            tr.copy = *e;
            tr.notes.push_back("complete search found a blue copy");
            return tr;
        }
        tr.outcome = Outcome::exhausted;
        tr.notes.push_back("complete search: no monochromatic copy in either color");
        return tr;
    }

    AlphaSeq seq = alpha_sequence_until_stop(tr.m);

    // k0 = ceil(27*sqrt(m)); with k = l the branch rule is the majority rule
    // whatever the common value, so capping at N changes nothing
    Int km = Int(729) * tr.m;
    Int r = isqrt(km);
    if (r * r < km) ++r;
    int k0 = (int)std::min(r, Int(c.N()));
    MonoPair pair = es_pair(c, k0, k0);

    for (int i = 1; i <= seq.stop_index; ++i) {
        IterationRecord rec;
        rec.i = i;
        rec.alpha = seq.alphas[i - 1];
        rec.x_size = pair.X.count();
        rec.y_size = pair.Y.count();
        tr.iterations.push_back(rec);

        if (auto e = copy_via_clique(c, G, pair)) {
            tr.outcome = Outcome::mono_copy;
            tr.copy = *e;
            tr.notes.push_back("pattern embedded in a monochromatic clique at iteration " +
                               std::to_string(i));
            return tr;
        }
        AmplifyParams p = AmplifyParams::make(seq.alphas[i - 1], tr.m, effective);
        AmplifyResult res = MonoPair{};
        try {
            res = amplify(c, G, pair, p);
        } catch (const declared_failure& e) {
            tr.outcome = Outcome::precondition_stop;
            tr.notes.push_back("amplification declared failure at iteration " +
                               std::to_string(i) + ": " + e.what());
            return tr;
        }
        if (std::holds_alternative<MonoCopy>(res)) {
            tr.outcome = Outcome::mono_copy;
            tr.copy = std::get<MonoCopy>(res).emb;
            tr.notes.push_back("monochromatic copy assembled at iteration " +
                               std::to_string(i));
            return tr;
        }
        pair = std::get<MonoPair>(res);
    }

    if (auto e = copy_via_clique(c, G, pair)) {
        tr.outcome = Outcome::mono_copy;
        tr.copy = *e;
        tr.notes.push_back("pattern embedded in a monochromatic clique after the final step");
        return tr;
    }
    tr.outcome = Outcome::precondition_stop;
    tr.notes.push_back(
        "alpha ladder exhausted without a copy; host is below the proof's size floor, "
        "so no nonexistence claim is made");
    return tr;
}

BoundReport trace_bounds(long m) {
    if (m < 2) throw precondition_error("trace_bounds: need m >= 2");
    const mpfr_prec_t prec = 256;
    BoundReport rep;
    rep.m = m;
    XNum sm = XNum(Rat(m)).sqrt(prec);
    rep.sqrt_m = sm;
    rep.N_exponent = XNum(250) * sm;
    rep.initial_Y_exponent = XNum(196) * sm;

    AlphaSeq seq = alpha_sequence_until_stop(m);
    rep.stop_index = seq.stop_index;

    auto push = [&](const std::string& name, bool pass, const std::string& note) {
        rep.checks.push_back(BoundCheck{name, pass, note});
    };

    push("initial_exponent_identity", 250 - 2 * 27 == 196,
         "one 4^(-27*sqrt(m)) cut from 2^(250*sqrt(m)) leaves 2^(196*sqrt(m))");
    push("floor_identity", Rat(196) - Rat(120) * Rat(4, 3) == Rat(36),
         "196 minus the full 120*sum(alpha_j^(-1/3)) budget of 160 is 36");

    // exponent ledger: E_1 = 196*sqrt(m), E_{i+1} = E_i - 120*alpha_i^(-1/3)*sqrt(m).
    // Every check divides through by sqrt(m) and compares coefficients; that
    // keeps exact equalities (156 vs 156 at i = 2) certifiable when sqrt(m)
    // itself is irrational.
    XNum Ecoef = XNum(196);
    for (int i = 1; i <= seq.stop_index; ++i) {
        const XNum& a = seq.alphas[i - 1];
        XNum inv_cbrt = XNum(1) / a.cbrt(prec);

        IterationRecord r;
        r.i = i;
        r.alpha = a;
        r.x_lb = (a * sm).floor_lower();
        r.y_log2_lb = Ecoef * sm;
        r.y_log2_sym = (i == 1) ? "196*sqrt(m)"
                                : "196*sqrt(m) - sum_{j<i} 120*alpha_j^(-1/3)*sqrt(m)";
        rep.iterations.push_back(r);

        push("entry_requirement_" + std::to_string(i),
             Ecoef.ge(XNum(125) * inv_cbrt) == XNum::Cmp::yes,
             "E_i >= 125*alpha_i^(-1/3)*sqrt(m), the amplification entry floor");
        if (i >= 2)
            push("iteration_floor_" + std::to_string(i),
                 Ecoef.ge(XNum(36) + XNum(480) * inv_cbrt) == XNum::Cmp::yes,
                 "E_i >= (36+480*alpha_i^(-1/3))*sqrt(m); equality at i = 2");
        if (i < seq.stop_index) Ecoef = Ecoef - XNum(120) * inv_cbrt;
    }

    for (int i = 1; i < seq.stop_index; ++i) {
        bool ok = seq.alphas[i].ge(XNum(Rat(64, 27)) * seq.alphas[i - 1]) == XNum::Cmp::yes;
        push("alpha_ratio_" + std::to_string(i), ok,
             i == 1 ? "alpha_2 = 64 = (64/27)*27, exact equality"
                    : "alpha_{i+1} >= (4/3)^3 * alpha_i");
    }

    XNum partial = XNum(0);
    bool all_sums = true;
    for (int i = 1; i < seq.stop_index; ++i) {
        partial = partial + XNum(1) / seq.alphas[i - 1].cbrt(prec);
        bool ok = (XNum(Rat(4, 3)) - XNum(4) / seq.alphas[i].cbrt(prec)).ge(partial) ==
                  XNum::Cmp::yes;
        all_sums = all_sums && ok;
        push("sum_bound_" + std::to_string(i), ok,
             i == 1 ? "sum = 1/3 = 4/3 - 4/cbrt(64), exact equality"
                    : "sum_{j<=i} alpha_j^(-1/3) <= 4/3 - 4*alpha_{i+1}^(-1/3)");
    }
    push("sum_bound", all_sums,
         "partial-sum closure holds across the whole materialized ladder");

    XNum L = alpha_window_top(m, prec);
    bool stop_ok = seq.alphas[seq.stop_index - 1].ge(L) == XNum::Cmp::yes;
    if (seq.stop_index >= 2)
        stop_ok = stop_ok && seq.alphas[seq.stop_index - 2].lt(L) == XNum::Cmp::yes;
    push("stop_rule", stop_ok,
         "first alpha_i >= (log2 m)^3/8, predecessor strictly below");

    const XNum& astop = seq.alphas[seq.stop_index - 1];
    rep.final_X_lb = XNum(Rat(m)) * sm;
    push("t_stop_dominates",
         (XNum(2) * astop.cbrt(prec)).exp2(prec).ge(XNum(Rat(m))) == XNum::Cmp::yes,
         "2^(2*alpha_stop^(1/3)) >= m, so t_stop >= m^(3/2)");
    push("final_vs_2m", m >= 4, "m^(3/2) >= 2m as soon as m >= 4");

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const BoundCheck& ch) { return ch.pass; });
    return rep;
}

namespace {

std::optional<AlphaSeq> try_alpha_seq(long m, mpfr_prec_t prec) {
    XNum L = alpha_window_top(m, prec);
    AlphaSeq s;
    XNum a = XNum(27);
    for (int i = 1; i <= 200; ++i) {
        s.alphas.push_back(a);
        XNum::Cmp cmp = a.ge(L);
        if (cmp == XNum::Cmp::unknown) return std::nullopt;
        if (cmp == XNum::Cmp::yes) {
            s.stop_index = i;
            return s;
        }
        a = (XNum(2) * a.cbrt(prec)).exp2(prec);
    }
    return std::nullopt;
}

}  // namespace

AlphaSeq alpha_sequence_until_stop(long m) {
    if (m < 2) throw precondition_error("alpha sequence: need m >= 2");
    for (mpfr_prec_t prec : {kDefaultPrec, mpfr_prec_t(256), mpfr_prec_t(512),
                             mpfr_prec_t(1024)})
        if (auto s = try_alpha_seq(m, prec)) return *s;
    throw error("alpha sequence: stop rule not certifiable at 1024 bits");
}

}  // namespace ramsey
