// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.
// argv[1] is the CLI binary (used by the determinism criterion).
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "ramsey/amplify.hpp"
#include "ramsey/arrows.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/graph.hpp"

using namespace ramsey;

namespace {

int g_failures = 0;

// every coloring of K_N, indexed by a mask over the lexicographic pair order
TwoColoring coloring_from_mask(int N, unsigned long mask) {
    Graph red(N);
    int b = 0;
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v, ++b)
            if ((mask >> b) & 1) red.add_edge(u, v);
    return TwoColoring(std::move(red));
}

void run_criterion(int idx, const char* name, double budget_secs,
                   const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_secs > 0 && secs > budget_secs) {
        ok = false;
        note = "runtime budget exceeded";
    }
    std::printf("%s %2d %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", idx, name, secs,
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// ---- criterion 1: es_pair law, exhaustive over K_5 and K_6 ----------------

bool crit_es_pair_law(std::string& note) {
    for (int N : {5, 6}) {
        int slots = N * (N - 1) / 2;
        for (unsigned long mask = 0; mask < (1ul << slots); ++mask) {
            TwoColoring c = coloring_from_mask(N, mask);
            for (int k = 0; k <= 4; ++k)
                for (int l = 0; k + l <= 4; ++l) {
                    MonoPair p = es_pair(c, k, l);
                    std::string at = "N=" + std::to_string(N) + " mask=" + std::to_string(mask) +
                                     " k=" + std::to_string(k) + " l=" + std::to_string(l);
                    if (!is_mono_pair(c, p.color, p.X, p.Y)) {
                        note = "pair not monochromatic at " + at;
                        return false;
                    }
                    long want = p.color == Color::red ? k : l;
                    if ((long)p.X.count() != want) {
                        note = "|X| = " + std::to_string(p.X.count()) + " instead of " +
                               std::to_string(want) + " at " + at;
                        return false;
                    }
                    // |Y| >= C(k+l,k)^{-1} N - k - l, cross-multiplied
                    if (Int(p.Y.count() + k + l) * binomial(k + l, k) < N) {
                        note = "|Y| below the binomial bound at " + at;
                        return false;
                    }
                }
        }
    }
    return true;
}

// ---- criterion 2: esz_pair structural invariants on seeded colorings ------

bool crit_esz_structural(std::string& note) {
    ExtractionParams prm;
    prm.eps = Rat(1, 7);
    prm.t = 5;
    prm.strictness = Strictness::relaxed;
    for (auto [N, seed0] : {std::pair<int, int>{500, 1000}, {2000, 2000}}) {
        for (int i = 0; i < 100; ++i) {
            TwoColoring c = gen_biased(N, Rat(1, 8), (uint64_t)(seed0 + i));
            std::string at = "N=" + std::to_string(N) + " seed=" + std::to_string(seed0 + i);
            Rat dens(Int(c.red_m()), Int(N) * (N - 1) / 2);
            if (dens > Rat(1, 7)) {
                note = "generated red density above 1/7 at " + at;
                return false;
            }
            auto [pair, tr] = esz_pair(c, prm);
            if (!is_mono_pair(c, pair.color, pair.X, pair.Y)) {
                note = "pair not monochromatic at " + at;
                return false;
            }
            if (2 * (long)tr.S.count() < N) {
                note = "deletion loop kept fewer than N/2 at " + at;
                return false;
            }
            if (!tr.Sprime.subset_of(tr.S - tr.B)) {
                note = "S' escapes S \\ B at " + at;
                return false;
            }
            const Int tn = numerator(tr.filter_threshold);
            const Int td = denominator(tr.filter_threshold);
            for (int v = tr.Sprime.first(); v != -1; v = tr.Sprime.next(v))
                if (Int(c.red().degree_in(v, tr.B)) * td >= tn) {
                    note = "filter invariant broken for vertex " + std::to_string(v) + " at " + at;
                    return false;
                }
        }
    }
    return true;
}

// ---- criterion 3: choose_R matches brute force for |B| <= 12 --------------

bool crit_choose_r(std::string& note) {
    for (int seed = 0; seed < 24; ++seed) {
        int b = seed % 12 + 1;
        TwoColoring c = gen_uniform(28, (uint64_t)(100 + seed));
        Bitset B(28), Sprime(28);
        for (int v = 0; v < b; ++v) B.set(v);
        for (int v = b; v < 28; ++v) Sprime.set(v);
        // per-survivor red neighborhoods in B, as b-bit masks
        std::vector<unsigned> nb;
        for (int v = Sprime.first(); v != -1; v = Sprime.next(v)) {
            unsigned m = 0;
            Bitset inb = c.red_nbrs(v) & B;
            for (int u = inb.first(); u != -1; u = inb.next(u)) m |= 1u << u;
            nb.push_back(m);
        }
        for (long r = 0; r <= b; ++r) {
            Bitset R = choose_R(c, B, Sprime, r);
            std::string at = "seed=" + std::to_string(seed) + " |B|=" + std::to_string(b) +
                             " r=" + std::to_string(r);
            if (!R.subset_of(B) || (long)R.count() != r) {
                note = "R is not an r-subset of B at " + at;
                return false;
            }
            unsigned rmask = 0;
            for (int u = R.first(); u != -1; u = R.next(u)) rmask |= 1u << u;
            long got = 0, best = -1;
            for (unsigned m : nb)
                if ((m & ~rmask) == 0) ++got;
            for (unsigned cand = 0; cand < (1u << b); ++cand) {
                if (__builtin_popcount(cand) != r) continue;
                long sc = 0;
                for (unsigned m : nb)
                    if ((m & ~cand) == 0) ++sc;
                if (sc > best) best = sc;
            }
            if (got != best) {
                note = "chose |S_R| = " + std::to_string(got) + ", brute force finds " +
                       std::to_string(best) + " at " + at;
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 4: embed_or_sparse_pair desk instances ---------------------

bool crit_embed_desk(std::string& note) {
    Graph k3 = Graph::complete(3);
    auto res = embed_or_sparse_pair(Graph::complete_bipartite(18, 18), k3, Rat(1, 2));
    auto* w = std::get_if<SparsePairWitness>(&res);
    if (!w) {
        note = "triangle-free K_{18,18} produced an embedding";
        return false;
    }
    if (w->X.count() != w->Y.count() || w->X.count() < 3) {
        note = "witness sides |X| = " + std::to_string(w->X.count()) + ", |Y| = " +
               std::to_string(w->Y.count());
        return false;
    }
    if (w->X.intersects(w->Y)) {
        note = "witness sides overlap";
        return false;
    }
    Graph host = Graph::complete_bipartite(18, 18);
    if (w->density > Rat(1, 2) || w->density != pair_density(host, w->X, w->Y)) {
        note = "witness density wrong: " + rat_str(w->density);
        return false;
    }
    auto res2 = embed_or_sparse_pair(Graph::complete(10), k3, Rat(1, 2));
    auto* e = std::get_if<Embedding>(&res2);
    if (!e) {
        note = "K_10 host produced a sparse witness instead of a triangle";
        return false;
    }
    Graph k10 = Graph::complete(10);
    if (e->map.size() != 3 || e->map[0] == e->map[1] || e->map[0] == e->map[2] ||
        e->map[1] == e->map[2]) {
        note = "embedding map not injective on 3 vertices";
        return false;
    }
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v)
            if (!k10.has_edge(e->map[u], e->map[v])) {
                note = "embedding misses a host edge";
                return false;
            }
    return true;
}

// ---- criterion 5: sparse_subset on triangle-free bipartite hosts ----------

bool crit_sparse_subset(std::string& note) {
    Graph k3 = Graph::complete(3);
    std::vector<std::pair<int, int>> sides = {{10, 10}, {25, 25}, {50, 50}, {100, 100}, {80, 120}};
    for (auto [a, b] : sides) {
        Graph host = Graph::complete_bipartite(a, b);
        auto t0 = std::chrono::steady_clock::now();
        Bitset S = sparse_subset(host, k3, Rat(1, 8));
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string at = "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
        if (secs > 10.0) {
            note = at + " took " + std::to_string(secs) + "s";
            return false;
        }
        if (S.empty()) {
            note = at + " returned an empty subset";
            return false;
        }
        if (S.count() >= 2 && edge_density(host, S) > Rat(1, 8)) {
            note = at + " subset density " + rat_str(edge_density(host, S)) + " above 1/8";
            return false;
        }
    }
    return true;
}

// ---- criterion 6: the m = 3600 exponent ledger, exact ---------------------

bool crit_ledger_3600(std::string& note) {
    BoundReport rep = trace_bounds(3600);
    auto exact_is = [](const XNum& x, long v) { return x.exact() && x.rat() == Rat(v); };
    if (!exact_is(rep.N_exponent, 15000) || !exact_is(rep.initial_Y_exponent, 11760)) {
        note = "exponents 250*60 / 196*60 not reproduced exactly";
        return false;
    }
    if (Rat(250 * 60) - Rat(54 * 60) != Rat(11760)) {
        note = "250*sqrt(m) - 54*sqrt(m) identity broken";
        return false;
    }
    if (Rat(196) - Rat(120) * Rat(4, 3) != Rat(36)) {
        note = "iteration floor 196 - 120*4/3 != 36";
        return false;
    }
    if (rep.stop_index != 3 || rep.iterations.size() != 3) {
        note = "alpha sequence does not stop at i = 3";
        return false;
    }
    long want[3] = {27, 64, 256};
    for (int i = 0; i < 3; ++i)
        if (!exact_is(rep.iterations[i].alpha, want[i])) {
            note = "alpha_" + std::to_string(i + 1) + " is not exactly " +
                   std::to_string(want[i]);
            return false;
        }
    if (rat_pow(Rat(4, 3), 3) * 27 != Rat(64)) {
        note = "alpha_2 = (4/3)^3 * alpha_1 equality broken";
        return false;
    }
    for (const char* name : {"initial_exponent_identity", "floor_identity", "alpha_ratio_1"}) {
        bool found = false;
        for (auto& ch : rep.checks)
            if (ch.name == name) {
                found = true;
                if (!ch.pass) {
                    note = std::string(name) + " reported fail";
                    return false;
                }
            }
        if (!found) {
            note = std::string(name) + " missing from the ledger";
            return false;
        }
    }
    if (!rep.all_pass) {
        note = "ledger not all-pass for m = 3600";
        return false;
    }
    return true;
}

// ---- criterion 7: the inequality sweep with both reading checks -----------

bool crit_sweep(std::string& note) {
    auto cs = verify_inequalities({3600, 10000, 1000000, 100000000}, 200,
                                  {Rat(1, 7), Rat(1, 8), Rat(1, 16), Rat(1, 128)});
    for (auto& ch : cs)
        if (ch.status != CheckStatus::pass) {
            note = ch.name + " [" + ch.domain + "] is " + status_name(ch.status) +
                   (ch.counterexample.empty() ? "" : ": " + ch.counterexample);
            return false;
        }
    for (const char* name : {"lemma3_t_reading", "series_sign_reading"}) {
        bool found = false;
        for (auto& ch : cs)
            if (ch.name == name) {
                found = true;
                if (ch.counterexample.find("refuted reading") == std::string::npos) {
                    note = std::string(name) + " does not report the refuted reading";
                    return false;
                }
            }
        if (!found) {
            note = std::string(name) + " missing from the sweep";
            return false;
        }
    }
    return true;
}

// ---- criterion 8: Erdos first-moment bound, n = 3..40 ---------------------

bool crit_erdos(std::string& note) {
    for (int n = 3; n <= 40; ++n) {
        long N = (long)isqrt(Int(1) << n);  // floor(2^{n/2})
        Rat e = expected_mono_cliques(N, n);
        if (e >= 1) {
            note = "E(" + std::to_string(N) + "," + std::to_string(n) + ") = " + rat_str(e) +
                   " >= 1";
            return false;
        }
    }
    return true;
}

// ---- criterion 9: exhaustive Ramsey oracles -------------------------------

bool copy_free_both_colors(const TwoColoring& c, const Graph& pattern) {
    return !find_mono_copy(c, Color::red, pattern) && !find_mono_copy(c, Color::blue, pattern);
}

bool crit_oracles(std::string& note) {
    struct Row {
        Graph pattern;
        int value;
        const char* label;
    };
    std::vector<Row> rows = {{Graph::complete(3), 6, "K_3"},
                             {Graph::path(3), 3, "P_3"},
                             {Graph::path(4), 5, "P_4"}};
    for (auto& row : rows) {
        auto got = ramsey_number_exact(row.pattern, 8);
        if (!got || *got != row.value) {
            note = std::string("r(") + row.label + ") wrong";
            return false;
        }
        ArrowResult below = arrows(row.value - 1, row.pattern);
        if (below.arrows || !below.witness) {
            note = std::string(row.label) + ": no witness at N-1";
            return false;
        }
        if (!copy_free_both_colors(*below.witness, row.pattern)) {
            note = std::string(row.label) + ": witness at N-1 contains a copy";
            return false;
        }
    }
    if (!arrows(6, Graph::complete(3)).arrows) {
        note = "arrows(6, K_3) came back false";
        return false;
    }
    return true;
}

// ---- criterion 10: the driver over every coloring of K_6 ------------------

bool crit_driver(std::string& note) {
    Graph k3 = Graph::complete(3);
    for (unsigned long mask = 0; mask < (1ul << 15); ++mask) {
        TwoColoring c = coloring_from_mask(6, mask);
        AmplificationTrace tr = prove_or_find(c, k3, Strictness::relaxed);
        if (tr.outcome != Outcome::mono_copy || !tr.copy) {
            note = "no triangle reported for mask " + std::to_string(mask);
            return false;
        }
        check_mono_copy(c, k3, *tr.copy);  // throws on any defect
    }
    AmplificationTrace tr = prove_or_find(gen_paley(5), k3, Strictness::relaxed);
    if (tr.outcome != Outcome::exhausted || tr.copy) {
        note = "Paley-5 should exhaust without a copy";
        return false;
    }
    return true;
}

// ---- criterion 11: CLI determinism ----------------------------------------

struct CliRun {
    std::string out;
    int code = -1;
};

CliRun run_cli(const std::string& cmd) {
    CliRun r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -2;
    return r;
}

bool crit_cli_determinism(const std::string& cli, std::string& note) {
    if (cli.empty()) {
        note = "CLI path not supplied (argv[1])";
        return false;
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::path("acceptance_tmp");
    fs::create_directories(dir);
    auto put = [&](const char* name, const std::string& body) {
        std::ofstream(dir / name) << body;
        return (dir / name).string();
    };
    std::string k3 = put("k3.edge", format_graph(Graph::complete(3)));
    std::string col12 = put("col12.kn2", format_coloring(gen_uniform(12, 7)));
    std::string sparse40 = put("sparse40.kn2", format_coloring(gen_biased(40, Rat(1, 10), 5)));

    std::string q = "\"" + cli + "\" ";
    std::vector<std::string> configs = {
        q + "gen --kind uniform --n 20 --seed 3 --format json",
        q + "gen --kind paley --n 13 --format text",
        q + "extract-pair --coloring " + col12 + " --k 2 --l 3 --format json",
        q + "extract-pair --coloring " + sparse40 + " --eps 1/7 --t 2 --format json",
        q + "amplify --coloring " + sparse40 + " --pattern " + k3 + " --alpha 2 --format json",
        q + "prove --coloring " + col12 + " --pattern " + k3 + " --format json",
        q + "trace-bounds --m 3600 --format json",
        q + "verify-constants --m 3600 --grid-points 60 --eps 1/7 --format json",
        q + "ramsey " + k3 + " --exact --nmax 6 --format json",
        q + "ramsey " + k3 + " --lower --n 5 --trials 50 --seed 1 --format json",
        q + "check --coloring " + col12 + " --pattern " + k3 + " --format json",
    };
    bool any_output = false;
    for (auto& cmd : configs) {
        CliRun a = run_cli(cmd);
        CliRun b = run_cli(cmd);
        if (a.out != b.out || a.code != b.code) {
            note = "two runs differ for: " + cmd;
            return false;
        }
        if (!a.out.empty()) any_output = true;
    }
    if (!any_output) {
        note = "every configuration produced empty output; CLI path is probably wrong";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    run_criterion(1, "es-pair-law-exhaustive", 60, crit_es_pair_law);
    run_criterion(2, "esz-structural-invariants", 300, crit_esz_structural);
    run_criterion(3, "pigeonhole-R-optimal", 0, crit_choose_r);
    run_criterion(4, "embed-or-sparsify-desk", 0, crit_embed_desk);
    run_criterion(5, "sparse-subset-bipartite", 0, crit_sparse_subset);
    run_criterion(6, "exponent-ledger-m3600", 0, crit_ledger_3600);
    run_criterion(7, "inequality-sweep", 60, crit_sweep);
    run_criterion(8, "erdos-lower-bound", 5, crit_erdos);
    run_criterion(9, "ramsey-oracles", 120, crit_oracles);
    run_criterion(10, "driver-exhaustive-k6", 0, crit_driver);
    run_criterion(11, "cli-determinism", 0,
                  [&](std::string& note) { return crit_cli_determinism(cli, note); });
    return g_failures == 0 ? 0 : 1;
}
