// ramsey: command-line surface over the extraction / amplification /
// verification modules.  All output is deterministic: one --seed flag feeds
// every random choice, rationals are exact "p/q" strings, and the emitters in
// report.cpp fix key order and layout byte for byte.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsey/report.hpp"

namespace {

using namespace ramsey;

struct Out {
    std::string path;  // empty = stdout
    void write(const std::string& s) const {
        if (path.empty()) {
            std::cout << s;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw error("cannot open output file '" + path + "'");
        f << s;
    }
};

Strictness parse_profile(const std::string& s) {
    if (s == "paper") return Strictness::paper;
    if (s == "relaxed") return Strictness::relaxed;
    throw parse_error("unknown profile '" + s + "' (expected paper or relaxed)");
}

Bitset parse_vertex_set(const std::string& csv, int N) {
    Bitset b(N);
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        int v = std::stoi(cur);
        if (v < 0 || v >= N) throw parse_error("vertex " + cur + " out of range");
        b.set(v);
        cur.clear();
    };
    for (char ch : csv) {
        if (ch == ',')
            flush();
        else if (!std::isspace((unsigned char)ch))
            cur.push_back(ch);
    }
    flush();
    return b;
}

// ---- gen ------------------------------------------------------------------

int run_gen(const std::string& kind, int n, const std::string& p_str,
            std::uint64_t seed, Format fmt, const Out& out) {
    TwoColoring c;
    if (kind == "uniform") {
        c = gen_uniform(n, seed);
    } else if (kind == "biased") {
        c = gen_biased(n, parse_rat(p_str), seed);
    } else if (kind == "paley") {
        c = gen_paley(n);
    } else {
        throw parse_error("unknown kind '" + kind + "' (expected uniform, biased or paley)");
    }
    out.write(fmt == Format::json ? coloring_json(c) : format_coloring(c));
    return 0;
}

// ---- extract-pair ---------------------------------------------------------

int run_extract(const std::string& coloring_path, std::optional<int> k,
                std::optional<int> l, const std::string& eps_str, std::optional<long> t,
                const std::string& profile, Format fmt, const Out& out) {
    TwoColoring c = parse_coloring_file(coloring_path);
    const bool kl = k.has_value() || l.has_value();
    const bool et = !eps_str.empty() || t.has_value();
    if (kl == et)
        throw parse_error("extract-pair: give exactly one of --k/--l or --eps/--t");
    if (kl) {
        if (!k || !l) throw parse_error("extract-pair: --k and --l go together");
        MonoPair p = es_pair(c, *k, *l);
        out.write(fmt == Format::json ? pair_json(p) : pair_text(p));
        return 0;
    }
    if (eps_str.empty() || !t)
        throw parse_error("extract-pair: --eps and --t go together");
    ExtractionParams ep;
    ep.eps = parse_rat(eps_str);
    ep.t = *t;
    ep.strictness = parse_profile(profile);
    auto [p, trace] = esz_pair(c, ep);
    out.write(fmt == Format::json ? esz_pair_json(p, trace) : esz_pair_text(p, trace));
    return 0;
}

// ---- amplify --------------------------------------------------------------

int run_amplify(const std::string& coloring_path, const std::string& pattern_path,
                const std::string& alpha_str, const std::string& profile,
                const std::string& x_csv, const std::string& y_csv,
                const std::string& pair_color, Format fmt, const Out& out) {
    TwoColoring c = parse_coloring_file(coloring_path);
    Graph G = parse_graph_file(pattern_path);
    XNum alpha{parse_rat(alpha_str)};
    AmplifyParams p = AmplifyParams::make(alpha, G.m(), parse_profile(profile));

    MonoPair pair;
    if (!x_csv.empty() || !y_csv.empty()) {
        if (x_csv.empty() || y_csv.empty())
            throw parse_error("amplify: --x and --y go together");
        pair.X = parse_vertex_set(x_csv, c.N());
        pair.Y = parse_vertex_set(y_csv, c.N());
        if (pair_color == "red")
            pair.color = Color::red;
        else if (pair_color == "blue")
            pair.color = Color::blue;
        else
            throw parse_error("amplify: --pair-color must be red or blue");
    } else {
        // no pair supplied: extract one with k = l = ceil(alpha*sqrt(m)),
        // capped at N (with k = l the branch rule is the majority rule, so the
        // cap does not change the recursion)
        Int need = (alpha * XNum(Rat(G.m())).sqrt()).ceil_upper();
        int kl = (int)std::min(need, Int(c.N()));
        if (kl < 1) kl = 1;
        pair = es_pair(c, kl, kl);
    }
    AmplifyResult r = amplify(c, G, pair, p);
    out.write(fmt == Format::json ? amplify_result_json(p, r)
                                  : amplify_result_text(p, r));
    return 0;
}

// ---- prove ----------------------------------------------------------------

int run_prove(const std::string& coloring_path, const std::string& pattern_path,
              const std::string& profile, Format fmt, const Out& out) {
    TwoColoring c = parse_coloring_file(coloring_path);
    Graph G = parse_graph_file(pattern_path);
    AmplificationTrace tr = prove_or_find(c, G, parse_profile(profile));
    out.write(fmt == Format::json ? trace_json(tr) : trace_text(tr));
    return tr.outcome == Outcome::precondition_stop ? 1 : 0;
}

// ---- trace-bounds ---------------------------------------------------------

int run_trace_bounds(long m, Format fmt, const Out& out) {
    BoundReport r = trace_bounds(m);
    out.write(fmt == Format::json ? bound_report_json(r) : bound_report_text(r));
    return r.all_pass ? 0 : 1;
}

// ---- verify-constants -----------------------------------------------------

int run_verify(std::vector<long> ms, int grid_points, std::vector<std::string> eps_strs,
               int clique_n_max, Format fmt, const Out& out) {
    if (ms.empty()) ms = {3600, 10000, 1000000, 100000000};
    std::vector<Rat> eps;
    if (eps_strs.empty())
        eps = {Rat(1, 7), Rat(1, 8), Rat(1, 16), Rat(1, 128)};
    else
        for (const std::string& s : eps_strs) eps.push_back(parse_rat(s));

    std::vector<InequalityCheck> checks = verify_inequalities(ms, grid_points, eps);
    for (int n = 2; n <= clique_n_max; ++n) checks.push_back(es_clique_bound_check(n));

    out.write(fmt == Format::json ? inequality_report_json(checks)
                                  : inequality_report_text(checks));
    for (const InequalityCheck& c : checks)
        if (c.status == CheckStatus::fail) return 1;
    return 0;
}

// ---- ramsey ---------------------------------------------------------------

int run_ramsey(const std::string& pattern_path, bool exact, bool do_arrows, bool lower,
               int n, int nmax, long trials, std::uint64_t seed, long max_edges,
               Format fmt, const Out& out) {
    Graph G = parse_graph_file(pattern_path);
    if (exact + do_arrows + lower != 1)
        throw parse_error("ramsey: give exactly one of --exact, --arrows, --lower");
    if (exact) {
        std::optional<int> r = ramsey_number_exact(G, nmax, max_edges);
        if (fmt == Format::json) {
            std::string v = r ? std::to_string(*r) : "null";
            out.write("{\n  \"nmax\": " + std::to_string(nmax) + ",\n  \"r\": " + v +
                      "\n}\n");
        } else {
            out.write(r ? std::to_string(*r) + "\n" : "unknown (no N <= " +
                                                          std::to_string(nmax) + " arrows)\n");
        }
        return 0;
    }
    if (do_arrows) {
        ArrowResult r = arrows(n, G, max_edges);
        out.write(fmt == Format::json ? arrow_result_json(r) : arrow_result_text(r));
        return 0;
    }
    WitnessSearchResult r = lower_bound_witness_search(G, n, trials, seed);
    out.write(fmt == Format::json ? witness_search_json(r, n, trials)
                                  : witness_search_text(r, n, trials));
    return 0;
}

// ---- check ----------------------------------------------------------------

int run_check(const std::string& coloring_path, const std::string& pattern_path,
              Format fmt, const Out& out) {
    TwoColoring c = parse_coloring_file(coloring_path);
    Graph G = parse_graph_file(pattern_path);
    auto red = find_mono_copy(c, Color::red, G);
    auto blue = find_mono_copy(c, Color::blue, G);
    if (fmt == Format::json) {
        std::string s = "{\n  \"red\": ";
        auto emb = [&](const std::optional<Embedding>& e) -> std::string {
            if (!e) return "null";
            std::string a = "[";
            for (std::size_t i = 0; i < e->map.size(); ++i)
                a += (i ? ", " : "") + std::to_string(e->map[i]);
            return a + "]";
        };
        s += emb(red) + ",\n  \"blue\": " + emb(blue) + "\n}\n";
        out.write(s);
    } else {
        std::string s;
        auto line = [&](const char* name, const std::optional<Embedding>& e) {
            if (!e) return std::string("none in ") + name;
            std::string a = std::string(name) + " copy:";
            for (int v : e->map) a += " " + std::to_string(v);
            return a;
        };
        s = line("red", red) + "; " + line("blue", blue) + "\n";
        out.write(s);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructive 2-color Ramsey machinery"};
    app.require_subcommand(1);
    std::string fmt_str = "text";
    std::string out_path;
    Out out;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a coloring of K_N");
    std::string gen_kind = "uniform", gen_p = "1/2";
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind, "uniform|biased|paley");
    gen->add_option("--n", gen_n, "number of vertices")->required();
    gen->add_option("--p", gen_p, "red probability p/q (biased only)");
    gen->add_option("--seed", gen_seed, "PRNG seed");

    // extract-pair
    auto* ext = app.add_subcommand("extract-pair", "monochromatic pair extraction");
    std::string ext_coloring, ext_eps, ext_profile = "relaxed";
    std::optional<int> ext_k, ext_l;
    std::optional<long> ext_t;
    ext->add_option("--coloring", ext_coloring, "coloring file (p kn2)")->required();
    ext->add_option("--k", ext_k, "red clique target");
    ext->add_option("--l", ext_l, "blue clique target");
    ext->add_option("--eps", ext_eps, "density bound p/q (switches to esz_pair)");
    ext->add_option("--t", ext_t, "pair size target (esz_pair)");
    ext->add_option("--strictness", ext_profile, "paper|relaxed");

    // amplify
    auto* amp = app.add_subcommand("amplify", "one amplification step");
    std::string amp_coloring, amp_pattern, amp_alpha, amp_profile = "relaxed";
    std::string amp_x, amp_y, amp_color = "red";
    amp->add_option("--coloring", amp_coloring, "coloring file")->required();
    amp->add_option("--pattern", amp_pattern, "pattern graph file")->required();
    amp->add_option("--alpha", amp_alpha, "alpha as p/q")->required();
    amp->add_option("--profile", amp_profile, "paper|relaxed");
    amp->add_option("--x", amp_x, "pair X as comma-separated vertices");
    amp->add_option("--y", amp_y, "pair Y as comma-separated vertices");
    amp->add_option("--pair-color", amp_color, "red|blue (with --x/--y)");

    // prove
    auto* prv = app.add_subcommand("prove", "run the full amplification driver");
    std::string prv_coloring, prv_pattern, prv_profile = "relaxed";
    prv->add_option("--coloring", prv_coloring, "coloring file")->required();
    prv->add_option("--pattern", prv_pattern, "pattern graph file")->required();
    prv->add_option("--profile", prv_profile, "paper|relaxed");

    // trace-bounds
    auto* trb = app.add_subcommand("trace-bounds", "certified exponent ledger for a pattern size");
    long trb_m = 0;
    trb->add_option("--m", trb_m, "pattern edge count")->required();

    // verify-constants
    auto* ver = app.add_subcommand("verify-constants", "inequality sweep");
    std::vector<long> ver_ms;
    std::vector<std::string> ver_eps;
    int ver_grid = 200, ver_clique_n = 3;
    ver->add_option("--m", ver_ms, "edge-count values (repeatable)");
    ver->add_option("--grid-points", ver_grid, "alpha grid resolution");
    ver->add_option("--eps", ver_eps, "epsilon values p/q (repeatable)");
    ver->add_option("--clique-n", ver_clique_n, "largest n for the 2^n clique check");

    // ramsey
    auto* ram = app.add_subcommand("ramsey", "small Ramsey oracles");
    std::string ram_pattern;
    bool ram_exact = false, ram_arrows = false, ram_lower = false;
    int ram_n = 0, ram_nmax = 8;
    long ram_trials = 100, ram_max_edges = 30;
    std::uint64_t ram_seed = 0;
    ram->add_option("pattern", ram_pattern, "pattern graph file")->required();
    ram->add_flag("--exact", ram_exact, "least N with K_N -> pattern");
    ram->add_flag("--arrows", ram_arrows, "decide K_N -> pattern for --n");
    ram->add_flag("--lower", ram_lower, "random search for a copy-free coloring");
    ram->add_option("--n", ram_n, "N for --arrows / --lower");
    ram->add_option("--nmax", ram_nmax, "search ceiling for --exact");
    ram->add_option("--trials", ram_trials, "attempts for --lower");
    ram->add_option("--seed", ram_seed, "PRNG seed for --lower");
    ram->add_option("--max-edges", ram_max_edges, "exhaustive envelope C(N,2) limit");

    // check
    auto* chk = app.add_subcommand("check", "search both colors for the pattern");
    std::string chk_coloring, chk_pattern;
    chk->add_option("--coloring", chk_coloring, "coloring file")->required();
    chk->add_option("--pattern", chk_pattern, "pattern graph file")->required();

    for (auto* sc : {gen, ext, amp, prv, trb, ver, ram, chk}) {
        sc->add_option("--format", fmt_str, "text|json");
        sc->add_option("--out", out_path, "output file (default stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    try {
        Format fmt = parse_format(fmt_str);
        out.path = out_path;
        if (*gen) return run_gen(gen_kind, gen_n, gen_p, gen_seed, fmt, out);
        if (*ext)
            return run_extract(ext_coloring, ext_k, ext_l, ext_eps, ext_t, ext_profile,
                               fmt, out);
        if (*amp)
            return run_amplify(amp_coloring, amp_pattern, amp_alpha, amp_profile, amp_x,
                               amp_y, amp_color, fmt, out);
        if (*prv) return run_prove(prv_coloring, prv_pattern, prv_profile, fmt, out);
        if (*trb) return run_trace_bounds(trb_m, fmt, out);
        if (*ver)
            return run_verify(ver_ms, ver_grid, ver_eps, ver_clique_n, fmt, out);
        if (*ram)
            return run_ramsey(ram_pattern, ram_exact, ram_arrows, ram_lower, ram_n,
                              ram_nmax, ram_trials, ram_seed, ram_max_edges, fmt, out);
        if (*chk) return run_check(chk_coloring, chk_pattern, fmt, out);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
