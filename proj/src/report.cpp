#include "ramsey/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ramsey {

using ojson = nlohmann::ordered_json;

namespace {

std::string finish(const ojson& j) { return j.dump(2) + "\n"; }

ojson set_json(const Bitset& b) {
    ojson a = ojson::array();
    for (int v : b.members()) a.push_back(v);
    return a;
}

ojson sized_set_json(const Bitset& b) {
    ojson j;
    j["size"] = b.count();
    j["members"] = set_json(b);
    return j;
}

ojson emb_json(const Embedding& e) {
    ojson j;
    j["map"] = e.map;
    if (e.color)
        j["color"] = color_name(*e.color);
    else
        j["color"] = nullptr;
    return j;
}

ojson mono_pair_json(const MonoPair& p) {
    ojson j;
    j["color"] = color_name(p.color);
    j["x_size"] = p.X.count();
    j["y_size"] = p.Y.count();
    j["X"] = set_json(p.X);
    j["Y"] = set_json(p.Y);
    return j;
}

ojson esz_trace_json(const EszTrace& t) {
    ojson j;
    j["S"] = sized_set_json(t.S);
    j["B"] = sized_set_json(t.B);
    j["Sprime"] = sized_set_json(t.Sprime);
    j["R"] = sized_set_json(t.R);
    j["S_R"] = sized_set_json(t.S_R);
    j["deletion_threshold"] = rat_str(t.deletion_threshold);
    j["filter_threshold"] = rat_str(t.filter_threshold);
    j["quantitative_checked"] = t.quantitative_checked;
    return j;
}

ojson iteration_json(const IterationRecord& r) {
    ojson j;
    j["i"] = r.i;
    j["alpha"] = r.alpha.str();
    if (r.x_size) j["x_size"] = *r.x_size;
    if (r.y_size) j["y_size"] = *r.y_size;
    if (r.x_lb) j["x_lb"] = r.x_lb->str();
    if (!r.y_log2_sym.empty()) j["y_log2_lb"] = r.y_log2_sym;
    if (r.y_log2_lb) j["y_log2_lb_num"] = r.y_log2_lb->str();
    return j;
}

ojson params_json(const AmplifyParams& p) {
    ojson j;
    j["alpha"] = p.alpha.str();
    j["eps"] = rat_str(p.eps);
    j["eps_log2"] = p.eps_log2;
    j["eps_paper"] = p.eps_paper.str();
    j["t"] = p.t.str();
    j["m"] = p.m;
    j["profile"] = p.profile == Strictness::paper ? "paper" : "relaxed";
    return j;
}

void pair_lines(std::ostream& os, const MonoPair& p) {
    os << "color " << color_name(p.color) << "\n";
    os << "X (" << p.X.count() << "):";
    for (int v : p.X.members()) os << ' ' << v;
    os << "\n";
    os << "Y (" << p.Y.count() << "):";
    for (int v : p.Y.members()) os << ' ' << v;
    os << "\n";
}

void embedding_lines(std::ostream& os, const Embedding& e) {
    os << "copy";
    if (e.color) os << " in " << color_name(*e.color);
    os << ":";
    for (int v : e.map) os << ' ' << v;
    os << "\n";
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    throw parse_error("unknown format '" + s + "' (expected text or json)");
}

std::string coloring_json(const TwoColoring& c) {
    ojson j;
    j["N"] = c.N();
    j["red_m"] = c.red_m();
    ojson edges = ojson::array();
    for (int u = 0; u < c.N(); ++u)
        for (int v = u + 1; v < c.N(); ++v)
            if (c.red_nbrs(u).test(v)) edges.push_back(ojson::array({u, v}));
    j["red_edges"] = edges;
    return finish(j);
}

std::string pair_json(const MonoPair& p) { return finish(mono_pair_json(p)); }

std::string pair_text(const MonoPair& p) {
    std::ostringstream os;
    pair_lines(os, p);
    return os.str();
}

std::string esz_pair_json(const MonoPair& p, const EszTrace& t) {
    ojson j;
    j["pair"] = mono_pair_json(p);
    j["trace"] = esz_trace_json(t);
    return finish(j);
}

std::string esz_pair_text(const MonoPair& p, const EszTrace& t) {
    std::ostringstream os;
    pair_lines(os, p);
    os << "S " << t.S.count() << "  B " << t.B.count() << "  S' " << t.Sprime.count()
       << "  R " << t.R.count() << "  S_R " << t.S_R.count() << "\n";
    os << "deletion threshold " << rat_str(t.deletion_threshold) << ", filter threshold "
       << rat_str(t.filter_threshold) << "\n";
    os << "quantitative bounds " << (t.quantitative_checked ? "checked" : "not checked")
       << "\n";
    return os.str();
}

std::string embedding_json(const Embedding& e) { return finish(emb_json(e)); }

std::string embedding_text(const Embedding& e) {
    std::ostringstream os;
    embedding_lines(os, e);
    return os.str();
}

std::string sparse_witness_json(const SparsePairWitness& w) {
    ojson j;
    j["X"] = set_json(w.X);
    j["Y"] = set_json(w.Y);
    j["density"] = rat_str(w.density);
    return finish(j);
}

std::string amplify_result_json(const AmplifyParams& p, const AmplifyResult& r) {
    ojson j;
    j["params"] = params_json(p);
    if (std::holds_alternative<MonoCopy>(r)) {
        j["outcome"] = "mono_copy";
        j["copy"] = emb_json(std::get<MonoCopy>(r).emb);
    } else {
        j["outcome"] = "mono_pair";
        j["pair"] = mono_pair_json(std::get<MonoPair>(r));
    }
    return finish(j);
}

std::string amplify_result_text(const AmplifyParams& p, const AmplifyResult& r) {
    std::ostringstream os;
    os << "alpha " << p.alpha.str() << "  eps " << rat_str(p.eps) << "  t " << p.t.str()
       << "  profile " << (p.profile == Strictness::paper ? "paper" : "relaxed") << "\n";
    if (std::holds_alternative<MonoCopy>(r))
        embedding_lines(os, std::get<MonoCopy>(r).emb);
    else
        pair_lines(os, std::get<MonoPair>(r));
    return os.str();
}

std::string trace_json(const AmplificationTrace& t) {
    ojson j;
    j["m"] = t.m;
    j["outcome"] = outcome_name(t.outcome);
    ojson its = ojson::array();
    for (const IterationRecord& r : t.iterations) its.push_back(iteration_json(r));
    j["iterations"] = its;
    j["notes"] = t.notes;
    if (t.copy)
        j["copy"] = emb_json(*t.copy);
    else
        j["copy"] = nullptr;
    return finish(j);
}

std::string trace_text(const AmplificationTrace& t) {
    std::ostringstream os;
    os << "m " << t.m << "  outcome " << outcome_name(t.outcome) << "\n";
    for (const IterationRecord& r : t.iterations) {
        os << "  i " << r.i << "  alpha " << r.alpha.str();
        if (r.x_size) os << "  |X| " << *r.x_size;
        if (r.y_size) os << "  |Y| " << *r.y_size;
        os << "\n";
    }
    for (const std::string& n : t.notes) os << "note: " << n << "\n";
    if (t.copy) embedding_lines(os, *t.copy);
    return os.str();
}

std::string bound_report_json(const BoundReport& r) {
    ojson j;
    j["m"] = r.m;
    j["sqrt_m"] = r.sqrt_m.str();
    j["N_exponent"] = r.N_exponent.str();
    j["initial_Y_exponent"] = r.initial_Y_exponent.str();
    j["stop_index"] = r.stop_index;
    ojson its = ojson::array();
    for (const IterationRecord& it : r.iterations) its.push_back(iteration_json(it));
    j["iterations"] = its;
    j["final_X_lb"] = r.final_X_lb.str();
    ojson checks = ojson::array();
    for (const BoundCheck& c : r.checks) {
        ojson cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["note"] = c.note;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["all_pass"] = r.all_pass;
    return finish(j);
}

std::string bound_report_text(const BoundReport& r) {
    std::ostringstream os;
    os << "m " << r.m << "  sqrt(m) " << r.sqrt_m.str() << "\n";
    os << "N exponent 250*sqrt(m) = " << r.N_exponent.str() << "\n";
    os << "initial Y exponent 196*sqrt(m) = " << r.initial_Y_exponent.str() << "\n";
    os << "alpha ladder stops at index " << r.stop_index << "\n";
    for (const IterationRecord& it : r.iterations) {
        os << "  i " << it.i << "  alpha " << it.alpha.str();
        if (it.x_lb) os << "  |X| >= " << it.x_lb->str();
        if (it.y_log2_lb)
            os << "  log2|Y| >= " << it.y_log2_lb->str() << " (" << it.y_log2_sym << ")";
        os << "\n";
    }
    os << "final |X| floor m^(3/2) = " << r.final_X_lb.str() << "\n";
    for (const BoundCheck& c : r.checks)
        os << (c.pass ? "PASS " : "FAIL ") << c.name << "  -- " << c.note << "\n";
    os << (r.all_pass ? "all checks pass" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

std::string inequality_report_json(const std::vector<InequalityCheck>& cs) {
    ojson arr = ojson::array();
    for (const InequalityCheck& c : cs) {
        ojson j;
        j["name"] = c.name;
        j["domain"] = c.domain;
        j["status"] = status_name(c.status);
        j["method"] = c.method;
        if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
        arr.push_back(j);
    }
    return finish(arr);
}

std::string inequality_report_text(const std::vector<InequalityCheck>& cs) {
    std::ostringstream os;
    for (const InequalityCheck& c : cs) {
        switch (c.status) {
            case CheckStatus::pass: os << "PASS"; break;
            case CheckStatus::fail: os << "FAIL"; break;
            case CheckStatus::unchecked: os << "UNCHECKED"; break;
        }
        os << ' ' << c.name << ' ' << c.domain;
        if (!c.counterexample.empty()) os << ' ' << c.counterexample;
        os << "\n";
    }
    return os.str();
}

std::string arrow_result_json(const ArrowResult& r) {
    ojson j;
    j["N"] = r.N;
    j["pattern"] = r.pattern;
    j["arrows"] = r.arrows;
    j["nodes_visited"] = r.nodes_visited;
    if (r.witness) {
        ojson edges = ojson::array();
        for (int u = 0; u < r.witness->N(); ++u)
            for (int v = u + 1; v < r.witness->N(); ++v)
                if (r.witness->red_nbrs(u).test(v)) edges.push_back(ojson::array({u, v}));
        ojson w;
        w["N"] = r.witness->N();
        w["red_edges"] = edges;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return finish(j);
}

std::string arrow_result_text(const ArrowResult& r) {
    std::ostringstream os;
    os << "K_" << r.N << (r.arrows ? " arrows " : " does not arrow ") << r.pattern
       << " (" << r.nodes_visited << " nodes)\n";
    if (r.witness) os << format_coloring(*r.witness);
    return os.str();
}

std::string witness_search_json(const WitnessSearchResult& r, int N, long trials) {
    ojson j;
    j["N"] = N;
    j["trials"] = trials;
    j["trials_used"] = r.trials_used;
    j["found"] = r.witness.has_value();
    if (r.witness) {
        ojson edges = ojson::array();
        for (int u = 0; u < r.witness->N(); ++u)
            for (int v = u + 1; v < r.witness->N(); ++v)
                if (r.witness->red_nbrs(u).test(v)) edges.push_back(ojson::array({u, v}));
        ojson w;
        w["N"] = r.witness->N();
        w["red_edges"] = edges;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return finish(j);
}

std::string witness_search_text(const WitnessSearchResult& r, int N, long trials) {
    std::ostringstream os;
    if (r.witness)
        os << "copy-free coloring of K_" << N << " found after " << r.trials_used
           << " of " << trials << " trials\n"
           << format_coloring(*r.witness);
    else
        os << "no copy-free coloring of K_" << N << " in " << trials << " trials\n";
    return os.str();
}

}  // namespace ramsey
