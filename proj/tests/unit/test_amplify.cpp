#include <algorithm>

#include "doctest.h"
#include "ramsey/amplify.hpp"
#include "ramsey/report.hpp"

using namespace ramsey;

namespace {

bool has_check(const BoundReport& r, const std::string& name, bool expect_pass = true) {
    for (const BoundCheck& c : r.checks)
        if (c.name == name) return c.pass == expect_pass;
    return false;
}

}  // namespace

TEST_CASE("amplification parameters at the window corner alpha = 27") {
    AmplifyParams p = AmplifyParams::make(XNum{Rat(27)}, 3600, Strictness::relaxed);
    CHECK(p.eps == Rat(1, 512));  // 2^{-ceil(3*3)}
    CHECK(p.eps_log2 == -9);
    // alpha = 27 has an exact cube root, so eps_paper snaps to itself
    CHECK(p.eps_paper.exact());
    CHECK(p.eps_paper.rat() == Rat(1, 512));
    CHECK(p.t == 3840);  // 2^6 * 60
}

TEST_CASE("epsilon snapping records both values") {
    AmplifyParams p = AmplifyParams::make(XNum{Rat(30)}, 3600, Strictness::relaxed);
    // 3*cbrt(30) ~ 9.32 -> snapped exponent 10
    CHECK(p.eps == Rat(1, 1024));
    // eps_paper lies strictly between the snapped value and the next power
    CHECK(p.eps_paper.ge(XNum{Rat(1, 1024)}) == XNum::Cmp::yes);
    CHECK(p.eps_paper.le(XNum{Rat(1, 512)}) == XNum::Cmp::yes);
    // snapped eps never exceeds eps_paper: every inequality consuming eps
    // only gets easier
    CHECK(XNum{p.eps}.le(p.eps_paper) == XNum::Cmp::yes);
}

TEST_CASE("amplification parameter preconditions") {
    CHECK_THROWS_AS(AmplifyParams::make(XNum{Rat(1, 2)}, 100, Strictness::relaxed),
                    precondition_error);
    // paper window: 27 <= alpha <= (log2 m)^3 / 8
    CHECK_THROWS_AS(AmplifyParams::make(XNum{Rat(26)}, 3600, Strictness::paper),
                    precondition_error);
    CHECK_THROWS_AS(AmplifyParams::make(XNum{Rat(207)}, 3600, Strictness::paper),
                    precondition_error);
    AmplifyParams ok = AmplifyParams::make(XNum{Rat(27)}, 3600, Strictness::paper);
    CHECK(ok.profile == Strictness::paper);
    // relaxed has no upper window
    AmplifyParams big = AmplifyParams::make(XNum{Rat(207)}, 3600, Strictness::relaxed);
    CHECK(big.t > ok.t);
}

TEST_CASE("alpha ladder stops exactly at the window top") {
    AlphaSeq s = alpha_sequence_until_stop(3600);
    REQUIRE(s.stop_index == 3);
    REQUIRE(s.alphas.size() >= 3);
    CHECK(s.alphas[0].rat() == 27);
    CHECK(s.alphas[1].rat() == 64);
    CHECK(s.alphas[2].rat() == 256);

    // tiny m: 27 already clears (log2 m)^3/8
    CHECK(alpha_sequence_until_stop(2).stop_index == 1);
    CHECK(alpha_sequence_until_stop(4).stop_index == 1);

    // the ladder never needs more than 5 rungs for any long m
    AlphaSeq huge = alpha_sequence_until_stop(1000000000000000000L);
    CHECK(huge.stop_index <= 5);
}

TEST_CASE("one amplification step on a small coloring") {
    TwoColoring c = gen_uniform(60, 11);
    Graph G = Graph::path(5);  // m = 4
    MonoPair pair = es_pair(c, 8, 8);
    AmplifyParams p = AmplifyParams::make(XNum{Rat(2)}, G.m(), Strictness::relaxed);
    AmplifyResult r = amplify(c, G, pair, p);
    if (std::holds_alternative<MonoCopy>(r)) {
        check_mono_copy(c, G, std::get<MonoCopy>(r).emb);
    } else {
        const MonoPair& out = std::get<MonoPair>(r);
        CHECK(is_mono_pair(c, out.color, out.X, out.Y));
    }
    // determinism: the same call gives the same result
    AmplifyResult r2 = amplify(c, G, pair, p);
    CHECK(r.index() == r2.index());
    if (std::holds_alternative<MonoCopy>(r))
        CHECK(std::get<MonoCopy>(r).emb.map == std::get<MonoCopy>(r2).emb.map);
}

TEST_CASE("amplify validates its inputs") {
    TwoColoring c = gen_uniform(30, 3);
    Graph G = Graph::path(4);
    AmplifyParams p = AmplifyParams::make(XNum{Rat(2)}, G.m(), Strictness::relaxed);
    MonoPair bogus;
    bogus.color = Color::red;
    bogus.X = Bitset::full(30);  // certainly not a red clique for this seed
    bogus.Y = Bitset(30);
    CHECK_THROWS_AS(amplify(c, G, bogus, p), precondition_error);
    // params built for a different edge count
    AmplifyParams wrong = AmplifyParams::make(XNum{Rat(2)}, 7, Strictness::relaxed);
    MonoPair pair = es_pair(c, 4, 4);
    CHECK_THROWS_AS(amplify(c, G, pair, wrong), precondition_error);
}

TEST_CASE("prove_or_find: direct route verdicts") {
    Graph k3 = Graph::complete(3);

    AmplificationTrace t1 = prove_or_find(TwoColoring(Graph::complete(10)), k3);
    CHECK(t1.outcome == Outcome::mono_copy);
    REQUIRE(t1.copy.has_value());
    CHECK(t1.copy->map == std::vector<int>{0, 1, 2});
    CHECK(t1.copy->color == Color::red);

    // paley-5: exhaustive negative
    AmplificationTrace t2 = prove_or_find(gen_paley(5), k3);
    CHECK(t2.outcome == Outcome::exhausted);
    CHECK_FALSE(t2.copy.has_value());

    // paley-17 vs K_4: the classical lower-bound witness
    AmplificationTrace t3 = prove_or_find(gen_paley(17), Graph::complete(4));
    CHECK(t3.outcome == Outcome::exhausted);

    // host smaller than the pattern
    AmplificationTrace t4 = prove_or_find(gen_paley(5), Graph::complete(7));
    CHECK(t4.outcome == Outcome::exhausted);

    // empty pattern embeds vacuously
    AmplificationTrace t5 = prove_or_find(gen_paley(5), Graph(0));
    CHECK(t5.outcome == Outcome::mono_copy);
    CHECK(t5.copy->map.empty());

    CHECK_THROWS_AS(prove_or_find(gen_paley(5), Graph(2)), precondition_error);
}

TEST_CASE("prove_or_find: random hosts contain short paths") {
    // r(P_4) = 5, so any coloring of K_40 contains a monochromatic P_4
    AmplificationTrace t = prove_or_find(gen_uniform(40, 5), Graph::path(4));
    CHECK(t.outcome == Outcome::mono_copy);
    REQUIRE(t.copy.has_value());
}

TEST_CASE("prove_or_find: main route engages above the direct threshold") {
    // m = 3916 > 3906 forces the alpha ladder; the all-red host resolves at
    // the first clique-extraction step
    Graph G = Graph::complete(89);
    REQUIRE(G.m() == 3916);
    AmplificationTrace t = prove_or_find(TwoColoring(Graph::complete(100)), G);
    CHECK(t.outcome == Outcome::mono_copy);
    REQUIRE(t.copy.has_value());
    REQUIRE(!t.iterations.empty());
    CHECK(t.iterations[0].i == 1);
    CHECK(t.iterations[0].alpha.rat() == 27);
    CHECK(t.iterations[0].x_size == 100);  // es_pair with k = l = N on all-red
}

TEST_CASE("trace_bounds on the reference instance m = 3600") {
    BoundReport r = trace_bounds(3600);
    CHECK(r.m == 3600);
    CHECK(r.stop_index == 3);
    CHECK(r.all_pass);
    CHECK(r.sqrt_m.rat() == 60);
    CHECK(r.N_exponent.rat() == 15000);
    CHECK(r.initial_Y_exponent.rat() == 11760);

    REQUIRE(r.iterations.size() == 3);
    CHECK(r.iterations[0].alpha.str() == "27");
    CHECK(r.iterations[1].alpha.str() == "64");
    CHECK(r.iterations[2].alpha.str() == "256");
    CHECK(*r.iterations[0].x_lb == 1620);   // floor(27*60)
    CHECK(*r.iterations[1].x_lb == 3840);   // floor(64*60)
    CHECK(*r.iterations[2].x_lb == 15360);  // floor(256*60)
    CHECK(r.iterations[0].y_log2_lb->rat() == 11760);  // 196*60
    CHECK(r.iterations[1].y_log2_lb->rat() == 9360);   // minus 120*(1/3)*60
    CHECK(r.iterations[2].y_log2_lb->rat() == 7560);   // minus 120*(1/4)*60
    CHECK(r.iterations[0].y_log2_sym == "196*sqrt(m)");

    for (const char* name :
         {"initial_exponent_identity", "floor_identity", "entry_requirement_1",
          "entry_requirement_2", "entry_requirement_3", "iteration_floor_2",
          "iteration_floor_3", "alpha_ratio_1", "alpha_ratio_2", "sum_bound_1",
          "sum_bound_2", "sum_bound", "stop_rule", "t_stop_dominates", "final_vs_2m"})
        CHECK_MESSAGE(has_check(r, name), name);
}

TEST_CASE("trace_bounds equality rungs certify exactly") {
    // i = 2 sits exactly on the iteration floor (156 = 156); a non-square m
    // exercises the coefficient comparison that makes this certifiable
    for (long m : {3600L, 3907L, 10000L, 123456L}) {
        BoundReport r = trace_bounds(m);
        CHECK_MESSAGE(has_check(r, "iteration_floor_2"), "m=" << m);
        CHECK_MESSAGE(has_check(r, "alpha_ratio_1"), "m=" << m);
        CHECK_MESSAGE(has_check(r, "sum_bound_1"), "m=" << m);
        CHECK_MESSAGE(r.all_pass, "m=" << m);
    }
    // m < 4: the final 2m comparison honestly fails
    BoundReport tiny = trace_bounds(2);
    CHECK(has_check(tiny, "final_vs_2m", false));
    CHECK_FALSE(tiny.all_pass);
}

TEST_CASE("trace_bounds is deterministic") {
    std::string a = bound_report_json(trace_bounds(3600));
    std::string b = bound_report_json(trace_bounds(3600));
    CHECK(a == b);
}
