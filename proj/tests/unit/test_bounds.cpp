#include <set>

#include "doctest.h"
#include "ramsey/bounds.hpp"
#include "ramsey/embed.hpp"

using namespace ramsey;

namespace {

const InequalityCheck* by_name(const std::vector<InequalityCheck>& cs,
                               const std::string& name) {
    for (const InequalityCheck& c : cs)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("the inequality sweep passes on the reference instance") {
    std::vector<InequalityCheck> cs =
        verify_inequalities({3600}, 60, {Rat(1, 7), Rat(1, 8), Rat(1, 16)});
    for (const char* name :
         {"lemma3_base_ratio", "lemma3_power_margin", "binomial_upper_spots",
          "alpha_tail_bound[m=3600]", "exp_window_chain[m=3600]", "alpha_growth_ratio",
          "alpha_partial_sum", "exponent_ledger_identities", "lemma3_t_reading",
          "series_sign_reading"}) {
        const InequalityCheck* c = by_name(cs, name);
        REQUIRE_MESSAGE(c != nullptr, name);
        CHECK_MESSAGE(c->status == CheckStatus::pass,
                      name << ": " << c->counterexample);
    }
    CHECK(cs.size() == 10);
}

TEST_CASE("per-m window checks appear once per requested m") {
    std::vector<InequalityCheck> cs = verify_inequalities({3600, 10000}, 40, {Rat(1, 7)});
    CHECK(by_name(cs, "alpha_tail_bound[m=3600]") != nullptr);
    CHECK(by_name(cs, "alpha_tail_bound[m=10000]") != nullptr);
    CHECK(by_name(cs, "exp_window_chain[m=10000]") != nullptr);
    for (const InequalityCheck& c : cs) CHECK(c.status == CheckStatus::pass);
}

TEST_CASE("typo verdicts carry their refutations") {
    std::vector<InequalityCheck> cs = verify_inequalities({3600}, 10, {Rat(1, 7)});
    const InequalityCheck* t = by_name(cs, "lemma3_t_reading");
    REQUIRE(t != nullptr);
    CHECK(t->status == CheckStatus::pass);
    CHECK(t->counterexample.find("refuted reading t<=1/eps") != std::string::npos);
    const InequalityCheck* s = by_name(cs, "series_sign_reading");
    REQUIRE(s != nullptr);
    CHECK(s->status == CheckStatus::pass);
    CHECK(s->counterexample.find("7/9") != std::string::npos);
}

TEST_CASE("status names") {
    CHECK(std::string(status_name(CheckStatus::pass)) == "pass");
    CHECK(std::string(status_name(CheckStatus::fail)) == "fail");
    CHECK(std::string(status_name(CheckStatus::unchecked)) == "unchecked");
}

TEST_CASE("expected monochromatic clique count") {
    // E = 2*C(N,n)*2^{-C(n,2)}
    CHECK(expected_mono_cliques(8, 6) == Rat(7, 4096));
    CHECK(expected_mono_cliques(5, 3) == Rat(20, 8));
    CHECK(expected_mono_cliques(4, 6) == 0);
    CHECK_THROWS_AS(expected_mono_cliques(5, 1), precondition_error);

    // the Erdos bound: E < 1 at N = floor(2^{n/2}) for n >= 3 (probabilistic
    // lower bound r(n) > 2^{n/2}); spot-check part of the sweep here
    for (int n = 3; n <= 14; ++n) {
        long N = (long)isqrt(Int(1) << n);
        CHECK(expected_mono_cliques(N, n) < 1);
    }
}

TEST_CASE("random witness search certifies r(K_3) > 5") {
    WitnessSearchResult r = lower_bound_witness_search(Graph::complete(3), 5, 200, 0);
    REQUIRE(r.witness.has_value());
    CHECK(r.trials_used >= 1);
    CHECK(r.trials_used <= 200);
    CHECK_FALSE(find_mono_copy(*r.witness, Color::red, Graph::complete(3)).has_value());
    CHECK_FALSE(find_mono_copy(*r.witness, Color::blue, Graph::complete(3)).has_value());
    // deterministic: the same seed finds the same witness
    WitnessSearchResult r2 = lower_bound_witness_search(Graph::complete(3), 5, 200, 0);
    CHECK(r.trials_used == r2.trials_used);
    CHECK(*r.witness == *r2.witness);
}

TEST_CASE("witness search reports failure honestly") {
    // K_6 always contains a monochromatic triangle, so no witness can exist
    WitnessSearchResult r = lower_bound_witness_search(Graph::complete(3), 6, 25, 1);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.trials_used == 25);
}

TEST_CASE("es_pair clique law, exhaustive over K_4 and K_6") {
    InequalityCheck c2 = es_clique_bound_check(2);
    CHECK(c2.status == CheckStatus::pass);
    InequalityCheck c3 = es_clique_bound_check(3);  // all 2^15 colorings of K_6
    CHECK(c3.status == CheckStatus::pass);
    CHECK(c3.domain.find("K_6") != std::string::npos);
    // beyond the exhaustive envelope: honest refusal, not silent sampling
    CHECK(es_clique_bound_check(4).status == CheckStatus::unchecked);
    // N = 5 < r(3): the pentagon coloring must surface as a counterexample
    InequalityCheck c35 = es_clique_bound_check(3, 5);
    CHECK(c35.status == CheckStatus::fail);
    CHECK_FALSE(c35.counterexample.empty());
}
