#include <sstream>

#include "doctest.h"
#include "ramsey/graph.hpp"

using namespace ramsey;

TEST_CASE("graph builders") {
    Graph k5 = Graph::complete(5);
    CHECK(k5.n() == 5);
    CHECK(k5.m() == 10);
    CHECK(k5.max_degree() == 4);

    Graph p4 = Graph::path(4);
    CHECK(p4.m() == 3);
    CHECK(p4.has_edge(0, 1));
    CHECK(p4.has_edge(1, 2));
    CHECK(p4.has_edge(2, 3));
    CHECK_FALSE(p4.has_edge(0, 3));

    Graph c5 = Graph::cycle(5);
    CHECK(c5.m() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.has_edge(0, 4));

    Graph kb = Graph::complete_bipartite(3, 4);
    CHECK(kb.n() == 7);
    CHECK(kb.m() == 12);
    CHECK(kb.degree(0) == 4);
    CHECK(kb.degree(3) == 3);
    CHECK_FALSE(kb.has_edge(0, 1));
    CHECK(kb.has_edge(0, 3));
}

TEST_CASE("edge bookkeeping rejects defects") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), parse_error);  // duplicate
    CHECK_THROWS_AS(g.add_edge(1, 1), parse_error);  // self-loop
    CHECK_THROWS_AS(g.add_edge(0, 3), parse_error);  // out of range
    CHECK(g.m() == 1);
}

TEST_CASE("graph text format round trip") {
    Graph g = Graph::cycle(6);
    std::istringstream ss(format_graph(g));
    Graph h = parse_graph(ss);
    CHECK(h == g);
}

TEST_CASE("graph parse errors carry line numbers") {
    auto fails_with_line = [](const std::string& text, const std::string& frag) {
        std::istringstream ss(text);
        try {
            parse_graph(ss);
            FAIL("expected parse_error for: " << text);
        } catch (const parse_error& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
            CHECK(std::string(e.what()).find(frag) != std::string::npos);
        }
    };
    fails_with_line("e 1 2\n", "header");
    fails_with_line("p edge 3 1\ne 1 9\n", "9");
    fails_with_line("p edge 3 2\ne 1 2\ne 1 2\n", "duplicate");
    fails_with_line("p edge x 1\n", "order");
}

TEST_CASE("densities are exact rationals") {
    Graph p4 = Graph::path(4);
    CHECK(edge_density(p4, Bitset::full(4)) == Rat(1, 2));  // 3 of C(4,2)=6
    Graph k5 = Graph::complete(5);
    CHECK(edge_density(k5, Bitset::full(5)) == 1);
    Bitset sub = Bitset::of(5, {0, 1, 2});
    CHECK(edge_density(k5, sub) == 1);

    Graph kb = Graph::complete_bipartite(3, 4);
    Bitset left = Bitset::of(7, {0, 1, 2}), right = Bitset::of(7, {3, 4, 5, 6});
    CHECK(pair_density(kb, left, right) == 1);
    CHECK(edge_density(kb, left) == 0);
    Bitset mixed = Bitset::of(7, {0, 3});
    CHECK(pair_density(kb, left - mixed, right) == 1);
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(Graph::path(7)) == 1);
    CHECK(degeneracy(Graph::cycle(7)) == 2);
    CHECK(degeneracy(Graph::complete(5)) == 4);
    CHECK(degeneracy(Graph::complete_bipartite(3, 4)) == 3);
    CHECK(degeneracy(Graph(4)) == 0);
}

TEST_CASE("top-degree split: order, ties, remainder relabeling") {
    Graph star = Graph::complete_bipartite(1, 4);  // vertex 0 is the center
    PatternSplit s1 = top_degree_split(star, 1);
    CHECK(s1.A == std::vector<int>{0});
    CHECK(s1.gprime.n() == 4);
    CHECK(s1.gprime.m() == 0);
    CHECK(s1.prime_orig == std::vector<int>{1, 2, 3, 4});

    // ties among the degree-1 leaves resolve toward the smaller index
    PatternSplit s2 = top_degree_split(star, 2);
    CHECK(s2.A == std::vector<int>{0, 1});

    Graph p5 = Graph::path(5);
    PatternSplit s3 = top_degree_split(p5, 2);
    // degrees 1,2,2,2,1: picks vertices 1 and 2
    CHECK(s3.A == std::vector<int>{1, 2});
    CHECK(s3.gprime.n() == 3);
    CHECK(s3.gprime.m() == 1);  // only the 3-4 edge survives
    CHECK(s3.prime_orig == std::vector<int>{0, 3, 4});
    CHECK(s3.gprime.has_edge(1, 2));  // relabeled 3-4
}
