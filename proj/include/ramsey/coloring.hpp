#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Color { red, blue };

inline Color other(Color c) { return c == Color::red ? Color::blue : Color::red; }
inline const char* color_name(Color c) { return c == Color::red ? "red" : "blue"; }

// red/blue edge-coloring of K_N stored as the red graph; blue is the complement
class TwoColoring {
  public:
    TwoColoring() = default;
    explicit TwoColoring(Graph red) : red_(std::move(red)) {}

    int N() const { return red_.n(); }
    const Graph& red() const { return red_; }
    long red_m() const { return red_.m(); }
    long blue_m() const { return (long)N() * (N() - 1) / 2 - red_.m(); }

    bool is_red(int u, int v) const { return red_.has_edge(u, v); }
    const Bitset& red_nbrs(int v) const { return red_.adj(v); }
    Bitset blue_nbrs(int v) const {
        Bitset b = red_.adj(v).complement();
        b.reset(v);
        return b;
    }
    Bitset nbrs(int v, Color c) const {
        return c == Color::red ? red_.adj(v) : blue_nbrs(v);
    }

    // the complement coloring (red and blue swapped)
    TwoColoring flipped() const;

    // red graph as a plain Graph for one color class
    Graph color_graph(Color c) const { return c == Color::red ? red_ : flipped().red(); }

    bool operator==(const TwoColoring& o) const { return red_ == o.red_; }

  private:
    Graph red_;
};

struct MonoPair {
    Color color = Color::red;
    Bitset X, Y;
};

// true iff every edge inside X and every X-Y edge has the stated color;
// Y-internal edges are unconstrained.  Throws when X and Y overlap.
bool is_mono_pair(const TwoColoring& c, Color color, const Bitset& X, const Bitset& Y);

// uniform: edge (u,v), u<v, is red iff bit u*N+v of the seeded splitmix64
// stream is set (word b/64, bit b%64)
TwoColoring gen_uniform(int N, uint64_t seed);
// biased: edge (u,v) uses stream word u*N+v; red iff word*den < num*2^64
TwoColoring gen_biased(int N, const Rat& p, uint64_t seed);
// paley: N prime, N = 1 mod 4; (u,v) red iff u-v is a nonzero square mod N
TwoColoring gen_paley(int N);

// text format: `c` comments, `p kn2 <N>`, red edges `r <u> <v>` (1-indexed);
// every unlisted pair is blue
TwoColoring parse_coloring(std::istream& in);
TwoColoring parse_coloring_file(const std::string& path);
std::string format_coloring(const TwoColoring& c);

}  // namespace ramsey
