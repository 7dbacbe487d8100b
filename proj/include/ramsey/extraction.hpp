#pragma once
#include <utility>

#include "ramsey/coloring.hpp"

namespace ramsey {

enum class Strictness { paper, relaxed };

struct ExtractionParams {
    int k = 0;
    int l = 0;
    Rat eps;
    long t = 0;
    Strictness strictness = Strictness::relaxed;
};

// Erdos--Szekeres pair extraction: pick the smallest-index pivot, branch red
// when its red degree within U is >= (k/(k+l))(|U|-1) (red checked first),
// recurse with the matching counter decremented, and prepend the pivot to X
// when the returned pair has the branch color.  Returns a red pair with
// |X| = k or a blue pair with |X| = l, and |Y| >= C(k+l,k)^{-1}|U| - k - l;
// when that bound is negative the recursion can exhaust U and |X| falls short,
// but the pair is always structurally valid.
MonoPair es_pair(const TwoColoring& c, int k, int l);
MonoPair es_pair_in(const TwoColoring& c, const Bitset& U, int k, int l);

struct EszTrace {
    Bitset S;        // survivors of the red-degree deletion loop
    Bitset B;        // blue clique used (size 2t, or the maximum below that)
    Bitset Sprime;   // S \ B after the 3*eps*|B| red-degree filter
    Bitset R;        // chosen floor(3*eps*|B|)-subset of B
    Bitset S_R;      // vertices of Sprime whose red neighborhood in B lies in R
    Rat deletion_threshold;  // eps * N
    Rat filter_threshold;    // 3 * eps * |B|
    bool quantitative_checked = false;  // true only under paper strictness
};

// Erdos--Szemeredi extension: deletion loop, blue clique, pigeonhole subset
// selection, then either the blue pair (B\R, S_R) or es_pair inside S_R with
// k = t, l = max(ceil(7*eps*t), |R|+1).  Requires red density <= eps within
// the working set; paper strictness additionally enforces 0 < eps <= 1/7,
// t >= 1/eps and N >= t*eps^{-14*eps*t} and asserts the quantitative bounds.
std::pair<MonoPair, EszTrace> esz_pair(const TwoColoring& c, const ExtractionParams& p);
std::pair<MonoPair, EszTrace> esz_pair_in(const TwoColoring& c, const Bitset& U0,
                                          const ExtractionParams& p);

// exact best-R computation used for the pigeonhole step and its tests:
// enumerates r-subsets of B in lexicographic order when C(|B|,r) <= limit,
// otherwise greedy by bucket frequency with a pigeonhole postcondition check
Bitset choose_R(const TwoColoring& c, const Bitset& B, const Bitset& Sprime, long r,
                long exact_limit = 1000000);

}  // namespace ramsey
