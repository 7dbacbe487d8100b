#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/interval.hpp"

namespace ramsey {

enum class CheckStatus { pass, fail, unchecked };
const char* status_name(CheckStatus s);

struct InequalityCheck {
    std::string name;
    std::string domain;
    CheckStatus status = CheckStatus::unchecked;
    std::string counterexample;  // concrete point on fail; refutation data for
                                 // the reading checks
    std::string method;          // "exact" or "outward-rounded interval"
};

// the side-condition sweep: per-epsilon base ratio and power margin, binomial
// upper-bound spot checks, the two alpha-window inequalities per m, the alpha
// ladder growth and partial-sum closure, the exponent ledger identities, and
// the two reading checks for ambiguously printed conditions
std::vector<InequalityCheck> verify_inequalities(const std::vector<long>& ms,
                                                 int alpha_grid_points,
                                                 const std::vector<Rat>& eps_grid);

// first-moment count C(N,n) * 2^(1-C(n,2)); below 1 it certifies a coloring
// of K_N without a monochromatic K_n exists
Rat expected_mono_cliques(long N, int n);

struct WitnessSearchResult {
    std::optional<TwoColoring> witness;  // verified copy-free in both colors
    long trials_used = 0;                // attempts consumed, successful one included
};

// sample seeded uniform colorings (trial k uses seed+k) until one contains no
// monochromatic copy of G in either color; none after `trials` failures
WitnessSearchResult lower_bound_witness_search(const Graph& G, int N, long trials,
                                               std::uint64_t seed);

// exhaustive desk-scale instance of the clique double-counting bound: every
// coloring of K_N must contain a monochromatic K_n, found through es_pair
// (Y may come back empty) with the complete search as backstop.  N defaults
// to 2n; N > 6 is not enumerable here and reports unchecked.
InequalityCheck es_clique_bound_check(int n, int N = -1);

}  // namespace ramsey
