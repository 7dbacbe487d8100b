#pragma once
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/embed.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/interval.hpp"

namespace ramsey {

struct AmplifyParams {
    XNum alpha{Rat(0)};
    Rat eps;        // 2^{-ceil(3*alpha^{1/3})}, a power of two at or below eps_paper
    long eps_log2;  // the exponent above, negated
    XNum eps_paper{Rat(0)};  // the unsnapped 2^{-3*alpha^{1/3}}, for the ledger
    Int t;          // ceil(2^{2*alpha^{1/3}} * sqrt(m)), rounded from the upper end
    long m = 0;
    Strictness profile = Strictness::relaxed;

    // paper profile enforces 27 <= alpha <= (log2^3 m)/8
    static AmplifyParams make(const XNum& alpha, long m, Strictness profile,
                              mpfr_prec_t prec = kDefaultPrec);
};

struct MonoCopy {
    Embedding emb;  // emb.color engaged
};

using AmplifyResult = std::variant<MonoCopy, MonoPair>;

// one amplification step: degree-split the pattern by s = |X|, look for the
// split remainder inside Y in the pair's color (assembling the full copy
// through X when found), otherwise sparsify Y and re-extract a pair with
// esz_pair
AmplifyResult amplify(const TwoColoring& c, const Graph& G, const MonoPair& pair,
                      const AmplifyParams& p);

enum class Outcome { mono_copy, exhausted, precondition_stop };
const char* outcome_name(Outcome o);

struct IterationRecord {
    int i = 0;
    XNum alpha{Rat(0)};
    std::optional<long> x_size;          // actual sizes when run on a coloring
    std::optional<long> y_size;
    std::optional<Int> x_lb;             // trace mode: floor of alpha_i*sqrt(m)
    std::optional<XNum> y_log2_lb;       // trace mode: certified exponent bound
    std::string y_log2_sym;              // symbolic form of the bound
};

struct AmplificationTrace {
    long m = 0;
    Outcome outcome = Outcome::precondition_stop;
    std::vector<IterationRecord> iterations;
    std::vector<std::string> notes;
    std::optional<Embedding> copy;  // engaged iff outcome == mono_copy
};

// full driver.  For m <= 3906 runs the direct route (clique via es_pair,
// then the complete two-color search, so "exhausted" is an exact verdict);
// otherwise the alpha-iteration with amplify.  The paper profile silently
// degrades to relaxed when N is too small for the size preconditions (always,
// at desk scale) and says so in the notes.
AmplificationTrace prove_or_find(const TwoColoring& c, const Graph& G,
                                 Strictness profile = Strictness::relaxed);

struct BoundCheck {
    std::string name;
    bool pass = false;
    std::string note;
};

struct BoundReport {
    long m = 0;
    XNum sqrt_m{Rat(0)};
    XNum N_exponent{Rat(0)};          // 250*sqrt(m)
    XNum initial_Y_exponent{Rat(0)};  // 196*sqrt(m)
    int stop_index = 0;
    std::vector<IterationRecord> iterations;
    XNum final_X_lb{Rat(0)};  // m^{3/2}
    std::vector<BoundCheck> checks;
    bool all_pass = false;
};

// coloring-free ledger of every exponent and inequality the proof consumes,
// all certified by exact rationals or outward-rounded intervals
BoundReport trace_bounds(long m);

// alpha_1 = 27, alpha_{i+1} = 2^{2*alpha_i^{1/3}}, materialized until the
// first alpha_i >= (log2^3 m)/8 (that index is stop_index, 1-based)
struct AlphaSeq {
    std::vector<XNum> alphas;
    int stop_index = 0;
};
AlphaSeq alpha_sequence_until_stop(long m);

}  // namespace ramsey
