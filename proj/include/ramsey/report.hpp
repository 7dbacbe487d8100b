#pragma once
#include <string>
#include <vector>

#include "ramsey/amplify.hpp"
#include "ramsey/arrows.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/extraction.hpp"

namespace ramsey {

enum class Format { text, json };
Format parse_format(const std::string& s);

// Every emitter returns a newline-terminated string with fixed key order and
// two-space indentation: equal inputs give byte-identical output.  Exact
// rationals render as "p/q", certified reals as decimal lower endpoints, and
// sets as sorted vertex-index arrays.
std::string coloring_json(const TwoColoring& c);
std::string pair_json(const MonoPair& p);
std::string pair_text(const MonoPair& p);
std::string esz_pair_json(const MonoPair& p, const EszTrace& t);
std::string esz_pair_text(const MonoPair& p, const EszTrace& t);
std::string embedding_json(const Embedding& e);
std::string embedding_text(const Embedding& e);
std::string sparse_witness_json(const SparsePairWitness& w);
std::string amplify_result_json(const AmplifyParams& p, const AmplifyResult& r);
std::string amplify_result_text(const AmplifyParams& p, const AmplifyResult& r);
std::string trace_json(const AmplificationTrace& t);
std::string trace_text(const AmplificationTrace& t);
std::string bound_report_json(const BoundReport& r);
std::string bound_report_text(const BoundReport& r);
std::string inequality_report_json(const std::vector<InequalityCheck>& cs);
// one "PASS|FAIL|UNCHECKED <name> <domain> [counterexample]" line per check
std::string inequality_report_text(const std::vector<InequalityCheck>& cs);
std::string arrow_result_json(const ArrowResult& r);
std::string arrow_result_text(const ArrowResult& r);
std::string witness_search_json(const WitnessSearchResult& r, int N, long trials);
std::string witness_search_text(const WitnessSearchResult& r, int N, long trials);

}  // namespace ramsey
