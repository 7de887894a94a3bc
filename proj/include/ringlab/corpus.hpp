#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/predicates.hpp"

namespace ringlab {

// A batch of rings to classify or verify, plus the evaluation guards.
struct CorpusSpec {
    int zmod_lo = 2;
    int zmod_hi = 200;
    bool include_zmod_range = true;
    bool include_default_structured = true;
    std::vector<std::string> structured;  // extra ring expressions
    std::vector<std::string> theorems;    // theorem ids; empty means none, {"all"} means all
    EvalOptions eval;
    int jobs = 1;
};

// Structured side of the default corpus: triangular and full matrix rings,
// pool products, polynomial quotients, and seeded quotient/subring/corner
// samples. Deterministic for a fixed seed.
std::vector<ExprPtr> default_structured_exprs(std::uint64_t seed, const BuildLimits& limits);

// Expands the spec into the deduplicated expression list (canonical render
// string is the identity).
std::vector<ExprPtr> corpus_exprs(const CorpusSpec& spec);

// The pool used by the product and power laws.
std::vector<ExprPtr> product_law_pool();

} // namespace ringlab
