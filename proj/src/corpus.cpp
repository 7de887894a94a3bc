#include "ringlab/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ringlab {

std::vector<ExprPtr> product_law_pool() {
    std::vector<ExprPtr> pool;
    for (long long n : {2, 3, 4, 5, 9, 25}) pool.push_back(zmod_expr(n));
    return pool;
}

std::vector<ExprPtr> default_structured_exprs(std::uint64_t seed, const BuildLimits& limits) {
    std::vector<ExprPtr> out;

    for (long long n : {2, 3, 4, 5, 9}) {
        out.push_back(upper_triangular_expr(2, zmod_expr(n)));
        out.push_back(upper_triangular_expr(3, zmod_expr(n)));
    }
    out.push_back(matrix_expr(2, zmod_expr(2)));
    out.push_back(matrix_expr(2, zmod_expr(3)));

    const std::vector<ExprPtr> pool = product_law_pool();
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i; j < pool.size(); ++j)
            out.push_back(product_expr({pool[i], pool[j]}));

    out.push_back(poly_quotient_expr(2, {0, 0, 1}));   // Z/2[x]/(x^2)
    out.push_back(poly_quotient_expr(4, {0, 0, 1}));   // Z/4[x]/(x^2)
    out.push_back(poly_quotient_expr(5, {0, 0, 1}));   // Z/5[x]/(x^2)
    out.push_back(poly_quotient_expr(25, {0, 0, 0, 1}));  // Z/25[x]/(x^3)

    // seeded quotient / subring / corner samples
    std::mt19937_64 rng(seed);
    const std::vector<long long> bases = {8, 12, 16, 18, 20, 24, 27, 36, 40};
    for (int i = 0; i < 4; ++i) {
        const long long n = bases[rng() % bases.size()];
        const int g = static_cast<int>(2 + rng() % (n - 2));
        out.push_back(quotient_expr(zmod_expr(n), {g}));
    }
    for (int i = 0; i < 4; ++i) {
        const long long a = bases[rng() % bases.size()];
        ExprPtr prod = product_expr({zmod_expr(a), zmod_expr(2 + static_cast<long long>(rng() % 8))});
        const FiniteRing P = build(prod, limits);
        out.push_back(subring_expr(prod, {static_cast<int>(rng() % P.order())}));
    }
    {
        // corners at computed nonzero idempotents
        const std::vector<std::string> corner_bases = {"M2(Z/2)", "T2(Z/3)", "Z/6", "Z/10"};
        for (const auto& text : corner_bases) {
            const ExprPtr base = parse_ring_expr(text);
            const FiniteRing R = build(base, limits);
            std::vector<int> idems;
            for (int e = 0; e < R.order(); ++e)
                if (e != R.zero() && R.mul(e, e) == e) idems.push_back(e);
            if (idems.empty()) continue;
            out.push_back(corner_expr(base, idems[rng() % idems.size()]));
        }
    }
    return out;
}

std::vector<ExprPtr> corpus_exprs(const CorpusSpec& spec) {
    std::vector<ExprPtr> exprs;
    if (spec.include_zmod_range)
        for (int n = spec.zmod_lo; n <= spec.zmod_hi; ++n) exprs.push_back(zmod_expr(n));
    if (spec.include_default_structured) {
        auto structured = default_structured_exprs(spec.eval.seed, spec.eval.limits);
        exprs.insert(exprs.end(), structured.begin(), structured.end());
    }
    for (const auto& text : spec.structured) exprs.push_back(parse_ring_expr(text));

    std::set<std::string> seen;
    std::vector<ExprPtr> out;
    for (auto& e : exprs)
        if (seen.insert(render(e)).second) out.push_back(std::move(e));
    return out;
}

} // namespace ringlab
