#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

struct RingExpr;
using ExprPtr = std::shared_ptr<const RingExpr>;

// Construction syntax tree for finite rings. Immutable; shared subtrees are
// fine. `elements` holds element indices of the *base* ring (quotient ideal
// generators, subring generators, or the corner idempotent).
struct RingExpr {
    enum class Kind {
        zmod,             // Z/n
        product,          // A x B x ...
        matrix,           // Mk(E)
        upper_triangular, // Tk(E)
        poly_quotient,    // Z/n[x]/(m(x))
        quotient,         // E / (a, b, ...)
        subring,          // sub(E; a, b, ...)
        corner,           // corner(E; e)
    };

    Kind kind;
    long long modulus = 0;          // zmod, poly_quotient
    int dim = 0;                    // matrix, upper_triangular
    std::vector<ExprPtr> factors;   // product
    ExprPtr base;                   // matrix/upper_triangular/quotient/subring/corner
    std::vector<long long> poly;    // poly_quotient modulus, ascending degree, monic
    std::vector<int> elements;      // quotient/subring generators, corner idempotent
};

ExprPtr zmod_expr(long long n);
ExprPtr product_expr(std::vector<ExprPtr> factors);
ExprPtr matrix_expr(int k, ExprPtr base);
ExprPtr upper_triangular_expr(int k, ExprPtr base);
ExprPtr poly_quotient_expr(long long n, std::vector<long long> modulus_poly);
ExprPtr quotient_expr(ExprPtr base, std::vector<int> ideal_generators);
ExprPtr subring_expr(ExprPtr base, std::vector<int> generators);
ExprPtr corner_expr(ExprPtr base, int idempotent);

bool expr_equal(const RingExpr& a, const RingExpr& b);
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return expr_equal(*a, *b); }

// Canonical textual form. parse_ring_expr(render(e)) reproduces e.
std::string render(const RingExpr& expr);
inline std::string render(const ExprPtr& expr) { return render(*expr); }

// Grammar (whitespace-insensitive):
//   expr   := term ('x' term)*                      products are n-ary, left to right
//   term   := atom ('/' '(' int, ... ')')*          quotient by generated ideal
//   atom   := 'Z' '/' int [ '[x]' '/' '(' poly ')' ]
//           | 'M' int '(' expr ')' | 'T' int '(' expr ')'
//           | 'sub' '(' expr ';' int, ... ')'
//           | 'corner' '(' expr ';' int ')'
//           | '(' expr ')'
//   poly   := signed monomials in x, e.g. x^2+3x+1
// Throws error(errc::syntax_error) carrying the offending position.
ExprPtr parse_ring_expr(std::string_view text);

} // namespace ringlab
