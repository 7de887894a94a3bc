#include "ringlab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ringlab {

namespace {

ExprPtr make(RingExpr e) { return std::make_shared<const RingExpr>(std::move(e)); }

} // namespace

ExprPtr zmod_expr(long long n) {
    if (n < 1) fail(errc::malformed_expr, "Z/n requires n >= 1, got " + std::to_string(n));
    RingExpr e;
    e.kind = RingExpr::Kind::zmod;
    e.modulus = n;
    return make(std::move(e));
}

ExprPtr product_expr(std::vector<ExprPtr> factors) {
    if (factors.empty()) fail(errc::malformed_expr, "product needs at least one factor");
    if (factors.size() == 1) return factors.front();
    RingExpr e;
    e.kind = RingExpr::Kind::product;
    e.factors = std::move(factors);
    return make(std::move(e));
}

ExprPtr matrix_expr(int k, ExprPtr base) {
    if (k < 1) fail(errc::malformed_expr, "matrix dimension must be >= 1");
    RingExpr e;
    e.kind = RingExpr::Kind::matrix;
    e.dim = k;
    e.base = std::move(base);
    return make(std::move(e));
}

ExprPtr upper_triangular_expr(int k, ExprPtr base) {
    if (k < 1) fail(errc::malformed_expr, "triangular dimension must be >= 1");
    RingExpr e;
    e.kind = RingExpr::Kind::upper_triangular;
    e.dim = k;
    e.base = std::move(base);
    return make(std::move(e));
}

ExprPtr poly_quotient_expr(long long n, std::vector<long long> modulus_poly) {
    if (n < 1) fail(errc::malformed_expr, "coefficient modulus must be >= 1");
    // normalize coefficients into [0, n)
    for (auto& c : modulus_poly) c = ((c % n) + n) % n;
    while (!modulus_poly.empty() && modulus_poly.back() == 0) modulus_poly.pop_back();
    if (modulus_poly.size() < 2)
        fail(errc::malformed_expr, "modulus polynomial must have degree >= 1");
    if (modulus_poly.back() != 1 % n)
        fail(errc::malformed_expr, "modulus polynomial must be monic");
    RingExpr e;
    e.kind = RingExpr::Kind::poly_quotient;
    e.modulus = n;
    e.poly = std::move(modulus_poly);
    return make(std::move(e));
}

ExprPtr quotient_expr(ExprPtr base, std::vector<int> ideal_generators) {
    RingExpr e;
    e.kind = RingExpr::Kind::quotient;
    e.base = std::move(base);
    e.elements = std::move(ideal_generators);
    return make(std::move(e));
}

ExprPtr subring_expr(ExprPtr base, std::vector<int> generators) {
    RingExpr e;
    e.kind = RingExpr::Kind::subring;
    e.base = std::move(base);
    e.elements = std::move(generators);
    return make(std::move(e));
}

ExprPtr corner_expr(ExprPtr base, int idempotent) {
    if (idempotent < 0) fail(errc::malformed_expr, "corner idempotent index must be >= 0");
    RingExpr e;
    e.kind = RingExpr::Kind::corner;
    e.base = std::move(base);
    e.elements = {idempotent};
    return make(std::move(e));
}

bool expr_equal(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind) return false;
    if (a.modulus != b.modulus || a.dim != b.dim) return false;
    if (a.poly != b.poly || a.elements != b.elements) return false;
    if (static_cast<bool>(a.base) != static_cast<bool>(b.base)) return false;
    if (a.base && !expr_equal(*a.base, *b.base)) return false;
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i)
        if (!expr_equal(*a.factors[i], *b.factors[i])) return false;
    return true;
}

namespace {

void render_poly(std::ostream& os, const std::vector<long long>& coeffs) {
    // descending powers, omitting zero terms; leading term is monic x^d
    bool first = true;
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
        long long c = coeffs[d];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (d == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << 'x';
            if (d > 1) os << '^' << d;
        }
    }
    if (first) os << '0';
}

void render_to(std::ostream& os, const RingExpr& e) {
    switch (e.kind) {
    case RingExpr::Kind::zmod:
        os << "Z/" << e.modulus;
        break;
    case RingExpr::Kind::product: {
        bool first = true;
        for (const auto& f : e.factors) {
            if (!first) os << " x ";
            first = false;
            bool paren = f->kind == RingExpr::Kind::product || f->kind == RingExpr::Kind::quotient;
            if (paren) os << '(';
            render_to(os, *f);
            if (paren) os << ')';
        }
        break;
    }
    case RingExpr::Kind::matrix:
        os << 'M' << e.dim << '(';
        render_to(os, *e.base);
        os << ')';
        break;
    case RingExpr::Kind::upper_triangular:
        os << 'T' << e.dim << '(';
        render_to(os, *e.base);
        os << ')';
        break;
    case RingExpr::Kind::poly_quotient:
        os << "Z/" << e.modulus << "[x]/(";
        render_poly(os, e.poly);
        os << ')';
        break;
    case RingExpr::Kind::quotient: {
        bool paren = e.base->kind == RingExpr::Kind::product;
        if (paren) os << '(';
        render_to(os, *e.base);
        if (paren) os << ')';
        os << "/(";
        for (size_t i = 0; i < e.elements.size(); ++i) {
            if (i) os << ',';
            os << e.elements[i];
        }
        os << ')';
        break;
    }
    case RingExpr::Kind::subring:
        os << "sub(";
        render_to(os, *e.base);
        os << "; ";
        for (size_t i = 0; i < e.elements.size(); ++i) {
            if (i) os << ',';
            os << e.elements[i];
        }
        os << ')';
        break;
    case RingExpr::Kind::corner:
        os << "corner(";
        render_to(os, *e.base);
        os << "; " << e.elements.at(0) << ')';
        break;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_product();
        skip_ws();
        if (pos_ != text_.size()) err("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void err(const std::string& what) const {
        fail(errc::syntax_error, what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) err(std::string("expected '") + c + "'");
    }

    bool consume_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }

    long long parse_int() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        long long v = 0;
        bool any = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000'000LL) {
                pos_ = start;
                err("integer literal out of range");
            }
            ++pos_;
            any = true;
        }
        if (!any) {
            pos_ = start;
            err("expected integer");
        }
        return neg ? -v : v;
    }

    int parse_element_index() {
        long long v = parse_int();
        if (v < 0 || v > 0x7fffffff) err("element index out of range");
        return static_cast<int>(v);
    }

    std::vector<int> parse_int_list() {
        std::vector<int> out;
        out.push_back(parse_element_index());
        while (consume(',')) out.push_back(parse_element_index());
        return out;
    }

    // one monomial: "3", "x", "3x", "x^2", "3x^2"
    void parse_monomial(std::vector<long long>& coeffs, long long sign) {
        long long c = 1;
        bool have_coeff = false;
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            c = parse_int();
            have_coeff = true;
        }
        long long deg = 0;
        if (consume('x')) {
            deg = 1;
            if (consume('^')) deg = parse_int();
            if (deg < 0 || deg > 64) err("polynomial degree out of range");
        } else if (!have_coeff) {
            err("expected polynomial term");
        }
        if (coeffs.size() < static_cast<size_t>(deg) + 1) coeffs.resize(deg + 1, 0);
        coeffs[deg] += sign * c;
    }

    std::vector<long long> parse_poly() {
        std::vector<long long> coeffs;
        long long sign = 1;
        if (consume('-')) sign = -1;
        parse_monomial(coeffs, sign);
        for (;;) {
            if (consume('+')) sign = 1;
            else if (consume('-')) sign = -1;
            else break;
            parse_monomial(coeffs, sign);
        }
        return coeffs;
    }

    ExprPtr parse_product() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_term());
        while (peek() == 'x') {
            ++pos_;
            factors.push_back(parse_term());
        }
        return product_expr(std::move(factors));
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_atom();
        // quotient suffixes: E/(a,b)/(c)
        for (;;) {
            skip_ws();
            size_t save = pos_;
            if (!consume('/')) break;
            if (!consume('(')) {
                pos_ = save;
                break;
            }
            std::vector<int> gens = parse_int_list();
            expect(')');
            e = quotient_expr(std::move(e), std::move(gens));
        }
        return e;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (consume('(')) {
            ExprPtr e = parse_product();
            expect(')');
            return e;
        }
        if (consume_word("sub")) {
            expect('(');
            ExprPtr base = parse_product();
            expect(';');
            std::vector<int> gens = parse_int_list();
            expect(')');
            return subring_expr(std::move(base), std::move(gens));
        }
        if (consume_word("corner")) {
            expect('(');
            ExprPtr base = parse_product();
            expect(';');
            int e = parse_element_index();
            expect(')');
            return corner_expr(std::move(base), e);
        }
        char c = peek();
        if (c == 'Z') {
            ++pos_;
            expect('/');
            long long n = parse_int();
            if (n < 1) err("Z/n requires n >= 1");
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '[') {
                ++pos_;
                expect('x');
                expect(']');
                expect('/');
                expect('(');
                std::vector<long long> poly = parse_poly();
                expect(')');
                return poly_quotient_expr(n, std::move(poly));
            }
            return zmod_expr(n);
        }
        if (c == 'M' || c == 'T') {
            ++pos_;
            long long k = parse_int();
            if (k < 1 || k > 16) err("matrix dimension out of range");
            expect('(');
            ExprPtr base = parse_product();
            expect(')');
            return c == 'M' ? matrix_expr(static_cast<int>(k), std::move(base))
                            : upper_triangular_expr(static_cast<int>(k), std::move(base));
        }
        err("expected ring expression");
    }
};

} // namespace

std::string render(const RingExpr& expr) {
    std::ostringstream os;
    render_to(os, expr);
    return os.str();
}

ExprPtr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

const char* errc_name(errc code) {
    switch (code) {
    case errc::order_overflow: return "OrderOverflow";
    case errc::malformed_expr: return "MalformedExpr";
    case errc::syntax_error: return "SyntaxError";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::size_guard: return "SizeGuard";
    case errc::degenerate_ring: return "DegenerateRing";
    case errc::domain_mismatch: return "DomainMismatch";
    case errc::no_identity: return "NoIdentity";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::witness_not_found: return "WitnessNotFound";
    case errc::classification_contradiction: return "ClassificationContradiction";
    case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace ringlab
