#include "ringlab/ring.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <unordered_map>

#include "ringlab/ideal.hpp"

namespace ringlab {

namespace {
std::uint32_t next_uid() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}
} // namespace

class RingRep {
public:
    virtual ~RingRep() = default;

    long long order = 0;
    int zero = 0;
    int one = 0;
    long long characteristic = 0;
    std::string label;
    ExprPtr expr;
    std::uint32_t uid = 0;

    // dense tables, present only when order <= memo limit
    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> mul_table;
    std::vector<int> neg_table;

    virtual int add_v(int a, int b) const = 0;
    virtual int mul_v(int a, int b) const = 0;
    virtual int neg_v(int a) const = 0;

    virtual const FiniteRing* parent_ring() const { return nullptr; }
    virtual int to_parent(int) const {
        fail(errc::internal, "ring has no parent mapping");
    }
    virtual int from_parent(int) const {
        fail(errc::internal, "ring has no parent mapping");
    }

    int add(int a, int b) const {
        return add_table.empty() ? add_v(a, b)
                                 : add_table[static_cast<size_t>(a) * order + b];
    }
    int mul(int a, int b) const {
        return mul_table.empty() ? mul_v(a, b)
                                 : mul_table[static_cast<size_t>(a) * order + b];
    }
    int neg(int a) const { return neg_table.empty() ? neg_v(a) : neg_table[a]; }

    // Fills characteristic, label, and (for table-eligible orders) the memo
    // tables. Must be called exactly once, before the rep is shared.
    void finish(bool memoize) {
        label = render(expr);
        uid = next_uid();
        characteristic = 1;
        for (int x = one; x != zero; x = add_v(x, one)) ++characteristic;
        if (order % characteristic != 0)
            fail(errc::internal, "characteristic does not divide order in " + label);
        if (memoize) {
            const size_t n = static_cast<size_t>(order);
            add_table.resize(n * n);
            mul_table.resize(n * n);
            neg_table.resize(n);
            for (size_t a = 0; a < n; ++a) {
                neg_table[a] = neg_v(static_cast<int>(a));
                for (size_t b = 0; b < n; ++b) {
                    add_table[a * n + b] = static_cast<std::uint16_t>(add_v(a, b));
                    mul_table[a * n + b] = static_cast<std::uint16_t>(mul_v(a, b));
                }
            }
        }
    }
};

// ---------------------------------------------------------------------------
// accessors

int FiniteRing::order() const { return static_cast<int>(rep_->order); }
int FiniteRing::zero() const { return rep_->zero; }
int FiniteRing::one() const { return rep_->one; }
int FiniteRing::add(int a, int b) const { return rep_->add(a, b); }
int FiniteRing::mul(int a, int b) const { return rep_->mul(a, b); }
int FiniteRing::neg(int a) const { return rep_->neg(a); }
long long FiniteRing::characteristic() const { return rep_->characteristic; }
const std::string& FiniteRing::label() const { return rep_->label; }
const ExprPtr& FiniteRing::expr() const { return rep_->expr; }
std::uint32_t FiniteRing::uid() const { return rep_->uid; }

int FiniteRing::pow(int a, long long k) const {
    if (k < 0) fail(errc::internal, "pow with negative exponent");
    int result = one();
    int base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

int FiniteRing::of_int(long long n) const {
    const long long c = rep_->characteristic;
    long long m = ((n % c) + c) % c;
    int result = zero();
    int base = one();
    while (m > 0) {
        if (m & 1) result = add(result, base);
        m >>= 1;
        if (m) base = add(base, base);
    }
    return result;
}

Element FiniteRing::el(int index) const {
    if (index < 0 || index >= order())
        fail(errc::domain_mismatch,
             "element index " + std::to_string(index) + " out of range for " + label());
    return Element{uid(), index};
}

int FiniteRing::idx(Element e) const {
    if (e.ring_uid != uid())
        fail(errc::domain_mismatch, "element belongs to a different ring than " + label());
    if (e.index < 0 || e.index >= order())
        fail(errc::domain_mismatch, "stale element index for " + label());
    return e.index;
}

bool FiniteRing::has_parent() const { return rep_->parent_ring() != nullptr; }

FiniteRing FiniteRing::parent() const {
    const FiniteRing* p = rep_->parent_ring();
    if (!p) fail(errc::internal, label() + " has no parent ring");
    return *p;
}

int FiniteRing::to_parent(int index) const { return rep_->to_parent(index); }
int FiniteRing::from_parent(int parent_index) const { return rep_->from_parent(parent_index); }

// ---------------------------------------------------------------------------
// concrete representations

namespace {

constexpr int kMaxDigits = 40;

struct ZModRep final : RingRep {
    long long n;
    explicit ZModRep(long long n_) : n(n_) {}
    int add_v(int a, int b) const override { return static_cast<int>((a + static_cast<long long>(b)) % n); }
    int mul_v(int a, int b) const override { return static_cast<int>((a * static_cast<long long>(b)) % n); }
    int neg_v(int a) const override { return static_cast<int>((n - a) % n); }
};

// Shared machinery for mixed-radix carriers (products, matrix rings,
// triangular rings, polynomial quotients). First digit most significant for
// products/matrices; polynomial quotients override the codec.
struct DigitRep : RingRep {
    int ndigits = 0;

    virtual void decode(int index, int* out) const = 0;
    virtual int encode(const int* digits) const = 0;
};

struct ProductRep final : DigitRep {
    std::vector<FiniteRing> factors;

    explicit ProductRep(std::vector<FiniteRing> fs) : factors(std::move(fs)) {
        ndigits = static_cast<int>(factors.size());
    }

    void decode(int index, int* out) const override {
        for (int i = ndigits - 1; i >= 0; --i) {
            const int sz = factors[i].order();
            out[i] = index % sz;
            index /= sz;
        }
    }
    int encode(const int* digits) const override {
        long long idx = 0;
        for (int i = 0; i < ndigits; ++i) idx = idx * factors[i].order() + digits[i];
        return static_cast<int>(idx);
    }

    int add_v(int a, int b) const override {
        std::array<int, kMaxDigits> da, db;
        decode(a, da.data());
        decode(b, db.data());
        for (int i = 0; i < ndigits; ++i) da[i] = factors[i].add(da[i], db[i]);
        return encode(da.data());
    }
    int mul_v(int a, int b) const override {
        std::array<int, kMaxDigits> da, db;
        decode(a, da.data());
        decode(b, db.data());
        for (int i = 0; i < ndigits; ++i) da[i] = factors[i].mul(da[i], db[i]);
        return encode(da.data());
    }
    int neg_v(int a) const override {
        std::array<int, kMaxDigits> da;
        decode(a, da.data());
        for (int i = 0; i < ndigits; ++i) da[i] = factors[i].neg(da[i]);
        return encode(da.data());
    }
};

struct UniformDigitRep : DigitRep {
    FiniteRing base;
    int radix = 0;

    void decode(int index, int* out) const override {
        for (int i = ndigits - 1; i >= 0; --i) {
            out[i] = index % radix;
            index /= radix;
        }
    }
    int encode(const int* digits) const override {
        long long idx = 0;
        for (int i = 0; i < ndigits; ++i) idx = idx * radix + digits[i];
        return static_cast<int>(idx);
    }

    int add_v(int a, int b) const override {
        std::array<int, kMaxDigits> da, db;
        decode(a, da.data());
        decode(b, db.data());
        for (int i = 0; i < ndigits; ++i) da[i] = base.add(da[i], db[i]);
        return encode(da.data());
    }
    int neg_v(int a) const override {
        std::array<int, kMaxDigits> da;
        decode(a, da.data());
        for (int i = 0; i < ndigits; ++i) da[i] = base.neg(da[i]);
        return encode(da.data());
    }
};

struct MatrixRep final : UniformDigitRep {
    int k = 0;

    int mul_v(int a, int b) const override {
        std::array<int, kMaxDigits> da, db, dc;
        decode(a, da.data());
        decode(b, db.data());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                int acc = base.zero();
                for (int t = 0; t < k; ++t)
                    acc = base.add(acc, base.mul(da[i * k + t], db[t * k + j]));
                dc[i * k + j] = acc;
            }
        return encode(dc.data());
    }
};

struct UpperTriangularRep final : UniformDigitRep {
    int k = 0;
    std::array<std::array<int, 8>, 8> pos{};  // (i, j) -> digit position, i <= j

    int mul_v(int a, int b) const override {
        std::array<int, kMaxDigits> da, db, dc;
        decode(a, da.data());
        decode(b, db.data());
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                int acc = base.zero();
                for (int t = i; t <= j; ++t)
                    acc = base.add(acc, base.mul(da[pos[i][t]], db[pos[t][j]]));
                dc[pos[i][j]] = acc;
            }
        return encode(dc.data());
    }
};

struct PolyQuotientRep final : DigitRep {
    long long n = 0;                 // coefficient modulus
    std::vector<long long> modulus;  // ascending, monic, degree = ndigits

    void decode(int index, int* out) const override {
        for (int i = 0; i < ndigits; ++i) {
            out[i] = static_cast<int>(index % n);
            index = static_cast<int>(index / n);
        }
    }
    int encode(const int* digits) const override {
        long long idx = 0;
        for (int i = ndigits - 1; i >= 0; --i) idx = idx * n + digits[i];
        return static_cast<int>(idx);
    }

    int add_v(int a, int b) const override {
        std::array<int, kMaxDigits> da, db;
        decode(a, da.data());
        decode(b, db.data());
        for (int i = 0; i < ndigits; ++i) da[i] = static_cast<int>((da[i] + static_cast<long long>(db[i])) % n);
        return encode(da.data());
    }
    int neg_v(int a) const override {
        std::array<int, kMaxDigits> da;
        decode(a, da.data());
        for (int i = 0; i < ndigits; ++i) da[i] = static_cast<int>((n - da[i]) % n);
        return encode(da.data());
    }
    int mul_v(int a, int b) const override {
        std::array<int, kMaxDigits> da, db;
        std::array<long long, 2 * kMaxDigits> prod{};
        decode(a, da.data());
        decode(b, db.data());
        for (int i = 0; i < ndigits; ++i)
            for (int j = 0; j < ndigits; ++j)
                prod[i + j] = (prod[i + j] + static_cast<long long>(da[i]) * db[j]) % n;
        // reduce by the monic modulus, top down
        for (int d = 2 * ndigits - 2; d >= ndigits; --d) {
            const long long c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int j = 0; j < ndigits; ++j) {
                const int t = d - ndigits + j;
                prod[t] = ((prod[t] - c * modulus[j]) % n + n) % n;
            }
        }
        std::array<int, kMaxDigits> dc;
        for (int i = 0; i < ndigits; ++i) dc[i] = static_cast<int>(prod[i]);
        return encode(dc.data());
    }
};

// View of a subset of a parent ring, closed under the parent's operations:
// generated subrings and corners. `one` is set by the builder.
struct SubcarrierRep : RingRep {
    FiniteRing host;
    std::vector<int> carrier;          // ascending parent indices
    std::vector<int> parent_to_index;  // -1 when not in the carrier

    const FiniteRing* parent_ring() const override { return &host; }
    int to_parent(int index) const override { return carrier[index]; }
    int from_parent(int parent_index) const override { return parent_to_index[parent_index]; }

    int add_v(int a, int b) const override {
        return parent_to_index[host.add(carrier[a], carrier[b])];
    }
    int mul_v(int a, int b) const override {
        return parent_to_index[host.mul(carrier[a], carrier[b])];
    }
    int neg_v(int a) const override { return parent_to_index[host.neg(carrier[a])]; }
};

struct QuotientRep final : RingRep {
    FiniteRing host;
    std::vector<int> carrier;       // canonical (smallest-index) coset representatives
    std::vector<int> parent_to_q;   // full surjection parent index -> coset index

    const FiniteRing* parent_ring() const override { return &host; }
    int to_parent(int index) const override { return carrier[index]; }
    int from_parent(int parent_index) const override { return parent_to_q[parent_index]; }

    int add_v(int a, int b) const override { return parent_to_q[host.add(carrier[a], carrier[b])]; }
    int mul_v(int a, int b) const override { return parent_to_q[host.mul(carrier[a], carrier[b])]; }
    int neg_v(int a) const override { return parent_to_q[host.neg(carrier[a])]; }
};

long long checked_pow_order(long long base, int exp, long long max_order, const std::string& what) {
    long long result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result > max_order / base)
            fail(errc::order_overflow, what + " exceeds the order limit " + std::to_string(max_order));
        result *= base;
    }
    return result;
}

void check_order(long long order, long long max_order, const std::string& what) {
    if (order > max_order)
        fail(errc::order_overflow, what + " has order " + std::to_string(order) +
                                       " above the limit " + std::to_string(max_order));
}

void validate_base_elements(const FiniteRing& base, const std::vector<int>& elems) {
    for (int e : elems)
        if (e < 0 || e >= base.order())
            fail(errc::malformed_expr, "element index " + std::to_string(e) +
                                           " out of range for " + base.label());
}

std::shared_ptr<RingRep> make_subcarrier(const FiniteRing& host, std::vector<int> carrier) {
    auto rep = std::make_shared<SubcarrierRep>();
    rep->host = host;
    std::sort(carrier.begin(), carrier.end());
    rep->parent_to_index.assign(host.order(), -1);
    for (size_t i = 0; i < carrier.size(); ++i)
        rep->parent_to_index[carrier[i]] = static_cast<int>(i);
    rep->carrier = std::move(carrier);
    rep->order = static_cast<long long>(rep->carrier.size());
    rep->zero = rep->parent_to_index[host.zero()];
    return rep;
}

} // namespace

// ---------------------------------------------------------------------------
// construction

FiniteRing generated_subring(const FiniteRing& R, const std::vector<int>& gens, bool include_one) {
    validate_base_elements(R, gens);
    // closure under add, neg, mul
    std::vector<char> in_set(R.order(), 0);
    std::vector<int> members;
    std::vector<int> work;
    auto push = [&](int x) {
        if (!in_set[x]) {
            in_set[x] = 1;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(R.zero());
    if (include_one) push(R.one());
    for (int g : gens) push(g);
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        push(R.neg(x));
        // members grows during the loop; index-based iteration covers new ones
        for (size_t i = 0; i < members.size(); ++i) {
            const int y = members[i];
            push(R.add(x, y));
            push(R.mul(x, y));
            push(R.mul(y, x));
        }
    }

    auto rep = make_subcarrier(R, std::move(members));
    auto* sc = static_cast<SubcarrierRep*>(rep.get());
    if (include_one) {
        sc->one = sc->parent_to_index[R.one()];
    } else {
        // a generated subring need not contain the host's 1; look for its own
        int found = -1;
        for (int e = 0; e < sc->order && found < 0; ++e) {
            bool ok = true;
            for (int x = 0; x < sc->order && ok; ++x)
                ok = sc->mul_v(e, x) == x && sc->mul_v(x, e) == x;
            if (ok) found = e;
        }
        if (found < 0)
            fail(errc::no_identity,
                 "generated subring of " + R.label() + " has no multiplicative identity");
        sc->one = found;
    }
    std::vector<int> sorted_gens = gens;
    std::sort(sorted_gens.begin(), sorted_gens.end());
    rep->expr = subring_expr(R.expr(), std::move(sorted_gens));
    rep->finish(/*memoize=*/false);
    return FiniteRing(std::move(rep));
}

FiniteRing corner_ring(const FiniteRing& R, int e) {
    validate_base_elements(R, {e});
    if (R.mul(e, e) != e)
        fail(errc::not_idempotent,
             "element " + std::to_string(e) + " of " + R.label() + " is not idempotent");
    std::vector<char> seen(R.order(), 0);
    std::vector<int> members;
    for (int x = 0; x < R.order(); ++x) {
        const int exe = R.mul(R.mul(e, x), e);
        if (!seen[exe]) {
            seen[exe] = 1;
            members.push_back(exe);
        }
    }
    auto rep = make_subcarrier(R, std::move(members));
    auto* sc = static_cast<SubcarrierRep*>(rep.get());
    sc->one = sc->parent_to_index[e];
    rep->expr = corner_expr(R.expr(), e);
    rep->finish(/*memoize=*/false);
    return FiniteRing(std::move(rep));
}

FiniteRing make_quotient_ring(const FiniteRing& R, const std::vector<int>& ideal_elements,
                              const std::vector<int>& label_generators) {
    auto rep = std::make_shared<QuotientRep>();
    rep->host = R;
    const int n = R.order();
    // canonical representative: smallest index in each coset
    std::vector<int> rep_of(n, -1);
    for (int x = 0; x < n; ++x) {
        if (rep_of[x] >= 0) continue;
        int smallest = x;
        for (int i : ideal_elements) smallest = std::min(smallest, R.add(x, i));
        for (int i : ideal_elements) rep_of[R.add(x, i)] = smallest;
    }
    rep->parent_to_q.assign(n, -1);
    for (int x = 0; x < n; ++x)
        if (rep_of[x] == x) rep->carrier.push_back(x);
    for (int x = 0; x < n; ++x) {
        const auto it = std::lower_bound(rep->carrier.begin(), rep->carrier.end(), rep_of[x]);
        rep->parent_to_q[x] = static_cast<int>(it - rep->carrier.begin());
    }
    rep->order = static_cast<long long>(rep->carrier.size());
    rep->zero = rep->parent_to_q[R.zero()];
    rep->one = rep->parent_to_q[R.one()];
    rep->expr = quotient_expr(R.expr(), label_generators);
    rep->finish(/*memoize=*/false);
    return FiniteRing(std::move(rep));
}

FiniteRing build(const ExprPtr& expr, const BuildLimits& limits) {
    if (!expr) fail(errc::malformed_expr, "null expression");
    const std::string what = render(expr);
    switch (expr->kind) {
    case RingExpr::Kind::zmod: {
        check_order(expr->modulus, limits.max_order, what);
        auto rep = std::make_shared<ZModRep>(expr->modulus);
        rep->order = expr->modulus;
        rep->zero = 0;
        rep->one = expr->modulus == 1 ? 0 : 1;
        rep->expr = expr;
        rep->finish(rep->order <= limits.memo_order);
        return FiniteRing(std::move(rep));
    }
    case RingExpr::Kind::product: {
        std::vector<FiniteRing> factors;
        factors.reserve(expr->factors.size());
        if (expr->factors.size() > static_cast<size_t>(kMaxDigits))
            fail(errc::malformed_expr, "too many product factors in " + what);
        long long order = 1;
        for (const auto& f : expr->factors) {
            factors.push_back(build(f, limits));
            const long long sz = factors.back().order();
            if (order > limits.max_order / sz)
                fail(errc::order_overflow, what + " exceeds the order limit");
            order *= sz;
        }
        auto rep = std::make_shared<ProductRep>(std::move(factors));
        rep->order = order;
        std::array<int, kMaxDigits> digits;
        for (int i = 0; i < rep->ndigits; ++i) digits[i] = rep->factors[i].zero();
        rep->zero = rep->encode(digits.data());
        for (int i = 0; i < rep->ndigits; ++i) digits[i] = rep->factors[i].one();
        rep->one = rep->encode(digits.data());
        rep->expr = expr;
        rep->finish(order <= limits.memo_order);
        return FiniteRing(std::move(rep));
    }
    case RingExpr::Kind::matrix:
    case RingExpr::Kind::upper_triangular: {
        const int k = expr->dim;
        if (k > 8) fail(errc::malformed_expr, "dimension above 8 in " + what);
        FiniteRing base = build(expr->base, limits);
        const bool full = expr->kind == RingExpr::Kind::matrix;
        const int ndigits = full ? k * k : k * (k + 1) / 2;
        if (ndigits > kMaxDigits) fail(errc::malformed_expr, "too many entries in " + what);
        const long long order = checked_pow_order(base.order(), ndigits, limits.max_order, what);

        std::shared_ptr<UniformDigitRep> rep;
        if (full) {
            auto m = std::make_shared<MatrixRep>();
            m->k = k;
            rep = std::move(m);
        } else {
            auto t = std::make_shared<UpperTriangularRep>();
            t->k = k;
            int p = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j) t->pos[i][j] = p++;
            rep = std::move(t);
        }
        rep->base = base;
        rep->radix = base.order();
        rep->ndigits = ndigits;
        rep->order = order;

        std::array<int, kMaxDigits> digits;
        digits.fill(base.zero());
        rep->zero = rep->encode(digits.data());
        if (full) {
            for (int i = 0; i < k; ++i) digits[i * k + i] = base.one();
        } else {
            auto* t = static_cast<UpperTriangularRep*>(rep.get());
            for (int i = 0; i < k; ++i) digits[t->pos[i][i]] = base.one();
        }
        rep->one = rep->encode(digits.data());
        rep->expr = expr;
        rep->finish(order <= limits.memo_order);
        return FiniteRing(std::move(rep));
    }
    case RingExpr::Kind::poly_quotient: {
        const long long n = expr->modulus;
        const int degree = static_cast<int>(expr->poly.size()) - 1;
        if (degree > kMaxDigits) fail(errc::malformed_expr, "degree too large in " + what);
        const long long order = checked_pow_order(n, degree, limits.max_order, what);
        auto rep = std::make_shared<PolyQuotientRep>();
        rep->n = n;
        rep->modulus = expr->poly;
        rep->ndigits = degree;
        rep->order = order;
        rep->zero = 0;
        rep->one = n == 1 ? 0 : 1;  // constant polynomial 1
        rep->expr = expr;
        rep->finish(order <= limits.memo_order);
        return FiniteRing(std::move(rep));
    }
    case RingExpr::Kind::quotient: {
        FiniteRing base = build(expr->base, limits);
        validate_base_elements(base, expr->elements);
        Ideal ideal = ideal_from_generators(base, expr->elements);
        return make_quotient_ring(base, ideal.members, expr->elements);
    }
    case RingExpr::Kind::subring: {
        FiniteRing base = build(expr->base, limits);
        return generated_subring(base, expr->elements, /*include_one=*/true);
    }
    case RingExpr::Kind::corner: {
        FiniteRing base = build(expr->base, limits);
        return corner_ring(base, expr->elements.at(0));
    }
    }
    fail(errc::malformed_expr, "unknown expression kind");
}

FiniteRing build(std::string_view expr_text, const BuildLimits& limits) {
    return build(parse_ring_expr(expr_text), limits);
}

// ---------------------------------------------------------------------------

void audit_ring_axioms(const FiniteRing& R) {
    const int n = R.order();
    auto check = [&](bool ok, const char* law) {
        if (!ok) fail(errc::internal, std::string("ring axiom violated (") + law + ") in " + R.label());
    };
    check(n >= 1, "nonempty carrier");
    check((n == 1) == (R.zero() == R.one()), "zero != one unless trivial");
    for (int a = 0; a < n; ++a) {
        const int na = R.neg(a);
        check(na >= 0 && na < n, "negation closed");
        check(R.add(a, na) == R.zero(), "additive inverse");
        check(R.add(R.zero(), a) == a, "additive identity");
        check(R.mul(R.one(), a) == a, "left multiplicative identity");
        check(R.mul(a, R.one()) == a, "right multiplicative identity");
        for (int b = 0; b < n; ++b) {
            const int ab = R.add(a, b);
            const int mab = R.mul(a, b);
            check(ab >= 0 && ab < n, "addition closed");
            check(mab >= 0 && mab < n, "multiplication closed");
            check(ab == R.add(b, a), "commutativity of addition");
            for (int c = 0; c < n; ++c) {
                check(R.add(ab, c) == R.add(a, R.add(b, c)), "associativity of addition");
                check(R.mul(mab, c) == R.mul(a, R.mul(b, c)), "associativity of multiplication");
                check(R.mul(a, R.add(b, c)) == R.add(mab, R.mul(a, c)), "left distributivity");
                check(R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c)),
                      "right distributivity");
            }
        }
    }
}

} // namespace ringlab
