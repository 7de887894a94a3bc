#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/expr.hpp"

namespace ringlab {

class RingRep;

// Handle to an element of a specific ring. Index-based; the uid ties it to
// the owning ring so cross-ring use is rejected.
struct Element {
    std::uint32_t ring_uid = 0;
    int index = -1;

    friend bool operator==(const Element&, const Element&) = default;
};

struct BuildLimits {
    long long max_order = 65536;  // OrderOverflow above this
    long long memo_order = 4096;  // dense add/mul tables at or below
};

// A finite unital ring over the carrier {0, ..., order-1}. Values are
// immutable after build(); copies share the representation. All operations
// are pure reads, safe for concurrent use.
//
// Canonical element enumeration per constructor:
//   Z/n                integers 0..n-1
//   products/matrices  row-major lexicographic, first component most significant
//   Tk                 free positions (i,j), i <= j, row-major
//   Z/n[x]/(m)         coefficient-lexicographic, constant coefficient least
//                      significant: index = sum c_i * n^i
//   quotient           cosets sorted by canonical (smallest-index) representative
//   subring/corner     carrier indices of the parent, ascending
class FiniteRing {
public:
    FiniteRing() = default;

    int order() const;
    int zero() const;
    int one() const;
    int add(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int pow(int a, long long k) const;  // k >= 0; pow(a, 0) == one()
    int of_int(long long n) const;      // image of the integer n
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

    long long characteristic() const;  // additive order of 1; divides order
    const std::string& label() const;
    const ExprPtr& expr() const;
    std::uint32_t uid() const;

    Element el(int index) const;   // bounds-checked handle
    int idx(Element e) const;      // ownership-checked

    // Structural maps, available for quotient/subring/corner rings.
    bool has_parent() const;
    FiniteRing parent() const;
    // subring/corner: embedding into the parent; quotient: canonical coset
    // representative.
    int to_parent(int index) const;
    // subring/corner: position of a parent element in the carrier (-1 if
    // absent); quotient: the surjection parent -> coset.
    int from_parent(int parent_index) const;

    bool valid() const { return rep_ != nullptr; }

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.rep_ == b.rep_; }

private:
    friend class RingRep;
    friend FiniteRing build(const ExprPtr&, const BuildLimits&);
    friend FiniteRing make_quotient_ring(const FiniteRing&, const std::vector<int>&,
                                         const std::vector<int>&);
    friend FiniteRing generated_subring(const FiniteRing&, const std::vector<int>&, bool);
    friend FiniteRing corner_ring(const FiniteRing&, int);

    explicit FiniteRing(std::shared_ptr<const RingRep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const RingRep> rep_;
};

FiniteRing build(const ExprPtr& expr, const BuildLimits& limits = {});
FiniteRing build(std::string_view expr_text, const BuildLimits& limits = {});

// Smallest subring containing gens (and 1 when include_one is set), closed
// under add, neg, mul. The result's one() is the parent's 1 when included,
// otherwise an identity found inside the closure (error(no_identity) if the
// closure has none).
FiniteRing generated_subring(const FiniteRing& R, const std::vector<int>& gens, bool include_one);

// eRe with identity e. Throws error(not_idempotent) unless e*e == e.
FiniteRing corner_ring(const FiniteRing& R, int e);

// Exhaustive ring-axiom audit (associativity, commutativity of +,
// distributivity, identities, inverses, closedness). Intended for carriers
// of modest size; cost is O(order^3). Throws error(internal) on violation.
void audit_ring_axioms(const FiniteRing& R);

} // namespace ringlab
