#pragma once

#include <optional>

#include "ringlab/index_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct NilpotencyResult {
    bool is_nilpotent = false;
    int index = 0;  // smallest k >= 1 with a^k = 0; meaningful only when nilpotent
};

// Power-cycle detection: walk a, a^2, ... recording seen values. Reaching 0
// gives the exact index; a repeat before 0 rules nilpotency out (a^i = a^j
// with i < j pins the tail in a cycle that cannot contain 0).
NilpotencyResult nilpotency(const FiniteRing& R, int a);
NilpotencyResult nilpotency(const FiniteRing& R, Element a);

// Independent route for witness re-checks: a is nilpotent iff a^m = 0 for
// the first power of two m >= order (nilpotency indices never exceed the
// carrier size).
bool nilpotent_by_squaring(const FiniteRing& R, int a);

// Power-trail route: a is a unit iff some a^k = 1, and then a^(k-1) is the
// inverse. Verifies both products against 1 before returning.
std::optional<int> unit_inverse(const FiniteRing& R, int a);
std::optional<int> unit_inverse(const FiniteRing& R, Element a);

// Independent route: scan all b for ab = 1, then check ba = 1.
std::optional<int> unit_inverse_by_scan(const FiniteRing& R, int a);

struct SpecialElements {
    IndexSet nilpotents;
    IndexSet units;
    IndexSet idempotents;
    IndexSet tripotents;
    IndexSet central_idempotents;
};

SpecialElements special_elements(const FiniteRing& R);

struct RadicalResult {
    IndexSet elements;
    bool is_nil = false;
    // smallest m with every product of m radical elements zero; computed as a
    // diagnostic when the radical is small
    std::optional<int> nilpotency_exponent;
};

// Quasi-regularity: J = {a : 1 - ra is a unit for every r}, with the
// two-sided variant asserted for every member afterwards. The ideal property
// of the result is verified before returning.
RadicalResult jacobson_radical(const FiniteRing& R);

} // namespace ringlab
