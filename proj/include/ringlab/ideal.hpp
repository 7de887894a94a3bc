#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/index_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Two-sided ideal, stored as the sorted list of its elements.
struct Ideal {
    std::uint32_t ring_uid = 0;
    std::vector<int> members;  // sorted ascending, contains zero()

    int size() const { return static_cast<int>(members.size()); }
};

// Checks: contains 0, closed under addition and negation, absorbs left and
// right multiplication by every ring element.
bool is_ideal(const FiniteRing& R, const std::vector<int>& members);

// Smallest two-sided ideal containing gens: the closure of
// {RaR + Ra + aR + Za : a in gens} computed element-wise.
Ideal ideal_from_generators(const FiniteRing& R, const std::vector<int>& gens);

// Every two-sided ideal, as the closure of the principal ideals under
// pairwise ideal sum. Guarded: carriers above `guard` throw
// error(size_guard) since the family can blow up.
std::vector<Ideal> all_ideals(const FiniteRing& R, long long guard = 64);

// Coset ring with canonical (smallest-index) representatives. Throws
// error(not_an_ideal) when members fail the ideal check.
FiniteRing quotient_ring(const FiniteRing& R, const Ideal& ideal);

bool is_nil_ideal(const FiniteRing& R, const Ideal& ideal);

// Greedy small generating set, used to label programmatic quotients.
std::vector<int> minimal_ideal_generators(const FiniteRing& R, const Ideal& ideal);

} // namespace ringlab
