#include "ringlab/ideal.hpp"

#include <algorithm>
#include <set>

#include "ringlab/elements.hpp"

namespace ringlab {

bool is_ideal(const FiniteRing& R, const std::vector<int>& members) {
    const int n = R.order();
    IndexSet in(n);
    for (int x : members) {
        if (x < 0 || x >= n) return false;
        in.set(x);
    }
    if (!in.test(R.zero())) return false;
    for (int x : members) {
        if (!in.test(R.neg(x))) return false;
        for (int y : members)
            if (!in.test(R.add(x, y))) return false;
        for (int r = 0; r < n; ++r)
            if (!in.test(R.mul(r, x)) || !in.test(R.mul(x, r))) return false;
    }
    return true;
}

Ideal ideal_from_generators(const FiniteRing& R, const std::vector<int>& gens) {
    const int n = R.order();
    std::vector<char> in_set(n, 0);
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
    for (int g : gens) {
        if (g < 0 || g >= n)
            fail(errc::malformed_expr, "ideal generator out of range for " + R.label());
        push(g);
    }
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        push(R.neg(x));
        for (size_t i = 0; i < members.size(); ++i) push(R.add(x, members[i]));
        for (int r = 0; r < n; ++r) {
            push(R.mul(r, x));
            push(R.mul(x, r));
        }
    }
    std::sort(members.begin(), members.end());
    return Ideal{R.uid(), std::move(members)};
}

namespace {

// mask-based closure for carriers that fit one machine word
std::uint64_t principal_ideal_mask(const FiniteRing& R, int a) {
    const int n = R.order();
    std::uint64_t mask = 0;
    std::vector<int> work;
    auto push = [&](int x) {
        if (!(mask >> x & 1)) {
            mask |= std::uint64_t{1} << x;
            work.push_back(x);
        }
    };
    push(R.zero());
    push(a);
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        push(R.neg(x));
        for (int y = 0; y < n; ++y) {
            if (mask >> y & 1) push(R.add(x, y));
            push(R.mul(y, x));
            push(R.mul(x, y));
        }
    }
    return mask;
}

std::uint64_t ideal_sum_mask(const FiniteRing& R, std::uint64_t a, std::uint64_t b) {
    // both are absorbing and additively closed, so pairwise sums suffice
    const int n = R.order();
    std::uint64_t out = 0;
    for (int x = 0; x < n; ++x) {
        if (!(a >> x & 1)) continue;
        for (int y = 0; y < n; ++y)
            if (b >> y & 1) out |= std::uint64_t{1} << R.add(x, y);
    }
    return out;
}

std::vector<int> mask_to_vector(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (mask >> i & 1) out.push_back(i);
    return out;
}

} // namespace

std::vector<Ideal> all_ideals(const FiniteRing& R, long long guard) {
    const int n = R.order();
    if (n > guard || n > 64)
        fail(errc::size_guard, "ideal enumeration guarded at order " +
                                   std::to_string(std::min<long long>(guard, 64)) + ", " +
                                   R.label() + " has order " + std::to_string(n));

    std::set<std::uint64_t> family;
    family.insert(std::uint64_t{1} << R.zero());
    for (int a = 0; a < n; ++a) family.insert(principal_ideal_mask(R, a));

    // close under pairwise ideal sum
    std::vector<std::uint64_t> work(family.begin(), family.end());
    while (!work.empty()) {
        const std::uint64_t m = work.back();
        work.pop_back();
        for (std::uint64_t other : std::vector<std::uint64_t>(family.begin(), family.end())) {
            const std::uint64_t s = ideal_sum_mask(R, m, other);
            if (family.insert(s).second) work.push_back(s);
        }
    }

    std::vector<Ideal> out;
    out.reserve(family.size());
    for (std::uint64_t mask : family) out.push_back(Ideal{R.uid(), mask_to_vector(mask)});
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

FiniteRing quotient_ring(const FiniteRing& R, const Ideal& ideal) {
    if (ideal.ring_uid != R.uid())
        fail(errc::domain_mismatch, "ideal belongs to a different ring than " + R.label());
    if (!is_ideal(R, ideal.members))
        fail(errc::not_an_ideal, "the given subset of " + R.label() + " is not a two-sided ideal");
    return make_quotient_ring(R, ideal.members, minimal_ideal_generators(R, ideal));
}

bool is_nil_ideal(const FiniteRing& R, const Ideal& ideal) {
    for (int x : ideal.members)
        if (!nilpotency(R, x).is_nilpotent) return false;
    return true;
}

std::vector<int> minimal_ideal_generators(const FiniteRing& R, const Ideal& ideal) {
    std::vector<int> gens;
    Ideal covered{R.uid(), {R.zero()}};
    if (ideal.members == covered.members) return gens;
    for (int x : ideal.members) {
        if (std::binary_search(covered.members.begin(), covered.members.end(), x)) continue;
        gens.push_back(x);
        covered = ideal_from_generators(R, gens);
        if (covered.members == ideal.members) break;
    }
    return gens;
}

} // namespace ringlab
