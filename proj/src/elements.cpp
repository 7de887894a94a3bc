#include "ringlab/elements.hpp"

#include <algorithm>
#include <unordered_set>

#include "ringlab/ideal.hpp"

namespace ringlab {

namespace {

// Membership tracker for power trails. Trails are short in the typical case,
// so a flat scan runs first; long trails (large cyclic unit groups) spill
// into a hash set.
class SeenSet {
public:
    bool insert(int x) {
        if (spill_) return spill_->insert(x).second;
        if (std::find(flat_.begin(), flat_.end(), x) != flat_.end()) return false;
        flat_.push_back(x);
        if (flat_.size() >= 64) spill_.emplace(flat_.begin(), flat_.end());
        return true;
    }

private:
    std::vector<int> flat_;
    std::optional<std::unordered_set<int>> spill_;
};

} // namespace

NilpotencyResult nilpotency(const FiniteRing& R, int a) {
    const int zero = R.zero();
    if (a == zero) return {true, 1};
    SeenSet seen;
    int x = a;
    int k = 1;
    for (;;) {
        if (x == zero) return {true, k};
        if (!seen.insert(x)) return {false, 0};
        x = R.mul(x, a);
        ++k;
    }
}

NilpotencyResult nilpotency(const FiniteRing& R, Element a) { return nilpotency(R, R.idx(a)); }

bool nilpotent_by_squaring(const FiniteRing& R, int a) {
    long long m = 1;
    while (m < R.order()) m <<= 1;
    return R.pow(a, m) == R.zero();
}

std::optional<int> unit_inverse(const FiniteRing& R, int a) {
    const int one = R.one();
    SeenSet seen;
    int prev = one;  // a^0
    int x = a;
    for (;;) {
        if (x == one) {
            if (R.mul(a, prev) != one || R.mul(prev, a) != one)
                fail(errc::internal, "one-sided inverse in " + R.label());
            return prev;
        }
        if (!seen.insert(x)) return std::nullopt;
        prev = x;
        x = R.mul(x, a);
    }
}

std::optional<int> unit_inverse(const FiniteRing& R, Element a) {
    return unit_inverse(R, R.idx(a));
}

std::optional<int> unit_inverse_by_scan(const FiniteRing& R, int a) {
    const int one = R.one();
    for (int b = 0; b < R.order(); ++b)
        if (R.mul(a, b) == one) {
            if (R.mul(b, a) != one)
                fail(errc::internal, "one-sided inverse in " + R.label());
            return b;
        }
    return std::nullopt;
}

SpecialElements special_elements(const FiniteRing& R) {
    const int n = R.order();
    SpecialElements out{IndexSet(n), IndexSet(n), IndexSet(n), IndexSet(n), IndexSet(n)};
    for (int a = 0; a < n; ++a) {
        if (nilpotency(R, a).is_nilpotent) out.nilpotents.set(a);
        if (unit_inverse(R, a)) out.units.set(a);
        const int aa = R.mul(a, a);
        const bool idem = aa == a;
        if (idem) out.idempotents.set(a);
        if (R.mul(aa, a) == a) out.tripotents.set(a);
        if (idem) {
            bool central = true;
            for (int r = 0; r < n && central; ++r) central = R.commute(a, r);
            if (central) out.central_idempotents.set(a);
        }
    }
    return out;
}

RadicalResult jacobson_radical(const FiniteRing& R) {
    const int n = R.order();
    const int one = R.one();

    IndexSet units(n), nilpotents(n);
    for (int a = 0; a < n; ++a) {
        if (unit_inverse(R, a)) units.set(a);
        if (nilpotency(R, a).is_nilpotent) nilpotents.set(a);
    }

    // For larger carriers, restrict candidates to nilpotents: the radical of
    // a finite ring is a nil ideal, so anything outside N(R) cannot be in it.
    // Small carriers run the unrestricted test.
    const bool restrict_to_nil = n > 4096;

    RadicalResult out;
    out.elements = IndexSet(n);
    std::vector<int> members;
    for (int a = 0; a < n; ++a) {
        if (restrict_to_nil && !nilpotents.test(a)) continue;
        bool quasi = true;
        for (int r = 0; r < n && quasi; ++r) quasi = units.test(R.sub(one, R.mul(r, a)));
        if (quasi) {
            out.elements.set(a);
            members.push_back(a);
        }
    }

    // two-sidedness of the quasi-regularity test
    for (int a : members)
        for (int r = 0; r < n; ++r)
            if (!units.test(R.sub(one, R.mul(a, r))))
                fail(errc::internal, "radical of " + R.label() + " fails the right-sided test");

    if (!is_ideal(R, members))
        fail(errc::internal, "radical of " + R.label() + " is not an ideal");

    out.is_nil = true;
    for (int a : members)
        if (!nilpotents.test(a)) out.is_nil = false;

    if (out.is_nil && members.size() <= 64) {
        // smallest m with every m-fold product of radical elements zero
        int m = 1;
        std::vector<int> products = members;
        auto all_zero = [&](const std::vector<int>& xs) {
            return xs.size() == 1 && xs[0] == R.zero();
        };
        while (!all_zero(products) && m <= n) {
            IndexSet next(n);
            for (int x : products)
                for (int y : members) next.set(R.mul(x, y));
            products = next.to_vector();
            ++m;
        }
        if (m <= n) out.nilpotency_exponent = m;
    }
    return out;
}

} // namespace ringlab
