#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/elements.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct ScanStats {
    long long scanned = 0;     // elements (or units) examined
    long long carrier = 0;     // size of the set swept
    long long violations = 0;  // counterexamples seen (> 1 only under full_scan)
};

// Counterexample (or existence) data attached to a verdict. Every element
// named here is re-checkable through recheck_verdict, which shares no code
// path with the scanners.
struct Witness {
    std::vector<std::pair<std::string, int>> elems;
    std::string note;

    std::optional<int> get(std::string_view name) const {
        for (const auto& [k, v] : elems)
            if (k == name) return v;
        return std::nullopt;
    }
};

struct Verdict {
    std::string predicate_id;
    bool holds = false;
    std::optional<Witness> witness;  // present whenever holds is false
    ScanStats stats;
};

struct EvalOptions {
    bool full_scan = false;            // keep scanning after the first counterexample
    long long clean_scan_max = 1024;   // exchange/clean sweeps guarded above this order
    long long ideal_enum_max = 64;     // ideal enumeration guard
    long long radical_max = 65536;     // quasi-regularity sweep guard
    long long witness_scan_max = 4096; // full witness-extraction sweeps up to this order
    long long power_order_max = 65536; // largest R^k built by the product/power laws
    int sample_size = 512;             // per-ring sample above witness_scan_max
    std::uint64_t seed = 0;
    BuildLimits limits;                // for derived rings (powers, quotients)
};

// Stable predicate identifiers; these strings appear verbatim in reports.
//   yaqub_nil_clean            a + a^3 or a - a^3 nilpotent for every a
//   strongly_nil_clean         a - a^2 nilpotent for every a
//   strongly_2_nil_clean       a - a^3 nilpotent for every a
//   strongly_weakly_nil_clean  a + a^2 or a - a^2 nilpotent for every a
//   hirano                     1 - u^2 or 1 + u^2 nilpotent for every unit u
//   two_uu                     1 - u^2 nilpotent for every unit u
//   exchange                   every a has an idempotent e in aR with 1-e in (1-a)R
//   clean / strongly_clean     every a = idempotent + unit (commuting for strong)
//   periodic                   every a has a^m = a^n for some m < n
//   boolean                    identity x^2 = x
//   yaqub_ring                 identity x^3 = x and characteristic 3
//   iso_z5                     isomorphic to Z_5 (order 5, characteristic 5)
// plus the identity tags:
//   identity_x2_eq_x, identity_x3_eq_x, identity_x3_eq_pm_x, identity_x5_eq_x,
//   identity_a_minus_a5_nil
const std::vector<std::string>& predicate_ids();

class RingAnalysis;

// Evaluates one predicate. Rings of order 1 are rejected with
// error(degenerate_ring); exchange/clean sweeps throw error(size_guard)
// above the configured order.
Verdict eval_predicate(RingAnalysis& analysis, std::string_view predicate_id);

// Re-verifies a false verdict's witness through independent routes
// (squaring-based nilpotency, scan-based inverses, fresh element loops).
// Returns true when the witness genuinely demonstrates the failure.
bool recheck_verdict(const FiniteRing& R, const Verdict& v);

// First collision in the power trail of a: the minimal n with a^n equal to
// some earlier power a^m, returned as (m, n).
std::pair<int, int> periodic_exponents(const FiniteRing& R, int a);
std::pair<int, int> periodic_exponents(const FiniteRing& R, Element a);

// Per-element existence witnesses used by reports and the section-5 laws.
std::optional<std::pair<int, int>> clean_decomposition(RingAnalysis& analysis, int a,
                                                       bool require_commuting);
std::optional<int> exchange_idempotent(RingAnalysis& analysis, int a);

// Per-ring evaluation context: lazily computed element sets, the radical,
// the residue ring R/J, and a verdict cache. Confine one instance to one
// thread; distinct instances over the same ring are independent.
class RingAnalysis {
public:
    explicit RingAnalysis(FiniteRing ring, EvalOptions opts = {});

    const FiniteRing& ring() const { return ring_; }
    const EvalOptions& options() const { return opts_; }

    const IndexSet& nilpotents();
    const IndexSet& units();
    const IndexSet& idempotents();
    const IndexSet& tripotents();
    const IndexSet& central_idempotents();

    // throws error(size_guard) when the order exceeds options().radical_max
    const RadicalResult& radical();
    const FiniteRing& residue_ring();  // R / J(R), canonical representatives

    const Verdict& predicate(std::string_view id);

private:
    void ensure_special_sets();

    FiniteRing ring_;
    EvalOptions opts_;
    std::optional<SpecialElements> special_;
    std::optional<RadicalResult> radical_;
    std::optional<FiniteRing> residue_;
    std::map<std::string, Verdict, std::less<>> verdicts_;
};

} // namespace ringlab
