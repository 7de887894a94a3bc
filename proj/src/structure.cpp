#include "ringlab/structure.hpp"

#include <algorithm>

#include "ringlab/ideal.hpp"

namespace ringlab {

namespace {

struct PrimePower {
    long long p;
    int k;
    long long pk;
};

std::vector<PrimePower> factorize(long long n) {
    std::vector<PrimePower> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.k;
            pp.pk *= p;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

// g = gcd(a, b) together with x, y such that ax + by = g
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    const long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

Decomposition prime_component_decomposition(const FiniteRing& R) {
    if (R.order() < 2) fail(errc::degenerate_ring, "cannot decompose the trivial ring");
    const long long c = R.characteristic();
    const auto primes = factorize(c);
    const int n = R.order();

    Decomposition dec;
    for (const auto& pp : primes) {
        DecompositionFactor f;
        f.prime = pp.p;
        f.exponent = pp.k;
        if (primes.size() == 1) {
            f.idempotent = R.one();
            f.component = R;
        } else {
            const long long q = c / pp.pk;
            long long x, y;
            ext_gcd(pp.pk, q, x, y);  // x*p^k + y*q = 1
            const long long eps = (((y % c) * (q % c)) % c + c) % c;
            f.idempotent = R.of_int(eps);
            f.component = corner_ring(R, f.idempotent);
        }
        dec.factors.push_back(std::move(f));
    }

    // certificate: idempotent, central, pairwise orthogonal, sum 1, and the
    // factor orders multiply back to |R|
    int sum = R.zero();
    long long order_product = 1;
    for (const auto& f : dec.factors) {
        const int e = f.idempotent;
        if (R.mul(e, e) != e)
            fail(errc::internal, "decomposition idempotent fails e^2 = e in " + R.label());
        for (int r = 0; r < n; ++r)
            if (!R.commute(e, r))
                fail(errc::internal, "decomposition idempotent not central in " + R.label());
        sum = R.add(sum, e);
        order_product *= f.component.order();
    }
    for (size_t i = 0; i < dec.factors.size(); ++i)
        for (size_t j = i + 1; j < dec.factors.size(); ++j)
            if (R.mul(dec.factors[i].idempotent, dec.factors[j].idempotent) != R.zero())
                fail(errc::internal, "decomposition idempotents not orthogonal in " + R.label());
    if (sum != R.one())
        fail(errc::internal, "decomposition idempotents do not sum to 1 in " + R.label());
    if (order_product != R.order())
        fail(errc::internal, "decomposition factor orders do not multiply to |R| in " + R.label());

    // each component is R modulo p^k R; check by order counting
    for (const auto& f : dec.factors) {
        long long pk = 1;
        for (int i = 0; i < f.exponent; ++i) pk *= f.prime;
        const int z = R.of_int(pk);
        IndexSet image(n);
        for (int r = 0; r < n; ++r) image.set(R.mul(z, r));
        if (static_cast<long long>(image.count()) * f.component.order() != R.order())
            fail(errc::internal, "component of " + R.label() + " at p=" + std::to_string(f.prime) +
                                     " does not match R/p^kR by order counting");
    }
    return dec;
}

const char* class_case_name(ClassCase c) {
    switch (c) {
    case ClassCase::R1: return "R1";
    case ClassCase::R2: return "R2";
    case ClassCase::R3: return "R3";
    case ClassCase::R1xR2: return "R1xR2";
    case ClassCase::R1xR3: return "R1xR3";
    case ClassCase::not_yaqub_nil_clean: return "NotYaqubNilClean";
    }
    return "?";
}

namespace {

ClassCase case_from_primes(bool has2, bool has3, bool has5) {
    if (has3) return has2 ? ClassCase::R1xR2 : ClassCase::R2;
    if (has5) return has2 ? ClassCase::R1xR3 : ClassCase::R3;
    return ClassCase::R1;
}

} // namespace

StructureEvidence evaluate_structure_by_components(RingAnalysis& analysis) {
    const FiniteRing& R = analysis.ring();
    StructureEvidence out;

    const auto primes = factorize(R.characteristic());
    bool has2 = false, has3 = false, has5 = false;
    for (const auto& pp : primes) {
        if (pp.p == 2) has2 = true;
        else if (pp.p == 3) has3 = true;
        else if (pp.p == 5) has5 = true;
        else {
            out.reason = "characteristic has prime factor " + std::to_string(pp.p);
            return out;
        }
    }
    if (has3 && has5) {
        out.reason = "characteristic divisible by both 3 and 5";
        return out;
    }

    const Decomposition dec = prime_component_decomposition(R);
    for (const auto& f : dec.factors) {
        RingAnalysis comp(f.component, analysis.options());
        FactorEvidence ev;
        ev.prime = f.prime;
        ev.component = f.component.label();
        ev.radical_nil = comp.radical().is_nil;
        RingAnalysis residue(comp.residue_ring(), analysis.options());
        if (f.prime == 2) {
            ev.residue_form = "boolean";
            ev.residue_ok = residue.predicate("boolean").holds;
        } else if (f.prime == 3) {
            ev.residue_form = "yaqub_ring";
            ev.residue_ok = residue.predicate("yaqub_ring").holds;
        } else {
            ev.residue_form = "Z5";
            ev.residue_ok = residue.predicate("iso_z5").holds;
        }
        const bool ok = ev.radical_nil && ev.residue_ok;
        out.evidence.push_back(std::move(ev));
        if (!ok) {
            out.reason = "component at p=" + std::to_string(f.prime) +
                         " fails its radical/residue condition";
            return out;
        }
    }

    out.ok = true;
    out.case_tag = case_from_primes(has2, has3, has5);
    return out;
}

StructureEvidence evaluate_residue_form(RingAnalysis& analysis) {
    StructureEvidence out;
    const RadicalResult& J = analysis.radical();
    if (!J.is_nil) {
        out.reason = "radical is not nil";
        return out;
    }
    RingAnalysis s(analysis.residue_ring(), analysis.options());

    std::string form;
    if (s.predicate("boolean").holds) {
        out.case_tag = ClassCase::R1;
        form = "boolean";
    } else if (s.predicate("yaqub_ring").holds) {
        out.case_tag = ClassCase::R2;
        form = "yaqub_ring";
    } else if (s.predicate("iso_z5").holds) {
        out.case_tag = ClassCase::R3;
        form = "Z5";
    } else if (has_central_split(s, "boolean", "yaqub_ring").holds) {
        out.case_tag = ClassCase::R1xR2;
        form = "boolean x yaqub_ring";
    } else if (has_central_split(s, "boolean", "iso_z5").holds) {
        out.case_tag = ClassCase::R1xR3;
        form = "boolean x Z5";
    } else {
        out.reason = "residue ring " + s.ring().label() + " matches none of the five forms";
        return out;
    }

    FactorEvidence ev;
    ev.component = s.ring().label();
    ev.radical_nil = true;
    ev.residue_form = form;
    ev.residue_ok = true;
    out.evidence.push_back(std::move(ev));
    out.ok = true;
    return out;
}

namespace {

ClassificationOutcome classify_common(RingAnalysis& analysis, StructureEvidence (*eval)(RingAnalysis&),
                                      const char* route) {
    ClassificationOutcome out;
    const Verdict& yaqub = analysis.predicate("yaqub_nil_clean");
    if (!yaqub.holds) {
        out.case_tag = ClassCase::not_yaqub_nil_clean;
        out.counterexample = yaqub.witness;
        return out;
    }
    StructureEvidence ev = eval(analysis);
    if (!ev.ok)
        fail(errc::classification_contradiction,
             analysis.ring().label() + " is Yaqub nil-clean but the " + route +
                 " classification found no case: " + ev.reason);
    out.case_tag = ev.case_tag;
    out.evidence = std::move(ev.evidence);
    return out;
}

} // namespace

ClassificationOutcome classify_by_components(RingAnalysis& analysis) {
    return classify_common(analysis, &evaluate_structure_by_components, "component");
}

ClassificationOutcome classify_by_residue(RingAnalysis& analysis) {
    return classify_common(analysis, &evaluate_residue_form, "residue");
}

// ---------------------------------------------------------------------------
// tripotent witnesses

namespace {

// Carrier of the unital subring generated by a: the additive span of the
// powers a^0, a^1, ... (multiplicatively closed since a^i * a^j is again a
// power). Sorted ascending.
std::vector<int> power_span(const FiniteRing& R, int a) {
    const int n = R.order();
    std::vector<char> seen_pow(n, 0);
    std::vector<int> gens;
    for (int x = R.one(); !seen_pow[x]; x = R.mul(x, a)) {
        seen_pow[x] = 1;
        gens.push_back(x);
    }

    std::vector<char> in_span(n, 0);
    std::vector<int> members, work;
    in_span[R.zero()] = 1;
    members.push_back(R.zero());
    work.push_back(R.zero());
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        for (int g : gens) {
            const int y = R.add(x, g);
            if (!in_span[y]) {
                in_span[y] = 1;
                members.push_back(y);
                work.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_tripotent(const FiniteRing& R, int e) { return R.mul(R.mul(e, e), e) == e; }

std::optional<TripotentWitness> witness_from(const FiniteRing& R, int a, int e,
                                             TripotentWitness::Mode mode) {
    const int b = mode == TripotentWitness::Mode::minus
                      ? R.sub(a, e)
                      : R.add(a, R.mul(R.of_int(3), e));
    const NilpotencyResult nr = nilpotency(R, b);
    if (!nr.is_nilpotent) return std::nullopt;
    return TripotentWitness{a, e, mode, nr.index};
}

} // namespace

std::optional<TripotentWitness> find_tripotent_witness(const FiniteRing& R, int a) {
    const std::vector<int> span = power_span(R, a);
    std::vector<int> trips;
    for (int e : span)
        if (is_tripotent(R, e)) trips.push_back(e);

    // minus mode preferred; smallest index breaks remaining ties
    for (int e : trips)
        if (auto w = witness_from(R, a, e, TripotentWitness::Mode::minus)) return w;
    for (int e : trips)
        if (auto w = witness_from(R, a, e, TripotentWitness::Mode::plus3)) return w;

    // full-ring escalation: commuting tripotents outside Z[a]
    for (int e = 0; e < R.order(); ++e)
        if (is_tripotent(R, e) && R.commute(a, e))
            if (auto w = witness_from(R, a, e, TripotentWitness::Mode::minus)) return w;
    for (int e = 0; e < R.order(); ++e)
        if (is_tripotent(R, e) && R.commute(a, e))
            if (auto w = witness_from(R, a, e, TripotentWitness::Mode::plus3)) return w;
    return std::nullopt;
}

TripotentWitness extract_tripotent(RingAnalysis& analysis, int a) {
    if (!analysis.predicate("yaqub_nil_clean").holds)
        fail(errc::precondition_failed,
             analysis.ring().label() + " is not Yaqub nil-clean; no tripotent witness is owed");
    if (auto w = find_tripotent_witness(analysis.ring(), a)) return *w;
    fail(errc::witness_not_found, "no tripotent witness for element " + std::to_string(a) +
                                      " of " + analysis.ring().label());
}

void verify_tripotent_witness(const FiniteRing& R, const TripotentWitness& w) {
    auto check = [&](bool ok, const char* what) {
        if (!ok)
            fail(errc::internal, std::string("tripotent witness fails ") + what + " in " +
                                     R.label());
    };
    check(is_tripotent(R, w.e), "e^3 = e");
    check(R.commute(w.a, w.e), "ae = ea");
    const int b = w.mode == TripotentWitness::Mode::minus
                      ? R.sub(w.a, w.e)
                      : R.add(w.a, R.mul(R.of_int(3), w.e));
    check(nilpotent_by_squaring(R, b), "declared nilpotency");
    check(R.pow(b, w.nil_index) == R.zero(), "recorded nilpotency index");
    check(w.nil_index == 1 || R.pow(b, w.nil_index - 1) != R.zero(),
          "minimality of the nilpotency index");
}

QuadTripotentWitness extract_quad_tripotent(const FiniteRing& R, int a) {
    if (!nilpotency(R, R.of_int(5)).is_nilpotent)
        fail(errc::precondition_failed, "5 is not nilpotent in " + R.label());
    if (!nilpotency(R, R.add(a, R.pow(a, 3))).is_nilpotent)
        fail(errc::precondition_failed,
             "a + a^3 is not nilpotent for element " + std::to_string(a) + " of " + R.label());

    const int four = R.of_int(4);
    auto try_e = [&](int e) -> std::optional<QuadTripotentWitness> {
        if (R.mul(R.mul(e, e), e) != R.mul(four, e)) return std::nullopt;
        const NilpotencyResult nr = nilpotency(R, R.sub(a, e));
        if (!nr.is_nilpotent) return std::nullopt;
        return QuadTripotentWitness{a, e, nr.index};
    };

    for (int e : power_span(R, a))
        if (auto w = try_e(e)) return *w;
    for (int e = 0; e < R.order(); ++e)
        if (R.commute(a, e))
            if (auto w = try_e(e)) return *w;
    fail(errc::witness_not_found, "no e with e^3 = 4e and a - e nilpotent for element " +
                                      std::to_string(a) + " of " + R.label());
}

void verify_quad_tripotent_witness(const FiniteRing& R, const QuadTripotentWitness& w) {
    auto check = [&](bool ok, const char* what) {
        if (!ok)
            fail(errc::internal,
                 std::string("quad-tripotent witness fails ") + what + " in " + R.label());
    };
    const int e = w.e;
    check(R.mul(R.mul(e, e), e) == R.mul(R.of_int(4), e), "e^3 = 4e");
    check(R.commute(w.a, e), "ae = ea");
    const int wn = R.sub(w.a, e);
    check(nilpotent_by_squaring(R, wn), "nilpotency of a - e");
    check(R.pow(wn, w.nil_index) == R.zero(), "recorded nilpotency index");
    check(w.nil_index == 1 || R.pow(wn, w.nil_index - 1) != R.zero(),
          "minimality of the nilpotency index");

    // replay a + a^3 = 5e + (1 + 3e^2 + 3ew + w^2) w  with w = a - e
    const int three = R.of_int(3);
    const int lhs = R.add(w.a, R.pow(w.a, 3));
    const int coeff = R.add(R.add(R.one(), R.mul(three, R.mul(e, e))),
                            R.add(R.mul(three, R.mul(e, wn)), R.mul(wn, wn)));
    const int rhs = R.add(R.mul(R.of_int(5), e), R.mul(coeff, wn));
    check(lhs == rhs, "the defining identity for a + a^3");
    check(nilpotent_by_squaring(R, lhs), "nilpotency of a + a^3");
}

// ---------------------------------------------------------------------------

Verdict hom_image_detect(RingAnalysis& analysis, HomImageTarget target) {
    const FiniteRing& R = analysis.ring();
    if (R.order() < 2)
        fail(errc::degenerate_ring, "hom_image_detect rejects the trivial ring");
    const std::vector<Ideal> ideals = all_ideals(R, analysis.options().ideal_enum_max);

    Verdict v;
    v.predicate_id = target == HomImageTarget::z3xz5 ? "hom_image_z3xz5" : "hom_image_z5xz5";
    v.stats.carrier = static_cast<long long>(ideals.size());
    const long long want_index = target == HomImageTarget::z3xz5 ? 15 : 25;

    for (const Ideal& I : ideals) {
        ++v.stats.scanned;
        if (static_cast<long long>(R.order()) != want_index * I.size()) continue;
        const FiniteRing Q = quotient_ring(R, I);
        if (target == HomImageTarget::z3xz5) {
            // an order-15 unital ring is Z_15 = Z_3 x Z_5; certify by characteristic
            if (Q.characteristic() != 15)
                fail(errc::internal, "order-15 quotient of " + R.label() + " has characteristic " +
                                         std::to_string(Q.characteristic()));
            v.holds = true;
            v.witness = Witness{{}, "ideal of index 15 with " + std::to_string(I.size()) +
                                        " elements, generated by " +
                                        [&] {
                                            std::string s;
                                            for (int g : minimal_ideal_generators(R, I))
                                                s += (s.empty() ? "" : ",") + std::to_string(g);
                                            return s.empty() ? std::string("0") : s;
                                        }()};
            return v;
        }
        // Z_5 x Z_5: a nontrivial central idempotent with both corners Z_5
        for (int g = 0; g < Q.order(); ++g) {
            if (g == Q.zero() || g == Q.one() || Q.mul(g, g) != g) continue;
            bool central = true;
            for (int r = 0; r < Q.order() && central; ++r) central = Q.commute(g, r);
            if (!central) continue;
            const FiniteRing A = corner_ring(Q, g);
            const FiniteRing B = corner_ring(Q, Q.sub(Q.one(), g));
            if (A.order() == 5 && B.order() == 5 && A.characteristic() == 5 &&
                B.characteristic() == 5) {
                v.holds = true;
                v.witness = Witness{{}, "order-25 quotient splits as Z5 x Z5 at idempotent " +
                                            std::to_string(g)};
                return v;
            }
        }
    }
    v.holds = false;
    v.witness = Witness{{}, "all " + std::to_string(ideals.size()) +
                                " ideals enumerated, no quotient of the target shape"};
    return v;
}

Verdict has_central_split(RingAnalysis& analysis, std::string_view left_pred,
                          std::string_view right_pred) {
    const FiniteRing& R = analysis.ring();
    Verdict v;
    v.predicate_id = "central_split(" + std::string(left_pred) + "," + std::string(right_pred) + ")";
    const std::vector<int> centrals = analysis.central_idempotents().to_vector();
    v.stats.carrier = static_cast<long long>(centrals.size());
    for (int e : centrals) {
        ++v.stats.scanned;
        // order-1 corners satisfy no class predicate, so 0 and 1 never split
        if (e == R.zero() || e == R.one()) continue;
        RingAnalysis left(corner_ring(R, e), analysis.options());
        RingAnalysis right(corner_ring(R, R.sub(R.one(), e)), analysis.options());
        if (left.predicate(left_pred).holds && right.predicate(right_pred).holds) {
            v.holds = true;
            Witness w;
            w.elems.emplace_back("e", e);
            v.witness = std::move(w);
            return v;
        }
    }
    v.holds = false;
    std::string listed;
    for (int e : centrals) listed += (listed.empty() ? "" : ",") + std::to_string(e);
    v.witness = Witness{{}, "central idempotents exhausted: " + listed};
    return v;
}

} // namespace ringlab
