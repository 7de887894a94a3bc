#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/predicates.hpp"

namespace ringlab {

// CRT decomposition along the characteristic: one central idempotent per
// prime power, certified orthogonal with sum 1. The factor rings are the
// corresponding corners.
struct DecompositionFactor {
    long long prime = 0;
    int exponent = 0;
    int idempotent = 0;  // element index in the decomposed ring
    FiniteRing component;
};

struct Decomposition {
    std::vector<DecompositionFactor> factors;
};

Decomposition prime_component_decomposition(const FiniteRing& R);

enum class ClassCase { R1, R2, R3, R1xR2, R1xR3, not_yaqub_nil_clean };
const char* class_case_name(ClassCase c);

struct FactorEvidence {
    long long prime = 0;
    std::string component;      // rendered label
    bool radical_nil = false;
    std::string residue_form;   // "boolean" | "yaqub_ring" | "Z5"
    bool residue_ok = false;
};

// Right-hand side of the prime-component structure characterization,
// evaluated without consulting the Yaqub nil-clean scan: characteristic
// factors into {2,3,5} with the 3- and 5-parts never together, and every
// component has nil radical with the residue of the matching form.
struct StructureEvidence {
    bool ok = false;
    ClassCase case_tag = ClassCase::not_yaqub_nil_clean;
    std::string reason;  // why ok is false, when it is
    std::vector<FactorEvidence> evidence;
};

StructureEvidence evaluate_structure_by_components(RingAnalysis& analysis);

// Residue-ring form: R/J(R) is Boolean, a Yaqub ring, Z_5, or a central
// split Boolean x Yaqub-ring / Boolean x Z_5. Radical must be nil.
StructureEvidence evaluate_residue_form(RingAnalysis& analysis);

struct ClassificationOutcome {
    ClassCase case_tag = ClassCase::not_yaqub_nil_clean;
    std::vector<FactorEvidence> evidence;
    std::optional<Witness> counterexample;  // the Yaqub nil-clean witness when not in the class
};

// Classify via prime components. Throws error(classification_contradiction)
// when the ring is Yaqub nil-clean but no case fits (impossible unless the
// implementation is broken).
ClassificationOutcome classify_by_components(RingAnalysis& analysis);
// Classify via the residue-ring form; agrees with classify_by_components.
ClassificationOutcome classify_by_residue(RingAnalysis& analysis);

// Tripotent witness: e^3 = e commuting with a such that a - e (mode minus)
// or a + 3e (mode plus3) is nilpotent.
struct TripotentWitness {
    enum class Mode { minus, plus3 };
    int a = 0;
    int e = 0;
    Mode mode = Mode::minus;
    int nil_index = 0;
};

// Searches the unital subring generated by a (all integer polynomials in a),
// minus mode first, smallest e first; escalates to a full-ring scan over
// commuting tripotents before giving up.
std::optional<TripotentWitness> find_tripotent_witness(const FiniteRing& R, int a);

// Same search with the Yaqub nil-clean precondition enforced; absence of a
// witness then raises error(witness_not_found).
TripotentWitness extract_tripotent(RingAnalysis& analysis, int a);

// Recomputes e^3 = e, ae = ea, and the declared nilpotency (squaring route,
// plus the recorded index). Throws error(internal) on any mismatch.
void verify_tripotent_witness(const FiniteRing& R, const TripotentWitness& w);

// Witness with e^3 = 4e and a - e nilpotent, available whenever 5 is
// nilpotent and a + a^3 is nilpotent.
struct QuadTripotentWitness {
    int a = 0;
    int e = 0;
    int nil_index = 0;
};

QuadTripotentWitness extract_quad_tripotent(const FiniteRing& R, int a);

// Replays the defining identity a + a^3 = 5e + (1 + 3e^2 + 3ew + w^2)w for
// w = a - e and re-derives the nilpotency of a + a^3.
void verify_quad_tripotent_witness(const FiniteRing& R, const QuadTripotentWitness& w);

enum class HomImageTarget { z3xz5, z5xz5 };

// Detects a homomorphic image Z_3 x Z_5 (equivalently Z_15) or Z_5 x Z_5 by
// enumerating ideals; subject to the ideal-enumeration guard.
Verdict hom_image_detect(RingAnalysis& analysis, HomImageTarget target);

// Searches central idempotents e (including 0 and 1) for a split where
// corner(R, e) satisfies left_pred and corner(R, 1-e) satisfies right_pred.
// Order-1 corners satisfy no predicate, so only proper splits succeed; pure
// cases are the caller's business. A false verdict lists every central
// idempotent tried.
Verdict has_central_split(RingAnalysis& analysis, std::string_view left_pred,
                          std::string_view right_pred);

} // namespace ringlab
