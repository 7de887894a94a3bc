#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/predicates.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

// One theorem check on one ring: both sides of the stated equivalence (or
// the implication) evaluated independently and compared. Guarded
// subroutines turn the record into a skip with the reason recorded, never a
// silent pass.
struct VerificationRecord {
    std::string ring;
    std::string theorem_id;
    std::optional<bool> left;
    std::optional<bool> right;
    bool agree = true;
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::vector<std::string> notes;
    std::optional<std::string> skipped_reason;
    double millis = 0.0;

    bool skipped() const { return skipped_reason.has_value(); }
    bool disagreement() const { return !skipped() && !agree; }
};

// Catalogued characterizations. The identifiers are stable strings used on
// the command line and in report files.
//   L2.1  Yaqub nil-clean <=> a^2 is strongly weakly nil-clean for all a
//   T2.2  Yaqub nil-clean <=> J(R) nil and R/J(R) has the identity x^3 = +-x
//   T2.5  product ring Yaqub nil-clean <=> all factors are, at most one not
//         strongly 2-nil-clean
//   C2.6  R^k (k >= 2) Yaqub nil-clean <=> R strongly 2-nil-clean
//         <=> R^k strongly 2-nil-clean
//   L2.7  for nil ideals I: R Yaqub nil-clean <=> R/I Yaqub nil-clean
//   T2.8  T_n(R) Yaqub nil-clean <=> T_n(R) strongly 2-nil-clean
//         <=> R strongly 2-nil-clean
//   T3.1  Yaqub nil-clean <=> prime components at {2,3,5} (3 and 5 never
//         together) with nil radicals and Boolean / Yaqub-ring / Z_5 residues
//   C3.2  Yaqub nil-clean <=> a - a^5 always nilpotent and no homomorphic
//         image Z_3 x Z_5 or Z_5 x Z_5
//   C3.3  strongly 2-nil-clean <=> Yaqub nil-clean and 6 nilpotent
//   C3.4  strongly nil-clean <=> Yaqub nil-clean and 2 nilpotent
//   T3.6  Yaqub nil-clean <=> J(R) nil and R/J(R) of one of the five forms
//   C3.7  Yaqub nil-clean <=> periodic and R/J(R) of one of the five forms
//   T3.10 Yaqub nil-clean <=> every a has a commuting tripotent e with
//         a - e or a + 3e nilpotent
//   P4.1  corners (and unital subrings) of Hirano rings are Hirano
//   L4.4  for nil ideals I: R Hirano <=> R/I Hirano
//   L4.5  R^k (k >= 2) Hirano <=> R 2-UU <=> R^k 2-UU
//   T4.6  T_n(R) Hirano <=> T_n(R) 2-UU <=> R 2-UU
//   L5.1  exchange => -2 is clean
//   L5.2  exchange and Hirano => 30 nilpotent
//   L5.3  exchange and Hirano => J(R) nil
//   T5.4  Yaqub nil-clean <=> exchange and Hirano
//   C5.5  Yaqub nil-clean <=> periodic and Hirano
const std::vector<std::string>& all_theorem_ids();
bool is_theorem_id(std::string_view id);
std::string theorem_summary(std::string_view id);

VerificationRecord verify_theorem(RingAnalysis& analysis, std::string_view theorem_id);

} // namespace ringlab
