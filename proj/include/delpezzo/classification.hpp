#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "delpezzo/lattice.hpp"
#include "delpezzo/weierstrass.hpp"

namespace delpezzo {

inline constexpr int kClassificationTableVersion = 1;
inline constexpr int kExtremalTableVersion = 1;

/* Number of order-p actions on Y modulo equivariant isomorphism, for
 * any prime p >= 5 (the count does not depend on p). */
enum class ActionCount { Zero, One, PPlusOne };

std::string action_count_str(ActionCount c);  // "0", "1", "p+1"
ActionCount action_count_parse(const std::string& s);

struct ClassificationRecord {
    DynkinType sing;
    int k_squared = 0;
    /* false when the singularity type alone does not pin down Y: the
     * three degree-1 types with two isomorphism classes each, and the
     * 2D4 family. */
    bool unique_given_sing = true;
    /* number of singular members of |-K_Y|, recorded for degree 1:
     * "exactly two" | "three or more" */
    std::optional<std::string> k1_disambiguator;
    /* absent only on the excluded quadric-cone row */
    std::optional<ActionCount> action_count_p_ge_5;
    bool aut_finite = false;
    std::optional<std::string> aut_order_form;
    bool excluded_from_theorem_A = false;
    /* the 2D4 surfaces form a family Y_{J,0}; the isomorphism class
     * moves with J */
    bool depends_on_j = false;
    /* action count One assigned by the catch-all uniqueness clause
     * rather than by a named example */
    bool via_catch_all = false;
};

/* The shipped table: the 26 singularity types of a Gorenstein del
 * Pezzo surface of Picard number 1 (degree != 7), plus the quadric
 * cone as an explicitly excluded 27th row. */
const std::vector<ClassificationRecord>& classification_table();

/* Look up a type. The disambiguator is required exactly for E8,
 * E7+A1 and E6+A2 (each has two isomorphism classes); it is optional
 * but checked for consistency everywhere else. */
ClassificationRecord classify(
    const std::vector<ClassificationRecord>& table, const DynkinType& sing,
    const std::optional<std::string>& k1_disambiguator = std::nullopt);
ClassificationRecord classify(
    const DynkinType& sing,
    const std::optional<std::string>& k1_disambiguator = std::nullopt);

struct TableViolation {
    std::string record;  // sing label, empty for table-level problems
    std::string message;
};

struct TableReport {
    bool ok = true;
    std::vector<TableViolation> violations;
};

/* Cross-checks a table: exactly 26 non-excluded rows whose (sing, K^2)
 * multiset is the known list, rank + K^2 = 9 on every row, degree 7
 * absent, degree 8 only on excluded rows, the finiteness/action-count
 * equivalences, and the per-degree action-count coverage. */
TableReport validate_table(const std::vector<ClassificationRecord>& table);
TableReport validate_table();

struct ExtremalFibrationRecord {
    std::vector<FibreType> fibre_types;  // multiset, one entry per fibre
    int mw_order = 1;                    // |MW(f)|, a torsion group here
    int aut_f0_order = 2;                // J non-constant forces 2
    long base_group_bound = 1;           // |H| divides this; divides prod n_k!
};

/* The five configurations used in the examples: II+II*, III+III*,
 * IV+IV*, I0*+I0*, I1 I1 I5 I5. The full table of extremal fibrations
 * can be ingested from JSON and passed to the operations below. */
const std::vector<ExtremalFibrationRecord>& extremal_fibration_table();

/* Violations of the record invariants (Euler sum 12, positive orders,
 * base bound dividing prod n_k!); empty when the record is sound. */
std::vector<std::string> validate_extremal_record(const ExtremalFibrationRecord& f);

/* The admissible |Aut(X)| values {2 * mw * h : h | base bound} for a
 * fibration with at least three singular fibres. Each value is checked
 * against the dichotomy 2^a*5 (1<=a<=3) or 2^a*3^b (1<=a+b<=7). */
std::set<long> aut_order_bound(const ExtremalFibrationRecord& f);

/* base_trivial = true: an order-p action over the identity on the base
 * needs p | |MW(f)|. base_trivial = false: a non-trivial base action
 * forces at most two singular fibres. */
bool admits_prime_action(const ExtremalFibrationRecord& f, long p, bool base_trivial);

/* The full degeneration chain containing sing, oriented toward
 * increasing K^2: E8 -> E7 -> E6 -> D5 -> A4, E7+A1 -> D6+A1 -> A5+A1,
 * E6+A2 -> A5+A2. Throws when sing is on none of them. */
std::vector<DynkinType> reduction_chain(const DynkinType& sing);

/* Match the singular-fibre multiset of an extremal configuration
 * against the table (degree-d places count as d fibres); returns the
 * torsion order |MW(f)| on a hit. */
std::optional<int> torsion_hint(const FibreConfiguration& conf,
                                const std::vector<ExtremalFibrationRecord>& table);
std::optional<int> torsion_hint(const FibreConfiguration& conf);

}  // namespace delpezzo
