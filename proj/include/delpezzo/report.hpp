#pragma once

#include <vector>

#include "delpezzo/json_io.hpp"

namespace delpezzo {

/* Assembled JSON reports shared by the CLI and the python module, so
 * both front ends emit byte-identical documents for the same inputs. */

/* {"model", "J", "j_classical", "configuration", "torsion_hint"} */
json analyze_report(const WeierstrassModel& m,
                    const std::vector<ExtremalFibrationRecord>& table);

/* {"action", "invariance", "base", "sections", "ok"}; "ok" is the
 * conjunction of equation invariance and every section verdict. */
json verify_action_report(const WeierstrassModel& m, const DiagonalWeights& w,
                          const std::vector<SectionCurve>& sections);

/* {"result", "contraction", "anticanonical"}: the program's lattice
 * data, the full (-2)-contraction, and an anticanonical decomposition
 * attempt for every (-1)-curve over all (-2)-curves. */
json blowup_report(const BlowupProgram& prog);

}  // namespace delpezzo
