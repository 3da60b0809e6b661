#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "delpezzo/blowup.hpp"
#include "delpezzo/classification.hpp"
#include "delpezzo/torus_action.hpp"
#include "delpezzo/weierstrass.hpp"

namespace delpezzo {

/* All reports use ordered_json so repeated runs serialize to identical
 * bytes: insertion order is the schema order, never the alphabet. */
using json = nlohmann::ordered_json;

/* Every *_from_json below throws std::invalid_argument with the
 * offending key path on a schema violation. */

/* ["1", "-1/2", ...], coefficients by ascending degree; [] is zero */
json poly_to_json(const Poly& f);
Poly poly_from_json(const json& j, const std::string& ctx = "poly");

/* {"kind":"finite","poly":[...]} or {"kind":"infinity"} */
json place_to_json(const Place& p);
Place place_from_json(const json& j);

/* {"A":[...],"B":[...]} */
json model_to_json(const WeierstrassModel& m);
WeierstrassModel model_from_json(const json& j);

json fibre_configuration_to_json(const FibreConfiguration& conf);

/* {"p":7,"wx":-5,"wy":0,"wz":-15,"wv":6} (weights re-read reduced) */
json weights_to_json(const DiagonalWeights& w);
DiagonalWeights weights_from_json(const json& j);

json invariance_report_to_json(const InvarianceReport& r);
json base_action_to_json(const BaseAction& b);

/* {"x":[poly,...],"y":[...],"z":[...]} with one inner polynomial (in
 * the field generator a) per v-degree; algebraic sections add
 * "min_poly". Rational sections must keep every inner entry constant. */
json section_to_json(const SectionCurve& s);
SectionCurve section_from_json(const json& j);
/* {"sections":[section,...]}, the on-disk shape of a section list */
std::vector<SectionCurve> sections_from_json(const json& file);
json section_verdict_to_json(const SectionVerdict& v);

/* {"n":5,"pairs":[[0,1],[4,2]]} */
json chain_to_json(const ChainWeights& c);
ChainWeights chain_from_json(const json& j);
json chain_verdict_to_json(const ChainVerdict& v);

/* {"base":"P2","tracked":[{"name","kind","through"}],
 *  "steps":[{"kind":"proper","point"} | {"kind":"near","after","on"?}]} */
json blowup_program_to_json(const BlowupProgram& p);
BlowupProgram blowup_program_from_json(const json& j);

json lattice_class_to_json(const LatticeClass& c);
LatticeClass lattice_class_from_json(const json& j, const std::string& ctx = "class");

json blowup_result_to_json(const BlowupResult& r);
json contraction_report_to_json(const ContractionReport& r);
json anticanonical_to_json(const AnticanonicalDecomposition& d);

json classification_record_to_json(const ClassificationRecord& r);

/* {"version":1,"records":[...]}; loaders reject other versions */
json classification_table_to_json(const std::vector<ClassificationRecord>& table);
std::vector<ClassificationRecord> classification_table_from_json(const json& j);
json extremal_table_to_json(const std::vector<ExtremalFibrationRecord>& table);
std::vector<ExtremalFibrationRecord> extremal_table_from_json(const json& j);

/* Throws std::runtime_error naming the path on open or parse failure. */
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/* 2-space indent plus trailing newline; the byte format every
 * deterministic report is compared in */
std::string dump_report(const json& j);

}  // namespace delpezzo
