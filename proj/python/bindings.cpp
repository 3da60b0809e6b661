#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "delpezzo/report.hpp"

namespace py = pybind11;
using namespace delpezzo;

namespace {

/* Every entry point passes JSON documents as strings; the python
 * package turns them into dicts. Parse failures surface as ValueError
 * like every other malformed input. */
json parse(const std::string& s, const char* what) {
    try {
        return json::parse(s);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

std::string analyze(const std::string& model, const std::string& extremal_table) {
    auto m = model_from_json(parse(model, "model"));
    auto table = extremal_table.empty()
                     ? extremal_fibration_table()
                     : extremal_table_from_json(parse(extremal_table, "extremal table"));
    return dump_report(analyze_report(m, table));
}

std::string verify_action(const std::string& model, const std::string& action,
                          const std::string& sections) {
    auto m = model_from_json(parse(model, "model"));
    auto w = weights_from_json(parse(action, "action"));
    std::vector<SectionCurve> secs;
    if (!sections.empty()) secs = sections_from_json(parse(sections, "sections"));
    return dump_report(verify_action_report(m, w, secs));
}

std::string blowup(const std::string& program) {
    return dump_report(blowup_report(blowup_program_from_json(parse(program, "program"))));
}

std::string classify_str(const std::string& sing,
                         const std::optional<std::string>& disambiguator,
                         const std::string& table) {
    auto type = DynkinType::parse(sing);
    auto rec = table.empty()
                   ? classify(type, disambiguator)
                   : classify(classification_table_from_json(parse(table, "table")), type,
                              disambiguator);
    return dump_report(classification_record_to_json(rec));
}

std::string check_chain(const std::string& chain) {
    auto c = chain_from_json(parse(chain, "chain"));
    return dump_report(chain_verdict_to_json(verify_chain(c)));
}

std::string propagate(long a0, long b0, long n, std::size_t length) {
    return dump_report(chain_to_json(propagate_chain(a0, b0, n, length)));
}

std::string builtin_classification_table() {
    return dump_report(classification_table_to_json(classification_table()));
}

std::string builtin_extremal_fibrations() {
    return dump_report(extremal_table_to_json(extremal_fibration_table()));
}

std::string validate_classification(const std::string& table) {
    auto report = table.empty()
                      ? validate_table()
                      : validate_table(classification_table_from_json(parse(table, "table")));
    json out;
    out["ok"] = report.ok;
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back(json{{"record", v.record}, {"message", v.message}});
    out["violations"] = std::move(violations);
    return dump_report(out);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact-arithmetic kernels behind the delpezzo package. Every function "
                "takes and returns JSON documents as strings; use the delpezzo package "
                "for the dict-level interface.";
    mod.attr("__version__") = "0.1.0";

    mod.def("analyze", &analyze, py::arg("model"), py::arg("extremal_table") = "",
            "Fibre configuration, J-invariant and torsion hint of a Weierstrass model.");
    mod.def("verify_action", &verify_action, py::arg("model"), py::arg("action"),
            py::arg("sections") = "",
            "Invariance, base action and section stability of a diagonal action.");
    mod.def("blowup", &blowup, py::arg("program"),
            "Lattice data, contraction and anticanonical decompositions of a blow-up "
            "program.");
    mod.def("classify", &classify_str, py::arg("sing"),
            py::arg("disambiguator") = std::optional<std::string>(), py::arg("table") = "",
            "Classification record for a singularity type.");
    mod.def("check_chain", &check_chain, py::arg("chain"),
            "Verdict on the junction weights along a chain of (-2)-curves.");
    mod.def("propagate_chain", &propagate, py::arg("a0"), py::arg("b0"), py::arg("n"),
            py::arg("length"), "The unique admissible chain extending (a0, b0) mod n.");
    mod.def("classification_table", &builtin_classification_table,
            "The built-in classification table.");
    mod.def("extremal_fibrations", &builtin_extremal_fibrations,
            "The built-in extremal fibration table.");
    mod.def("validate_classification_table", &validate_classification, py::arg("table") = "",
            "Cross-check a classification table (the built-in one when omitted).");
}
