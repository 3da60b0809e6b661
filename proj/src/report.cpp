#include "delpezzo/report.hpp"

#include <stdexcept>
#include <utility>

namespace delpezzo {

json analyze_report(const WeierstrassModel& m,
                    const std::vector<ExtremalFibrationRecord>& table) {
    auto conf = fibre_configuration(m);
    auto [jnum, jden] = m.j_invariant();
    auto hint = torsion_hint(conf, table);
    json out;
    out["model"] = model_to_json(m);
    out["J"] = json{{"num", poly_to_json(jnum)}, {"den", poly_to_json(jden)}};
    out["j_classical"] =
        json{{"num", poly_to_json(jnum * Rational(1728))}, {"den", poly_to_json(jden)}};
    out["configuration"] = fibre_configuration_to_json(conf);
    out["torsion_hint"] = hint ? json(*hint) : json(nullptr);
    return out;
}

json verify_action_report(const WeierstrassModel& m, const DiagonalWeights& w,
                          const std::vector<SectionCurve>& sections) {
    auto inv = check_invariance(m, w);
    auto base = base_action(w);

    bool ok = inv.invariant;
    json rows = json::array();
    int idx = 0;
    for (const auto& s : sections) {
        auto verdict = check_section_stable(s, m, w);
        ok = ok && verdict.stable;
        json row;
        row["index"] = idx++;
        row["section"] = s.str();
        row["stable"] = verdict.stable;
        row["detail"] = verdict.detail;
        rows.push_back(std::move(row));
    }

    json out;
    out["action"] = weights_to_json(w);
    out["invariance"] = invariance_report_to_json(inv);
    out["base"] = base_action_to_json(base);
    out["sections"] = std::move(rows);
    out["ok"] = ok;
    return out;
}

json blowup_report(const BlowupProgram& prog) {
    auto res = run_blowup_program(prog);
    auto contraction = contract_and_report(res);

    std::vector<CurveRecord> divisors;
    json divisor_names = json::array();
    for (const auto& c : res.curves)
        if (c.kind == CurveKind::minus_two) {
            divisors.push_back(c);
            divisor_names.push_back(c.name);
        }
    json per_curve;
    for (const auto& c : res.curves) {
        if (c.kind != CurveKind::minus_one) continue;
        try {
            per_curve[c.name] = anticanonical_to_json(anticanonical_decomposition(c, divisors));
        } catch (const std::domain_error& e) {
            per_curve[c.name] = json{{"error", e.what()}};
        }
    }

    json out;
    out["result"] = blowup_result_to_json(res);
    out["contraction"] = contraction_report_to_json(contraction);
    out["anticanonical"] =
        json{{"divisors", std::move(divisor_names)}, {"per_curve", std::move(per_curve)}};
    return out;
}

}  // namespace delpezzo
