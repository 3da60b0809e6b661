#include "delpezzo/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

namespace delpezzo {

namespace {

[[noreturn]] void bad(const std::string& ctx, const std::string& what) {
    throw std::invalid_argument(ctx + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& ctx) {
    if (!j.is_object()) bad(ctx, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(ctx, std::string("missing key '") + key + "'");
    return *it;
}

long need_int(const json& j, const char* key, const std::string& ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_number_integer()) bad(ctx, std::string("'") + key + "' must be an integer");
    return v.get<long>();
}

bool need_bool(const json& j, const char* key, const std::string& ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_boolean()) bad(ctx, std::string("'") + key + "' must be a boolean");
    return v.get<bool>();
}

std::string need_str(const json& j, const char* key, const std::string& ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_string()) bad(ctx, std::string("'") + key + "' must be a string");
    return v.get<std::string>();
}

const json& need_array(const json& j, const char* key, const std::string& ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_array()) bad(ctx, std::string("'") + key + "' must be an array");
    return v;
}

/* optional string-valued key: absent and null both mean "none" */
std::optional<std::string> opt_str(const json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) bad(ctx, std::string("'") + key + "' must be a string or null");
    return it->get<std::string>();
}

json ord_to_json(const std::optional<int>& o) {
    if (!o) return json("inf");
    return json(*o);
}

json kind_str(CurveKind k) {
    switch (k) {
        case CurveKind::minus_one: return "-1";
        case CurveKind::minus_two: return "-2";
        default: return "other";
    }
}

json coord_to_json(const std::vector<Poly>& entries) {
    json a = json::array();
    for (const auto& f : entries) a.push_back(poly_to_json(f));
    return a;
}

std::vector<Poly> coord_from_json(const json& j, const char* key, const std::string& ctx) {
    const json& arr = need_array(j, key, ctx);
    std::vector<Poly> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(poly_from_json(arr[i], ctx + "." + key + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

json poly_to_json(const Poly& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(c.str());
    return a;
}

Poly poly_from_json(const json& j, const std::string& ctx) {
    if (!j.is_array()) bad(ctx, "expected an array of coefficient strings");
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& c = j[i];
        if (!c.is_string()) bad(ctx, "coefficient " + std::to_string(i) + " must be a string");
        try {
            cs.push_back(Rational::parse(c.get<std::string>()));
        } catch (const std::domain_error& e) {
            bad(ctx, e.what());
        }
    }
    return Poly(std::move(cs));
}

json place_to_json(const Place& p) {
    json j;
    if (p.at_infinity) {
        j["kind"] = "infinity";
    } else {
        j["kind"] = "finite";
        j["poly"] = poly_to_json(p.poly);
    }
    return j;
}

Place place_from_json(const json& j) {
    const std::string ctx = "place";
    std::string kind = need_str(j, "kind", ctx);
    if (kind == "infinity") return Place::infinity();
    if (kind != "finite") bad(ctx, "kind must be 'finite' or 'infinity'");
    return Place::finite(poly_from_json(need(j, "poly", ctx), ctx + ".poly"));
}

json model_to_json(const WeierstrassModel& m) {
    json j;
    j["A"] = poly_to_json(m.A());
    j["B"] = poly_to_json(m.B());
    return j;
}

WeierstrassModel model_from_json(const json& j) {
    const std::string ctx = "model";
    Poly a = poly_from_json(need(j, "A", ctx), ctx + ".A");
    Poly b = poly_from_json(need(j, "B", ctx), ctx + ".B");
    return WeierstrassModel::make(std::move(a), std::move(b));
}

json fibre_configuration_to_json(const FibreConfiguration& conf) {
    json fibres = json::array();
    for (const auto& f : conf.fibres) {
        json row;
        row["place"] = place_to_json(f.place);
        row["degree"] = f.degree;
        row["type"] = f.type.str();
        row["ordA"] = ord_to_json(f.orders.a);
        row["ordB"] = ord_to_json(f.orders.b);
        row["ordDelta"] = f.orders.d;
        row["euler"] = f.type.euler();
        row["components"] = f.type.components();
        fibres.push_back(std::move(row));
    }
    json j;
    j["fibres"] = std::move(fibres);
    j["euler_total"] = conf.euler_total;
    j["mw_rank"] = conf.mw_rank;
    j["extremal"] = conf.extremal;
    return j;
}

json weights_to_json(const DiagonalWeights& w) {
    json j;
    j["p"] = w.p;
    j["wx"] = w.wx;
    j["wy"] = w.wy;
    j["wz"] = w.wz;
    j["wv"] = w.wv;
    return j;
}

DiagonalWeights weights_from_json(const json& j) {
    const std::string ctx = "action";
    return DiagonalWeights::make(need_int(j, "p", ctx), need_int(j, "wx", ctx),
                                 need_int(j, "wy", ctx), need_int(j, "wz", ctx),
                                 need_int(j, "wv", ctx));
}

json invariance_report_to_json(const InvarianceReport& r) {
    json monos = json::array();
    for (const auto& m : r.monomials) {
        json row;
        row["monomial"] = m.str();
        row["ex"] = m.ex;
        row["ey"] = m.ey;
        row["ez"] = m.ez;
        row["ev"] = m.ev;
        row["weight"] = m.weight;
        monos.push_back(std::move(row));
    }
    json j;
    j["invariant"] = r.invariant;
    j["weight_class"] = r.weight_class;
    j["monomials"] = std::move(monos);
    j["offending"] = r.offending;
    return j;
}

json base_action_to_json(const BaseAction& b) {
    json j;
    j["order"] = b.order;
    j["whole_base_fixed"] = b.whole_base_fixed;
    j["fixed_points"] = b.fixed_points;
    return j;
}

json section_to_json(const SectionCurve& s) {
    json j;
    j["x"] = coord_to_json(s.coord(0));
    j["y"] = coord_to_json(s.coord(1));
    j["z"] = coord_to_json(s.coord(2));
    if (s.min_poly()) j["min_poly"] = poly_to_json(*s.min_poly());
    return j;
}

SectionCurve section_from_json(const json& j) {
    const std::string ctx = "section";
    auto x = coord_from_json(j, "x", ctx);
    auto y = coord_from_json(j, "y", ctx);
    auto z = coord_from_json(j, "z", ctx);
    auto it = j.find("min_poly");
    if (it != j.end() && !it->is_null())
        return SectionCurve::algebraic(std::move(x), std::move(y), std::move(z),
                                       poly_from_json(*it, ctx + ".min_poly"));
    auto collapse = [&](const std::vector<Poly>& entries, const char* key) {
        std::vector<Rational> cs;
        for (const auto& f : entries) {
            if (f.degree() > 0)
                bad(ctx, std::string("'") + key +
                             "' has a non-constant entry but no min_poly is given");
            cs.push_back(f.coeff(0));
        }
        return Poly(std::move(cs));
    };
    return SectionCurve::rational(collapse(x, "x"), collapse(y, "y"), collapse(z, "z"));
}

std::vector<SectionCurve> sections_from_json(const json& file) {
    auto it = file.find("sections");
    if (it == file.end() || !it->is_array())
        bad("sections file", "missing 'sections' array");
    std::vector<SectionCurve> out;
    for (const json& sj : *it) out.push_back(section_from_json(sj));
    return out;
}

json section_verdict_to_json(const SectionVerdict& v) {
    json j;
    j["stable"] = v.stable;
    j["detail"] = v.detail;
    return j;
}

json chain_to_json(const ChainWeights& c) {
    json pairs = json::array();
    for (const auto& [a, b] : c.pairs) pairs.push_back(json::array({a, b}));
    json j;
    j["n"] = c.n;
    j["pairs"] = std::move(pairs);
    return j;
}

ChainWeights chain_from_json(const json& j) {
    const std::string ctx = "chain";
    long n = need_int(j, "n", ctx);
    const json& arr = need_array(j, "pairs", ctx);
    std::vector<std::pair<long, long>> pairs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& p = arr[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer())
            bad(ctx, "pair " + std::to_string(i) + " must be [a, b] with integer entries");
        pairs.emplace_back(p[0].get<long>(), p[1].get<long>());
    }
    return ChainWeights::make(n, std::move(pairs));
}

json chain_verdict_to_json(const ChainVerdict& v) {
    json j;
    j["ok"] = v.ok;
    if (v.violation) {
        json viol;
        viol["kind"] = v.violation->kind == ChainViolation::Kind::link ? "link" : "sum";
        viol["index"] = v.violation->index;
        j["violation"] = std::move(viol);
    } else {
        j["violation"] = nullptr;
    }
    j["detail"] = v.detail;
    return j;
}

json blowup_program_to_json(const BlowupProgram& p) {
    json tracked = json::array();
    for (const auto& t : p.tracked) {
        json row;
        row["name"] = t.name;
        switch (t.kind) {
            case TrackedCurve::Kind::line: row["kind"] = "line"; break;
            case TrackedCurve::Kind::fiber: row["kind"] = "fiber"; break;
            case TrackedCurve::Kind::section: row["kind"] = "section"; break;
        }
        row["through"] = t.through;
        tracked.push_back(std::move(row));
    }
    json steps = json::array();
    for (const auto& s : p.steps) {
        json row;
        if (s.kind == BlowupStep::Kind::proper) {
            row["kind"] = "proper";
            row["point"] = s.point;
        } else {
            row["kind"] = "near";
            row["after"] = s.after;
            if (s.on) row["on"] = *s.on;
        }
        steps.push_back(std::move(row));
    }
    json j;
    j["base"] = p.base == BaseSurface::P2 ? "P2" : "P1xP1";
    j["tracked"] = std::move(tracked);
    j["steps"] = std::move(steps);
    return j;
}

BlowupProgram blowup_program_from_json(const json& j) {
    const std::string ctx = "program";
    BlowupProgram prog;
    std::string base = need_str(j, "base", ctx);
    if (base == "P2")
        prog.base = BaseSurface::P2;
    else if (base == "P1xP1")
        prog.base = BaseSurface::P1xP1;
    else
        bad(ctx, "base must be 'P2' or 'P1xP1'");

    const json& tracked = need_array(j, "tracked", ctx);
    for (std::size_t i = 0; i < tracked.size(); ++i) {
        const std::string tctx = ctx + ".tracked[" + std::to_string(i) + "]";
        TrackedCurve t;
        t.name = need_str(tracked[i], "name", tctx);
        std::string kind = need_str(tracked[i], "kind", tctx);
        if (kind == "line")
            t.kind = TrackedCurve::Kind::line;
        else if (kind == "fiber")
            t.kind = TrackedCurve::Kind::fiber;
        else if (kind == "section")
            t.kind = TrackedCurve::Kind::section;
        else
            bad(tctx, "kind must be 'line', 'fiber' or 'section'");
        for (const json& p : need_array(tracked[i], "through", tctx)) {
            if (!p.is_string()) bad(tctx, "'through' entries must be point names");
            t.through.push_back(p.get<std::string>());
        }
        prog.tracked.push_back(std::move(t));
    }

    const json& steps = need_array(j, "steps", ctx);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string sctx = ctx + ".steps[" + std::to_string(i) + "]";
        BlowupStep s;
        std::string kind = need_str(steps[i], "kind", sctx);
        if (kind == "proper") {
            s.kind = BlowupStep::Kind::proper;
            s.point = need_str(steps[i], "point", sctx);
        } else if (kind == "near") {
            s.kind = BlowupStep::Kind::near;
            s.after = static_cast<int>(need_int(steps[i], "after", sctx));
            s.on = opt_str(steps[i], "on", sctx);
        } else {
            bad(sctx, "kind must be 'proper' or 'near'");
        }
        prog.steps.push_back(std::move(s));
    }
    return prog;
}

json lattice_class_to_json(const LatticeClass& c) { return json(c.c); }

LatticeClass lattice_class_from_json(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty()) bad(ctx, "expected a non-empty array of integers");
    std::vector<long> c;
    for (const json& v : j) {
        if (!v.is_number_integer()) bad(ctx, "entries must be integers");
        c.push_back(v.get<long>());
    }
    return LatticeClass(std::move(c));
}

json blowup_result_to_json(const BlowupResult& r) {
    json curves = json::array();
    for (const auto& c : r.curves) {
        json row;
        row["name"] = c.name;
        row["class"] = lattice_class_to_json(c.cls);
        row["self_intersection"] = c.self_int;
        row["kind"] = kind_str(c.kind);
        curves.push_back(std::move(row));
    }
    json nodes = json::array();
    for (const auto& nd : r.graph.nodes) nodes.push_back(nd.name);
    json edges = json::array();
    for (const auto& e : r.graph.edges) {
        json row;
        row["i"] = e.i;
        row["j"] = e.j;
        row["mult"] = e.mult;
        edges.push_back(std::move(row));
    }
    json j;
    j["base"] = r.base == BaseSurface::P2 ? "P2" : "P1xP1";
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    j["k_squared"] = r.k_squared;
    j["picard"] = r.picard;
    j["curves"] = std::move(curves);
    j["graph"] = json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
    j["ascii"] = ascii_graph(r.graph);
    j["note"] = r.note;
    return j;
}

json contraction_report_to_json(const ContractionReport& r) {
    json j;
    j["sing"] = r.sing.str();
    j["k_squared"] = r.k_squared;
    j["picard_after"] = r.picard_after;
    j["contracted"] = r.contracted;
    return j;
}

json anticanonical_to_json(const AnticanonicalDecomposition& d) {
    json q = json::array();
    for (const auto& c : d.q) q.push_back(c.str());
    json j;
    j["d"] = d.d;
    j["q"] = std::move(q);
    j["nonnegative"] = d.nonnegative;
    return j;
}

json classification_record_to_json(const ClassificationRecord& r) {
    json row;
    row["sing"] = r.sing.str();
    row["k_squared"] = r.k_squared;
    row["unique_given_sing"] = r.unique_given_sing;
    row["k1_singular_members"] = r.k1_disambiguator ? json(*r.k1_disambiguator) : json(nullptr);
    row["action_count_p_ge_5"] =
        r.action_count_p_ge_5 ? json(action_count_str(*r.action_count_p_ge_5)) : json(nullptr);
    row["aut_finite"] = r.aut_finite;
    row["aut_order_form"] = r.aut_order_form ? json(*r.aut_order_form) : json(nullptr);
    row["excluded_from_theorem_A"] = r.excluded_from_theorem_A;
    row["depends_on_j"] = r.depends_on_j;
    row["via_catch_all"] = r.via_catch_all;
    return row;
}

json classification_table_to_json(const std::vector<ClassificationRecord>& table) {
    json records = json::array();
    for (const auto& r : table) records.push_back(classification_record_to_json(r));
    json j;
    j["version"] = kClassificationTableVersion;
    j["records"] = std::move(records);
    return j;
}

std::vector<ClassificationRecord> classification_table_from_json(const json& j) {
    const std::string ctx = "classification table";
    long version = need_int(j, "version", ctx);
    if (version != kClassificationTableVersion)
        bad(ctx, "unsupported version " + std::to_string(version) + " (expected " +
                     std::to_string(kClassificationTableVersion) + ")");
    std::vector<ClassificationRecord> table;
    const json& records = need_array(j, "records", ctx);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string rctx = ctx + ".records[" + std::to_string(i) + "]";
        const json& row = records[i];
        ClassificationRecord r;
        r.sing = DynkinType::parse(need_str(row, "sing", rctx));
        r.k_squared = static_cast<int>(need_int(row, "k_squared", rctx));
        r.unique_given_sing = need_bool(row, "unique_given_sing", rctx);
        r.k1_disambiguator = opt_str(row, "k1_singular_members", rctx);
        if (auto count = opt_str(row, "action_count_p_ge_5", rctx))
            r.action_count_p_ge_5 = action_count_parse(*count);
        r.aut_finite = need_bool(row, "aut_finite", rctx);
        r.aut_order_form = opt_str(row, "aut_order_form", rctx);
        r.excluded_from_theorem_A = need_bool(row, "excluded_from_theorem_A", rctx);
        r.depends_on_j = need_bool(row, "depends_on_j", rctx);
        r.via_catch_all = need_bool(row, "via_catch_all", rctx);
        table.push_back(std::move(r));
    }
    return table;
}

json extremal_table_to_json(const std::vector<ExtremalFibrationRecord>& table) {
    json records = json::array();
    for (const auto& r : table) {
        json fibres = json::array();
        for (const auto& f : r.fibre_types) fibres.push_back(f.str());
        json row;
        row["fibres"] = std::move(fibres);
        row["mw_order"] = r.mw_order;
        row["aut_f0_order"] = r.aut_f0_order;
        row["base_group_bound"] = r.base_group_bound;
        records.push_back(std::move(row));
    }
    json j;
    j["version"] = kExtremalTableVersion;
    j["records"] = std::move(records);
    return j;
}

std::vector<ExtremalFibrationRecord> extremal_table_from_json(const json& j) {
    const std::string ctx = "extremal table";
    long version = need_int(j, "version", ctx);
    if (version != kExtremalTableVersion)
        bad(ctx, "unsupported version " + std::to_string(version) + " (expected " +
                     std::to_string(kExtremalTableVersion) + ")");
    std::vector<ExtremalFibrationRecord> table;
    const json& records = need_array(j, "records", ctx);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string rctx = ctx + ".records[" + std::to_string(i) + "]";
        const json& row = records[i];
        ExtremalFibrationRecord r;
        for (const json& f : need_array(row, "fibres", rctx)) {
            if (!f.is_string()) bad(rctx, "'fibres' entries must be type strings");
            r.fibre_types.push_back(FibreType::parse(f.get<std::string>()));
        }
        r.mw_order = static_cast<int>(need_int(row, "mw_order", rctx));
        r.aut_f0_order = static_cast<int>(need_int(row, "aut_f0_order", rctx));
        r.base_group_bound = need_int(row, "base_group_bound", rctx);
        table.push_back(std::move(r));
    }
    return table;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << dump_report(j);
    if (!out) throw std::runtime_error("short write to " + path);
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace delpezzo
