#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "delpezzo/json_io.hpp"
#include "delpezzo/report.hpp"

using namespace delpezzo;

namespace {

/* exit codes: 0 ok, 1 verification failure, 2 input error */
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
    std::string format = "json";
    bool text() const { return format == "text"; }
};

void emit(const json& j) { std::cout << dump_report(j); }

std::string ord_str(const json& v) {
    return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
}

/* ---------------------------------------------------------------- analyze */

void print_analyze_text(const json& r) {
    const json& conf = r["configuration"];
    std::cout << "J = (" << poly_from_json(r["J"]["num"]).str() << ") / ("
              << poly_from_json(r["J"]["den"]).str() << ")\n";
    for (const json& f : conf["fibres"]) {
        Place pl = place_from_json(f["place"]);
        std::cout << f["type"].get<std::string>() << " at " << pl.str() << " (degree "
                  << f["degree"] << "): ordA " << ord_str(f["ordA"]) << ", ordB "
                  << ord_str(f["ordB"]) << ", ordDelta " << f["ordDelta"] << ", euler "
                  << f["euler"] << ", " << f["components"] << " components\n";
    }
    std::cout << "Euler total " << conf["euler_total"] << ", MW rank " << conf["mw_rank"]
              << (conf["extremal"].get<bool>() ? ", extremal" : ", not extremal") << "\n";
    if (!r["torsion_hint"].is_null())
        std::cout << "torsion hint: |MW| = " << r["torsion_hint"] << "\n";
}

int run_analyze(const std::string& model_path, const std::string& table_path,
                const Options& opt) {
    auto m = model_from_json(load_json_file(model_path));
    auto table = table_path.empty() ? extremal_fibration_table()
                                    : extremal_table_from_json(load_json_file(table_path));
    json report = analyze_report(m, table);
    if (opt.text())
        print_analyze_text(report);
    else
        emit(report);
    return kOk;
}

/* ---------------------------------------------------------- verify-action */

int run_verify_action(const std::string& model_path, const std::string& action_path,
                      const std::string& sections_path, const Options& opt) {
    auto m = model_from_json(load_json_file(model_path));
    auto w = weights_from_json(load_json_file(action_path));
    std::vector<SectionCurve> sections;
    if (!sections_path.empty())
        sections = sections_from_json(load_json_file(sections_path));

    json out = verify_action_report(m, w, sections);
    bool ok = out["ok"].get<bool>();
    if (opt.text()) {
        const json& inv = out["invariance"];
        std::cout << (inv["invariant"].get<bool>() ? "invariant" : "NOT invariant")
                  << " (class " << inv["weight_class"] << " mod " << w.p << ")\n";
        for (const json& mw : inv["monomials"])
            std::cout << "  " << mw["monomial"].get<std::string>() << " -> " << mw["weight"]
                      << "\n";
        std::cout << "base action order " << out["base"]["order"] << ", fixed:";
        for (const json& f : out["base"]["fixed_points"])
            std::cout << " " << f.get<std::string>();
        std::cout << "\n";
        for (const json& s : out["sections"])
            std::cout << "section " << s["section"].get<std::string>() << ": "
                      << (s["stable"].get<bool>() ? "stable" : "NOT stable") << "\n";
    } else {
        emit(out);
    }
    return ok ? kOk : kFailed;
}

/* ----------------------------------------------------------------- blowup */

int run_blowup(const std::string& program_path, const Options& opt) {
    json report = blowup_report(blowup_program_from_json(load_json_file(program_path)));
    if (opt.text()) {
        const json& res = report["result"];
        for (const json& c : res["curves"]) {
            std::cout << "  " << c["name"].get<std::string>() << " = "
                      << lattice_class_from_json(c["class"]).str() << "  ("
                      << c["self_intersection"].get<long>() << ")\n";
        }
        std::cout << res["ascii"].get<std::string>() << "\n";
        const json& con = report["contraction"];
        std::cout << "Sing Y = " << con["sing"].get<std::string>()
                  << ", K^2 = " << con["k_squared"] << ", rho after contraction = "
                  << con["picard_after"] << "\n";
        for (auto& [name, dec] : report["anticanonical"]["per_curve"].items()) {
            if (dec.contains("error")) {
                std::cout << "-K through " << name << ": " << dec["error"].get<std::string>()
                          << "\n";
                continue;
            }
            std::cout << "-K = " << dec["d"] << " " << name << " + sum q_j D_j, q =";
            for (const json& q : dec["q"]) std::cout << " " << q.get<std::string>();
            std::cout << (dec["nonnegative"].get<bool>() ? " (all >= 0)" : "") << "\n";
        }
    } else {
        emit(report);
    }
    return kOk;
}

/* --------------------------------------------------------------- classify */

int run_classify(const std::string& sing, const std::string& disamb,
                 const std::string& table_path, const Options& opt) {
    auto table = table_path.empty()
                     ? classification_table()
                     : classification_table_from_json(load_json_file(table_path));
    std::optional<std::string> k1;
    if (!disamb.empty()) k1 = disamb;
    auto rec = classify(table, DynkinType::parse(sing), k1);
    json out = classification_record_to_json(rec);
    if (opt.text()) {
        std::cout << rec.sing.str() << ": K^2 = " << rec.k_squared << ", actions of order p: "
                  << (rec.action_count_p_ge_5 ? action_count_str(*rec.action_count_p_ge_5)
                                              : std::string("excluded"))
                  << ", Aut " << (rec.aut_finite ? "finite" : "infinite");
        if (rec.aut_order_form) std::cout << " (" << *rec.aut_order_form << ")";
        std::cout << "\n";
    } else {
        emit(out);
    }
    return kOk;
}

/* ------------------------------------------------------------- check-chain */

int run_check_chain(const std::string& chain_path, const std::vector<long>& propagate,
                    const Options& opt) {
    ChainWeights chain =
        propagate.empty()
            ? chain_from_json(load_json_file(chain_path))
            : propagate_chain(propagate[0], propagate[1], propagate[2],
                              static_cast<std::size_t>(propagate[3]));
    auto verdict = verify_chain(chain);
    json out;
    out["chain"] = chain_to_json(chain);
    out["verdict"] = chain_verdict_to_json(verdict);
    if (opt.text()) {
        std::cout << (verdict.ok ? "chain verifies" : "chain rejected: " + verdict.detail)
                  << "\n";
    } else {
        emit(out);
    }
    return verdict.ok ? kOk : kFailed;
}

/* ------------------------------------------------------------ validate-all */

class Validator {
public:
    explicit Validator(std::string fixture_dir, std::string data_dir)
        : fixtures_(std::move(fixture_dir)), data_(std::move(data_dir)) {}

    json run() {
        const json expected = load_json_file(fixtures_ + "/expected.json");
        for (auto& [name, exp] : expected.at("models").items()) check_model(name, exp);
        for (auto& [name, exp] : expected.at("actions").items()) check_action(name, exp);
        for (auto& [name, exp] : expected.at("programs").items()) check_program(name, exp);
        check_tables();
        json out;
        out["items"] = items_;
        out["total"] = items_.size();
        out["failed"] = failed_;
        out["ok"] = failed_ == 0;
        return out;
    }

    bool ok() const { return failed_ == 0; }

private:
    void record(const std::string& item, bool ok, const std::string& detail = "") {
        json row;
        row["item"] = item;
        row["ok"] = ok;
        if (!ok) {
            row["detail"] = detail;
            ++failed_;
        }
        items_.push_back(std::move(row));
    }

    /* run `body`, which returns a failure detail ("" = pass); IO and math
     * errors become failures of the same named item */
    template <typename F>
    void guarded(const std::string& item, F body) {
        try {
            std::string detail = body();
            record(item, detail.empty(), detail);
        } catch (const std::exception& e) {
            record(item, false, e.what());
        }
    }

    static json sorted_fibres(const FibreConfiguration& conf) {
        std::vector<std::string> types;
        for (const auto& f : conf.fibres)
            for (int i = 0; i < f.degree; ++i) types.push_back(f.type.str());
        std::sort(types.begin(), types.end());
        return json(types);
    }

    void check_model(const std::string& name, const json& exp) {
        guarded("model " + name, [&]() -> std::string {
            auto m = model_from_json(load_json_file(fixtures_ + "/" + name + ".json"));
            auto conf = fibre_configuration(m);
            if (json got = sorted_fibres(conf); got != exp.at("fibres"))
                return "fibres " + got.dump() + ", expected " + exp.at("fibres").dump();
            if (conf.euler_total != exp.at("euler_total").get<int>())
                return "euler_total " + std::to_string(conf.euler_total);
            if (conf.mw_rank != exp.at("mw_rank").get<int>())
                return "mw_rank " + std::to_string(conf.mw_rank);
            if (conf.extremal != exp.at("extremal").get<bool>()) return "extremal flag differs";
            auto hint = torsion_hint(conf);
            json got_hint = hint ? json(*hint) : json(nullptr);
            if (got_hint != exp.at("torsion_hint"))
                return "torsion_hint " + got_hint.dump() + ", expected " +
                       exp.at("torsion_hint").dump();
            return "";
        });
    }

    void check_action(const std::string& name, const json& exp) {
        guarded("action " + name, [&]() -> std::string {
            auto m = model_from_json(load_json_file(fixtures_ + "/" + name + ".json"));
            auto w = weights_from_json(load_json_file(fixtures_ + "/" + name + "_action.json"));
            auto inv = check_invariance(m, w);
            if (inv.invariant != exp.at("invariant").get<bool>())
                return "invariance verdict differs";
            if (inv.weight_class != exp.at("weight_class").get<long>())
                return "weight class " + std::to_string(inv.weight_class);
            auto base = base_action(w);
            if (base.order != exp.at("base_order").get<long>())
                return "base order " + std::to_string(base.order);
            if (json(base.fixed_points) != exp.at("fixed_points")) return "fixed points differ";
            const json sections = load_json_file(fixtures_ + "/" + name + "_sections.json");
            long stable = 0, total = 0;
            for (const json& sj : sections.at("sections")) {
                ++total;
                if (check_section_stable(section_from_json(sj), m, w).stable) ++stable;
            }
            if (stable != total)
                return std::to_string(total - stable) + " of " + std::to_string(total) +
                       " sections unstable";
            if (stable != exp.at("stable_sections").get<long>())
                return "stable sections " + std::to_string(stable) + ", expected " +
                       exp.at("stable_sections").dump();
            return "";
        });
    }

    void check_program(const std::string& name, const json& exp) {
        guarded("program " + name, [&]() -> std::string {
            auto prog = blowup_program_from_json(load_json_file(fixtures_ + "/" + name + ".json"));
            auto res = run_blowup_program(prog);
            if (!res.n || *res.n != exp.at("n").get<int>())
                return "n " + (res.n ? std::to_string(*res.n) : std::string("absent"));
            if (res.k_squared != exp.at("k_squared").get<int>())
                return "K^2 " + std::to_string(res.k_squared);
            auto con = contract_and_report(res);
            if (con.sing.str() != exp.at("sing").get<std::string>())
                return "Sing " + con.sing.str() + ", expected " +
                       exp.at("sing").get<std::string>();
            if (con.picard_after != exp.at("picard_after").get<int>())
                return "rho after contraction " + std::to_string(con.picard_after);

            std::vector<CurveRecord> divisors;
            for (const auto& c : res.curves)
                if (c.kind == CurveKind::minus_two) divisors.push_back(c);
            bool lifted = false;
            for (const auto& c : res.curves) {
                if (c.kind != CurveKind::minus_one) continue;
                try {
                    auto dec = anticanonical_decomposition(c, divisors);
                    if (dec.d != res.k_squared)
                        return "anticanonical d " + std::to_string(dec.d) + " != K^2";
                    lifted = true;
                } catch (const std::domain_error&) {
                    // this (-1)-curve does not carry the decomposition; try the next
                }
            }
            if (!lifted) return "no (-1)-curve carries an anticanonical decomposition";
            return "";
        });
    }

    void check_tables() {
        guarded("classification table", [&]() -> std::string {
            auto report = validate_table();
            if (!report.ok) return "builtin table fails validation";
            auto loaded = classification_table_from_json(
                load_json_file(data_ + "/classification_table.json"));
            if (classification_table_to_json(loaded) !=
                classification_table_to_json(classification_table()))
                return "data file disagrees with the builtin table";
            if (!validate_table(loaded).ok) return "data file fails validation";
            return "";
        });
        guarded("extremal table", [&]() -> std::string {
            auto loaded =
                extremal_table_from_json(load_json_file(data_ + "/extremal_fibrations.json"));
            if (extremal_table_to_json(loaded) !=
                extremal_table_to_json(extremal_fibration_table()))
                return "data file disagrees with the builtin table";
            for (const auto& r : loaded)
                if (auto problems = validate_extremal_record(r); !problems.empty())
                    return problems.front();
            return "";
        });
    }

    std::string fixtures_, data_;
    json items_ = json::array();
    std::size_t failed_ = 0;
};

int run_validate_all(const std::string& fixture_dir, const std::string& data_dir,
                     const Options& opt) {
    Validator v(fixture_dir, data_dir);
    json out = v.run();
    if (opt.text()) {
        for (const json& item : out["items"]) {
            std::cout << (item["ok"].get<bool>() ? "ok      " : "FAILED  ")
                      << item["item"].get<std::string>();
            if (item.contains("detail")) std::cout << ": " << item["detail"].get<std::string>();
            std::cout << "\n";
        }
        std::cout << out["total"] << " items, " << out["failed"] << " failed\n";
    } else {
        emit(out);
    }
    return v.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact calculus for extremal rational elliptic fibrations, their order-p "
        "symmetries, and the singular del Pezzo surfaces they contract to"};
    app.require_subcommand(1);
    app.fallthrough();  // let the global --format trail the subcommand

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string model_path, action_path, sections_path, program_path, chain_path;
    std::string table_path, sing, disamb, fixture_dir = "fixtures", data_dir = "data";
    std::vector<long> propagate;

    auto* analyze = app.add_subcommand("analyze", "singular-fibre configuration of a model");
    analyze->add_option("model", model_path, "model JSON file")->required();
    analyze->add_option("--extremal-table", table_path,
                        "extremal-fibration table JSON replacing the builtin one");

    auto* verify = app.add_subcommand(
        "verify-action", "check a diagonal action: invariance, base action, sections");
    verify->add_option("model", model_path, "model JSON file")->required();
    verify->add_option("action", action_path, "action JSON file")->required();
    verify->add_option("--sections", sections_path, "sections JSON file");

    auto* blowup =
        app.add_subcommand("blowup", "run a blow-up program and contract the (-2)-curves");
    blowup->add_option("program", program_path, "program JSON file")->required();

    auto* classify = app.add_subcommand("classify", "look up a singularity type");
    classify->add_option("sing", sing, "Dynkin label, e.g. 2A3+A1")->required();
    classify->add_option("--k1-singular-members", disamb,
                         "\"exactly two\" or \"three or more\"; required for the ambiguous "
                         "degree-1 types");
    classify->add_option("--table", table_path, "classification table JSON replacing the builtin");

    auto* chain = app.add_subcommand("check-chain", "verify the chain congruences");
    chain->add_option("chain", chain_path, "chain JSON file");
    chain
        ->add_option("--propagate", propagate,
                     "a0 b0 n length: build the unique chain from its first pair")
        ->expected(4);

    auto* validate = app.add_subcommand("validate-all", "re-run the whole fixture corpus");
    validate->add_option("--fixtures", fixture_dir, "fixture directory")
        ->envname("DELPEZZO_FIXTURE_DIR")
        ->capture_default_str();
    validate->add_option("--data", data_dir, "data-table directory")
        ->envname("DELPEZZO_DATA_DIR")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (analyze->parsed()) return run_analyze(model_path, table_path, opt);
        if (verify->parsed())
            return run_verify_action(model_path, action_path, sections_path, opt);
        if (blowup->parsed()) return run_blowup(program_path, opt);
        if (classify->parsed()) return run_classify(sing, disamb, table_path, opt);
        if (chain->parsed()) {
            if (chain_path.empty() && propagate.empty())
                throw std::invalid_argument("check-chain needs a chain file or --propagate");
            if (!chain_path.empty() && !propagate.empty())
                throw std::invalid_argument("check-chain takes a chain file or --propagate, not both");
            if (!propagate.empty() && propagate[3] < 1)
                throw std::invalid_argument("--propagate length must be >= 1");
            return run_check_chain(chain_path, propagate, opt);
        }
        if (validate->parsed()) return run_validate_all(fixture_dir, data_dir, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;  // unreachable: require_subcommand(1)
}
