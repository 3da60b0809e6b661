#include "delpezzo/classification.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace delpezzo {

namespace {

const char* kTwo = "exactly two";
const char* kThree = "three or more";

/* the three degree-1 types with two isomorphism classes each */
bool needs_disambiguator(const std::string& label) {
    return label == "E8" || label == "E7+A1" || label == "E6+A2";
}

ClassificationRecord row(const std::string& sing, int k2,
                         std::optional<ActionCount> count, bool finite) {
    ClassificationRecord r;
    r.sing = DynkinType::parse(sing);
    r.k_squared = k2;
    r.action_count_p_ge_5 = count;
    r.aut_finite = finite;
    return r;
}

std::vector<ClassificationRecord> build_table() {
    std::vector<ClassificationRecord> t;
    const std::string bound_form = "2^a*3^b, 1<=a+b<=7";

    /* degree 1: Y_D(1) of the three ambiguous types (the diagonal
     * models), stored in their "exactly two singular members" guise */
    for (const char* s : {"E8", "E7+A1", "E6+A2"}) {
        auto r = row(s, 1, ActionCount::One, false);
        r.unique_given_sing = false;
        r.k1_disambiguator = kTwo;
        t.push_back(std::move(r));
    }
    {
        auto r = row("2D4", 1, ActionCount::One, false);
        r.unique_given_sing = false;  // a family parametrized by J
        r.k1_disambiguator = kTwo;
        r.depends_on_j = true;
        t.push_back(std::move(r));
    }
    for (const char* s : {"D8", "D5+A3", "D6+2A1", "A8", "A7+A1", "2A4",
                          "A5+A2+A1", "2A3+2A1", "4A2"}) {
        auto r = row(s, 1, ActionCount::Zero, true);
        r.k1_disambiguator = kThree;
        r.aut_order_form = bound_form;
        t.push_back(std::move(r));
    }

    /* degree 2 */
    for (const char* s : {"E7", "D6+A1", "A5+A2", "D4+3A1", "2A3+A1"})
        t.push_back(row(s, 2, ActionCount::One, false));
    {
        auto r = row("A7", 2, ActionCount::Zero, true);
        r.aut_order_form = "Z/4 + Z/2";
        t.push_back(std::move(r));
    }

    /* degree 3 */
    t.push_back(row("3A2", 3, ActionCount::PPlusOne, false));
    for (const char* s : {"A5+A1", "E6"}) {
        auto r = row(s, 3, ActionCount::One, false);
        r.via_catch_all = true;
        t.push_back(std::move(r));
    }

    /* degree 4 */
    t.push_back(row("A3+2A1", 4, ActionCount::PPlusOne, false));
    {
        auto r = row("D5", 4, ActionCount::One, false);
        r.via_catch_all = true;
        t.push_back(std::move(r));
    }

    /* degrees 5 and 6 */
    t.push_back(row("A4", 5, ActionCount::One, false));
    t.push_back(row("A2+A1", 6, ActionCount::PPlusOne, false));

    /* the quadric cone, carried as an explicitly excluded row */
    {
        auto r = row("A1", 8, std::nullopt, false);
        r.excluded_from_theorem_A = true;
        t.push_back(std::move(r));
    }
    return t;
}

const std::map<std::string, int>& expected_types() {
    static const std::map<std::string, int> m = {
        {"E8", 1},       {"E7+A1", 1},    {"E6+A2", 1},  {"2D4", 1},
        {"D8", 1},       {"D5+A3", 1},    {"D6+2A1", 1}, {"A8", 1},
        {"A7+A1", 1},    {"2A4", 1},      {"A5+A2+A1", 1},
        {"2A3+2A1", 1},  {"4A2", 1},      {"E7", 2},     {"D6+A1", 2},
        {"A7", 2},       {"A5+A2", 2},    {"D4+3A1", 2}, {"2A3+A1", 2},
        {"3A2", 3},      {"A5+A1", 3},    {"E6", 3},     {"A3+2A1", 4},
        {"D5", 4},       {"A4", 5},       {"A2+A1", 6}};
    return m;
}

bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long factorial(long n) {
    long r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

long repeated_type_bound(const std::vector<FibreType>& types) {
    std::map<std::pair<int, int>, long> mult;
    for (const auto& t : types) ++mult[{static_cast<int>(t.kind), t.n}];
    long prod = 1;
    for (const auto& [key, n] : mult) prod *= factorial(n);
    return prod;
}

std::vector<std::pair<int, int>> type_multiset(const std::vector<FibreType>& types) {
    std::vector<std::pair<int, int>> keys;
    for (const auto& t : types) keys.emplace_back(static_cast<int>(t.kind), t.n);
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

std::string action_count_str(ActionCount c) {
    switch (c) {
        case ActionCount::Zero: return "0";
        case ActionCount::One: return "1";
        case ActionCount::PPlusOne: return "p+1";
    }
    throw std::logic_error("bad ActionCount");
}

ActionCount action_count_parse(const std::string& s) {
    if (s == "0") return ActionCount::Zero;
    if (s == "1") return ActionCount::One;
    if (s == "p+1") return ActionCount::PPlusOne;
    throw std::invalid_argument("bad action count '" + s + "'");
}

const std::vector<ClassificationRecord>& classification_table() {
    static const std::vector<ClassificationRecord> t = build_table();
    return t;
}

ClassificationRecord classify(const std::vector<ClassificationRecord>& table,
                              const DynkinType& sing,
                              const std::optional<std::string>& k1_disambiguator) {
    if (k1_disambiguator && *k1_disambiguator != kTwo && *k1_disambiguator != kThree)
        throw std::invalid_argument("disambiguator must be \"exactly two\" or \"" +
                                    std::string(kThree) + "\"");

    const ClassificationRecord* found = nullptr;
    for (const auto& r : table)
        if (r.sing == sing) found = &r;
    if (!found)
        throw std::invalid_argument("unknown singularity type '" + sing.str() + "'");

    if (needs_disambiguator(sing.str())) {
        if (!k1_disambiguator)
            throw std::invalid_argument(
                "type " + sing.str() +
                " has two isomorphism classes; pass the number of singular "
                "members of |-K| (\"exactly two\" or \"three or more\")");
        if (*k1_disambiguator == kTwo) return *found;
        ClassificationRecord r = *found;
        r.k1_disambiguator = kThree;
        r.action_count_p_ge_5 = ActionCount::Zero;
        r.aut_finite = true;
        r.aut_order_form = "2^a*3^b, 1<=a+b<=7";
        return r;
    }

    if (k1_disambiguator) {
        if (!found->k1_disambiguator)
            throw std::invalid_argument("type " + sing.str() +
                                        " takes no singular-member count");
        if (*k1_disambiguator != *found->k1_disambiguator)
            throw std::invalid_argument("type " + sing.str() + " has " +
                                        *found->k1_disambiguator +
                                        " singular members in |-K|");
    }
    return *found;
}

ClassificationRecord classify(const DynkinType& sing,
                              const std::optional<std::string>& k1_disambiguator) {
    return classify(classification_table(), sing, k1_disambiguator);
}

TableReport validate_table(const std::vector<ClassificationRecord>& table) {
    TableReport rep;
    auto flag = [&](const std::string& rec, const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back({rec, msg});
    };

    std::map<std::string, int> seen;
    int regular = 0;
    for (const auto& r : table) {
        const std::string label = r.sing.str();
        if (++seen[label] > 1) flag(label, "duplicate record");
        if (!r.excluded_from_theorem_A) ++regular;

        if (r.sing.total_rank() + r.k_squared != 9)
            flag(label, "rank " + std::to_string(r.sing.total_rank()) +
                            " does not match K^2 = " + std::to_string(r.k_squared));
        if (r.k_squared == 7) flag(label, "degree 7 cannot occur");
        if (r.k_squared < 1 || r.k_squared > 8)
            flag(label, "degree out of range");
        if (r.k_squared == 8 && !r.excluded_from_theorem_A)
            flag(label, "degree 8 is the quadric cone and must be excluded");
        if (r.excluded_from_theorem_A) {
            if (r.k_squared != 8)
                flag(label, "only the quadric cone row may be excluded");
            continue;
        }

        if (!r.action_count_p_ge_5) {
            flag(label, "missing action count");
            continue;
        }
        const ActionCount count = *r.action_count_p_ge_5;

        /* finiteness criterion */
        const bool finite_expected =
            label == "A7" ||
            (r.k_squared == 1 && r.k1_disambiguator &&
             *r.k1_disambiguator == kThree);
        if (r.aut_finite != finite_expected)
            flag(label, "Aut finiteness disagrees with the criterion");
        if ((count == ActionCount::Zero) != finite_expected)
            flag(label, "action count disagrees with Aut finiteness");
        if (r.aut_finite && !r.aut_order_form)
            flag(label, "finite Aut needs an order form");

        /* per-degree action counts */
        switch (r.k_squared) {
            case 6:
                if (count != ActionCount::PPlusOne)
                    flag(label, "degree 6 must have p+1 actions");
                break;
            case 5:
                if (count != ActionCount::One)
                    flag(label, "degree 5 must have a unique action");
                break;
            case 4:
            case 3:
                if (count == ActionCount::Zero)
                    flag(label, "degree 3 or 4 admits an action");
                break;
            case 2:
                if (label == "A7") {
                    if (count != ActionCount::Zero)
                        flag(label, "A7 admits no action of prime order >= 5");
                } else if (count != ActionCount::One) {
                    flag(label, "degree 2 other than A7 has a unique action");
                }
                break;
            case 1:
                if (!r.k1_disambiguator) {
                    flag(label, "degree 1 needs the singular-member count");
                } else if (*r.k1_disambiguator == kTwo) {
                    if (count != ActionCount::One)
                        flag(label, "exactly two singular members means one action");
                } else if (count != ActionCount::Zero) {
                    flag(label, "three or more singular members means no action");
                }
                break;
            default:
                break;
        }

        if (r.depends_on_j && (r.k_squared != 1 || r.unique_given_sing))
            flag(label, "the J-family flag belongs to the degree-1 2D4 family");
    }

    if (regular != 26)
        flag("", "expected 26 records, got " + std::to_string(regular));

    /* the (sing, K^2) multiset must be exactly the known list */
    for (const auto& [label, k2] : expected_types()) {
        bool ok = false;
        for (const auto& r : table)
            if (!r.excluded_from_theorem_A && r.sing.str() == label &&
                r.k_squared == k2)
                ok = true;
        if (!ok) flag(label, "missing from the table");
    }
    for (const auto& r : table)
        if (!r.excluded_from_theorem_A && !expected_types().count(r.sing.str()))
            flag(r.sing.str(), "not one of the 26 types");

    return rep;
}

TableReport validate_table() { return validate_table(classification_table()); }

const std::vector<ExtremalFibrationRecord>& extremal_fibration_table() {
    static const std::vector<ExtremalFibrationRecord> t = [] {
        auto ft = [](const std::string& s) { return FibreType::parse(s); };
        std::vector<ExtremalFibrationRecord> v;
        v.push_back({{ft("II"), ft("II*")}, 1, 2, 1});
        v.push_back({{ft("III"), ft("III*")}, 2, 2, 1});
        v.push_back({{ft("IV"), ft("IV*")}, 3, 2, 1});
        v.push_back({{ft("I0*"), ft("I0*")}, 4, 2, 2});
        v.push_back({{ft("I1"), ft("I1"), ft("I5"), ft("I5")}, 5, 2, 4});
        return v;
    }();
    return t;
}

std::vector<std::string> validate_extremal_record(const ExtremalFibrationRecord& f) {
    std::vector<std::string> out;
    int euler = 0;
    for (const auto& t : f.fibre_types) euler += t.euler();
    if (euler != 12)
        out.push_back("fibre Euler numbers sum to " + std::to_string(euler) +
                      ", not 12");
    if (f.mw_order < 1) out.push_back("MW order must be positive");
    if (f.aut_f0_order != 2)
        out.push_back("Aut(F)_0 has order 2 for these fibrations");
    const long prod = repeated_type_bound(f.fibre_types);
    if (f.base_group_bound < 1 || prod % f.base_group_bound != 0)
        out.push_back("base bound " + std::to_string(f.base_group_bound) +
                      " does not divide " + std::to_string(prod));
    return out;
}

std::set<long> aut_order_bound(const ExtremalFibrationRecord& f) {
    if (f.fibre_types.size() < 3)
        throw std::invalid_argument(
            "the order bound needs at least three singular fibres");
    auto issues = validate_extremal_record(f);
    if (!issues.empty()) throw std::invalid_argument(issues.front());

    const long prod = repeated_type_bound(f.fibre_types);
    std::set<long> out;
    for (long h = 1; h <= prod; ++h) {
        if (prod % h != 0) continue;
        const long order = 2L * f.mw_order * h;

        long rest = order;
        int a = 0, b = 0;
        while (rest % 2 == 0) rest /= 2, ++a;
        if (rest == 5 && a >= 1 && a <= 3) {
            out.insert(order);
            continue;
        }
        while (rest % 3 == 0) rest /= 3, ++b;
        if (rest == 1 && a + b >= 1 && a + b <= 7) {
            out.insert(order);
            continue;
        }
        throw std::domain_error("order " + std::to_string(order) +
                                " escapes the 2^a*5 / 2^a*3^b dichotomy");
    }
    return out;
}

bool admits_prime_action(const ExtremalFibrationRecord& f, long p, bool base_trivial) {
    if (p < 5 || !is_small_prime(p))
        throw std::invalid_argument("p must be a prime >= 5");
    if (base_trivial) return f.mw_order % p == 0;
    return f.fibre_types.size() <= 2;
}

std::vector<DynkinType> reduction_chain(const DynkinType& sing) {
    static const std::vector<std::vector<std::string>> chains = {
        {"E8", "E7", "E6", "D5", "A4"},
        {"E7+A1", "D6+A1", "A5+A1"},
        {"E6+A2", "A5+A2"}};
    for (const auto& chain : chains) {
        bool hit = false;
        for (const auto& label : chain)
            if (DynkinType::parse(label) == sing) hit = true;
        if (!hit) continue;
        std::vector<DynkinType> out;
        for (const auto& label : chain) out.push_back(DynkinType::parse(label));
        return out;
    }
    throw std::invalid_argument("type " + sing.str() +
                                " is not on a degeneration chain");
}

std::optional<int> torsion_hint(const FibreConfiguration& conf,
                                const std::vector<ExtremalFibrationRecord>& table) {
    if (!conf.extremal) return std::nullopt;
    std::vector<FibreType> expanded;
    for (const auto& fd : conf.fibres)
        for (int i = 0; i < fd.degree; ++i) expanded.push_back(fd.type);
    const auto key = type_multiset(expanded);
    for (const auto& rec : table)
        if (type_multiset(rec.fibre_types) == key) return rec.mw_order;
    return std::nullopt;
}

std::optional<int> torsion_hint(const FibreConfiguration& conf) {
    return torsion_hint(conf, extremal_fibration_table());
}

}  // namespace delpezzo
