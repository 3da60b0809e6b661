#include "delpezzo/weierstrass.hpp"

#include <stdexcept>

namespace delpezzo {

int FibreType::euler() const {
    switch (kind) {
        case KodairaClass::Smooth: return 0;
        case KodairaClass::In: return n;
        case KodairaClass::II: return 2;
        case KodairaClass::III: return 3;
        case KodairaClass::IV: return 4;
        case KodairaClass::I0star: return 6;
        case KodairaClass::Instar: return n + 6;
        case KodairaClass::IVstar: return 8;
        case KodairaClass::IIIstar: return 9;
        case KodairaClass::IIstar: return 10;
    }
    throw std::logic_error("FibreType::euler");
}

int FibreType::components() const {
    switch (kind) {
        case KodairaClass::Smooth: return 1;
        case KodairaClass::In: return n;
        case KodairaClass::II: return 1;
        case KodairaClass::III: return 2;
        case KodairaClass::IV: return 3;
        case KodairaClass::I0star: return 5;
        case KodairaClass::Instar: return n + 5;
        case KodairaClass::IVstar: return 7;
        case KodairaClass::IIIstar: return 8;
        case KodairaClass::IIstar: return 9;
    }
    throw std::logic_error("FibreType::components");
}

std::string FibreType::str() const {
    switch (kind) {
        case KodairaClass::Smooth: return "I0";
        case KodairaClass::In: return "I" + std::to_string(n);
        case KodairaClass::II: return "II";
        case KodairaClass::III: return "III";
        case KodairaClass::IV: return "IV";
        case KodairaClass::I0star: return "I0*";
        case KodairaClass::Instar: return "I" + std::to_string(n) + "*";
        case KodairaClass::IVstar: return "IV*";
        case KodairaClass::IIIstar: return "III*";
        case KodairaClass::IIstar: return "II*";
    }
    throw std::logic_error("FibreType::str");
}

FibreType FibreType::parse(const std::string& s) {
    if (s == "II") return {KodairaClass::II, 0};
    if (s == "III") return {KodairaClass::III, 0};
    if (s == "IV") return {KodairaClass::IV, 0};
    if (s == "II*") return {KodairaClass::IIstar, 0};
    if (s == "III*") return {KodairaClass::IIIstar, 0};
    if (s == "IV*") return {KodairaClass::IVstar, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            int n = std::stoi(digits);
            if (star) return n == 0 ? FibreType{KodairaClass::I0star, 0}
                                    : FibreType{KodairaClass::Instar, n};
            return n == 0 ? FibreType{KodairaClass::Smooth, 0} : FibreType{KodairaClass::In, n};
        }
    }
    throw std::invalid_argument("FibreType: cannot parse '" + s + "'");
}

WeierstrassModel WeierstrassModel::make(Poly A, Poly B) {
    Poly c = A.pow(3) * Rational(4) + B.pow(2) * Rational(27);
    if (c.is_zero())
        throw std::invalid_argument("WeierstrassModel: 4A^3 + 27B^2 vanishes identically");
    return WeierstrassModel(std::move(A), std::move(B));
}

Poly WeierstrassModel::discriminant() const {
    return (a_.pow(3) * Rational(4) + b_.pow(2) * Rational(27)) * Rational(-16);
}

std::pair<Poly, Poly> WeierstrassModel::j_invariant() const {
    Poly num = a_.pow(3) * Rational(4);
    Poly den = num + b_.pow(2) * Rational(27);
    if (num.is_zero()) return {Poly(), Poly{Rational(1)}};
    Poly g = gcd(num, den);
    num = num.divexact(g);
    den = den.divexact(g);
    Rational scale = den.leading().inv();
    return {num * scale, den * scale};
}

LocalOrders local_orders(const WeierstrassModel& m, const Place& place) {
    if (place.at_infinity)
        throw std::invalid_argument("local_orders: use transform_at_infinity for the infinite place");
    LocalOrders o;
    if (!m.A().is_zero()) o.a = valuation(m.A(), place);
    if (!m.B().is_zero()) o.b = valuation(m.B(), place);
    o.d = valuation(m.discriminant(), place);
    return o;
}

namespace {
bool at_least(const std::optional<int>& v, int k) { return !v || *v >= k; }
bool exactly(const std::optional<int>& v, int k) { return v && *v == k; }
}  // namespace

bool is_minimal_at(const WeierstrassModel& m, const Place& place) {
    LocalOrders o = local_orders(m, place);
    return !(at_least(o.a, 4) && at_least(o.b, 6));
}

WeierstrassModel minimality_reduce(const WeierstrassModel& m, const Place& place) {
    if (place.at_infinity)
        throw std::invalid_argument("minimality_reduce: finite places only");
    Poly A = m.A(), B = m.B();
    Poly p4 = place.poly.pow(4), p6 = place.poly.pow(6);
    for (;;) {
        bool a_ok = A.is_zero() || valuation(A, place) >= 4;
        bool b_ok = B.is_zero() || valuation(B, place) >= 6;
        if (!a_ok || !b_ok) break;
        if (!A.is_zero()) A = A.divexact(p4);
        if (!B.is_zero()) B = B.divexact(p6);
    }
    return WeierstrassModel::make(std::move(A), std::move(B));
}

WeierstrassModel transform_at_infinity(const WeierstrassModel& m) {
    if (m.A().degree() > 8 || m.B().degree() > 12)
        throw std::domain_error(
            "transform_at_infinity: degrees exceed (8, 12); reduce at finite places first");
    Poly A = m.A().is_zero() ? Poly() : m.A().reverse_into(8);
    Poly B = m.B().is_zero() ? Poly() : m.B().reverse_into(12);
    WeierstrassModel t = WeierstrassModel::make(std::move(A), std::move(B));
    return minimality_reduce(t, Place::finite(Poly{Rational(0), Rational(1)}));
}

FibreType kodaira_type_at(const WeierstrassModel& m, const Place& place) {
    LocalOrders o = local_orders(m, place);
    if (at_least(o.a, 4) && at_least(o.b, 6))
        throw std::domain_error("kodaira_type_at: model is not minimal at " + place.str());
    const int d = o.d;
    if (d == 0) return {KodairaClass::Smooth, 0};
    if (exactly(o.a, 0)) return {KodairaClass::In, d};
    // additive reduction from here on
    if (d == 2) return {KodairaClass::II, 0};
    if (d == 3) return {KodairaClass::III, 0};
    if (d == 4) return {KodairaClass::IV, 0};
    if (d == 6) return {KodairaClass::I0star, 0};
    // quadratic twist by the uniformizer drops (ord A, ord B, ord Delta)
    // by (2, 3, 6); multiplicative reduction of the twist detects In*
    if (d >= 7 && exactly(o.a, 2)) return {KodairaClass::Instar, d - 6};
    if (d == 8) return {KodairaClass::IVstar, 0};
    if (d == 9) return {KodairaClass::IIIstar, 0};
    if (d == 10) return {KodairaClass::IIstar, 0};
    throw std::domain_error("kodaira_type_at: inconsistent local data at " + place.str());
}

FibreConfiguration fibre_configuration(const WeierstrassModel& input) {
    WeierstrassModel model = input;
    for (const auto& pf : factor_into_places(model.discriminant()).factors)
        if (!is_minimal_at(model, pf.place)) model = minimality_reduce(model, pf.place);

    if (model.A().degree() > 8 || model.B().degree() > 12)
        throw std::domain_error(
            "fibre_configuration: not a rational elliptic surface "
            "(deg A = " + std::to_string(model.A().degree()) +
            ", deg B = " + std::to_string(model.B().degree()) +
            " after minimality reduction; bounds are 8 and 12)");

    FibreConfiguration cfg;
    int comps_excess = 0;
    for (const auto& pf : factor_into_places(model.discriminant()).factors) {
        FibreDescriptor f;
        f.place = pf.place;
        f.degree = pf.place.degree();
        f.orders = local_orders(model, pf.place);
        f.type = kodaira_type_at(model, pf.place);
        cfg.euler_total += f.degree * f.type.euler();
        comps_excess += f.degree * (f.type.components() - 1);
        cfg.fibres.push_back(std::move(f));
    }

    WeierstrassModel at_inf = transform_at_infinity(model);
    Place u0 = Place::finite(Poly{Rational(0), Rational(1)});
    LocalOrders oinf = local_orders(at_inf, u0);
    if (oinf.d > 0) {
        FibreDescriptor f;
        f.place = Place::infinity();
        f.degree = 1;
        f.orders = oinf;
        f.type = kodaira_type_at(at_inf, u0);
        cfg.euler_total += f.type.euler();
        comps_excess += f.type.components() - 1;
        cfg.fibres.push_back(std::move(f));
    }

    if (cfg.euler_total != 12)
        throw std::domain_error(
            "fibre_configuration: Euler number " + std::to_string(cfg.euler_total) +
            " != 12; the model is not a relatively minimal rational elliptic surface");

    cfg.mw_rank = 8 - comps_excess;
    cfg.extremal = (cfg.mw_rank == 0);
    return cfg;
}

}  // namespace delpezzo
