#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/places.hpp"

namespace delpezzo {

enum class KodairaClass { Smooth, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct FibreType {
    KodairaClass kind = KodairaClass::Smooth;
    int n = 0;  // the index of In / In* (n >= 1)

    bool operator==(const FibreType&) const = default;

    int euler() const;
    int components() const;
    std::string str() const;
    static FibreType parse(const std::string& s);
};

/* y^2 z = x^3 + A(v) x z^2 + B(v) z^3 over the v-line.
 * Non-degenerate by construction: 4A^3 + 27B^2 != 0. */
class WeierstrassModel {
public:
    static WeierstrassModel make(Poly A, Poly B);

    const Poly& A() const { return a_; }
    const Poly& B() const { return b_; }

    /* -16 (4A^3 + 27B^2) */
    Poly discriminant() const;

    /* J = 4A^3 / (4A^3 + 27B^2) as a reduced fraction with monic
     * denominator; the classical j is 1728 J. */
    std::pair<Poly, Poly> j_invariant() const;

private:
    WeierstrassModel(Poly A, Poly B) : a_(std::move(A)), b_(std::move(B)) {}
    Poly a_, b_;
};

struct LocalOrders {
    std::optional<int> a, b;  // nullopt: the coefficient vanishes identically
    int d = 0;                // ord of the discriminant
};

LocalOrders local_orders(const WeierstrassModel& m, const Place& place);

bool is_minimal_at(const WeierstrassModel& m, const Place& place);

/* Divide A by carrier^4 and B by carrier^6 while both valuations allow
 * it. Finite places only. */
WeierstrassModel minimality_reduce(const WeierstrassModel& m, const Place& place);

/* Chart swap v = 1/u: (u^8 A(1/u), u^12 B(1/u)), then reduced to a
 * minimal model at u = 0. Requires deg A <= 8 and deg B <= 12. */
WeierstrassModel transform_at_infinity(const WeierstrassModel& m);

/* Kodaira type from (ord A, ord B, ord Delta) at a finite place of a
 * model that is minimal there; throws on non-minimal input. */
FibreType kodaira_type_at(const WeierstrassModel& m, const Place& place);

struct FibreDescriptor {
    Place place;  // place.at_infinity marks the fibre over v = infinity
    int degree = 1;
    LocalOrders orders;  // at infinity: orders on the u-chart after reduction
    FibreType type;
};

struct FibreConfiguration {
    std::vector<FibreDescriptor> fibres;  // singular fibres only
    int euler_total = 0;                  // sum of degree * euler == 12
    int mw_rank = 0;                      // 8 - sum of degree * (components - 1)
    bool extremal = false;
};

/* Full singular-fibre analysis. Reduces to a minimal model at every
 * finite place first; throws if the result is not a rational elliptic
 * surface (degree bounds or Euler sum violated). */
FibreConfiguration fibre_configuration(const WeierstrassModel& m);

}  // namespace delpezzo
