#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/weierstrass.hpp"

namespace delpezzo {

/* Order-p diagonal action on P^2 x (v-line), stored as the exponents of
 * a primitive p-th root of unity on (x, y, z; v). Never evaluated
 * numerically: every check below is exponent arithmetic mod p, with the
 * root of unity kept as a formal unit. */
struct DiagonalWeights {
    long p = 5;
    long wx = 0, wy = 0, wz = 0, wv = 0;  // reduced to [0, p)

    /* Validates p prime and >= 5, reduces the weights. */
    static DiagonalWeights make(long p, long wx, long wy, long wz, long wv);
};

/* One monomial of y^2 z - x^3 - A(v) x z^2 - B(v) z^3 together with its
 * weight class ex*wx + ey*wy + ez*wz + ev*wv mod p. */
struct MonomialWeight {
    int ex = 0, ey = 0, ez = 0, ev = 0;
    long weight = 0;
    std::string str() const;  // e.g. "v^5 z^3"
};

struct InvarianceReport {
    bool invariant = false;
    long weight_class = 0;  // the common class; first monomial's class on failure
    std::vector<MonomialWeight> monomials;
    std::vector<std::size_t> offending;  // indices disagreeing with monomials[0]
};

/* The defining equation is invariant iff every monomial lies in one
 * weight class mod p. */
InvarianceReport check_invariance(const WeierstrassModel& m, const DiagonalWeights& w);

struct BaseAction {
    long order = 1;  // p when wv != 0, else 1
    bool whole_base_fixed = true;
    std::vector<std::string> fixed_points;  // {"0", "inf"} or {"all"}
};

BaseAction base_action(const DiagonalWeights& w);

/* A section of the fibration as a projective parametrization
 * [x(v), y(v), z(v)], with coefficients either rational or in a number
 * field Q(a) given by a monic irreducible minimal polynomial. Each
 * coordinate is stored per v-degree as a polynomial in a. */
class SectionCurve {
public:
    static SectionCurve rational(const Poly& x, const Poly& y, const Poly& z);
    static SectionCurve algebraic(std::vector<Poly> x, std::vector<Poly> y,
                                  std::vector<Poly> z, const Poly& min_poly);

    /* coordinate i in {0,1,2} = {x,y,z}; entry j is the v^j coefficient
     * as a polynomial in a (constant when the section is rational). */
    const std::vector<Poly>& coord(int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::optional<Poly>& min_poly() const { return min_poly_; }

    std::string str() const;

private:
    SectionCurve() = default;
    std::array<std::vector<Poly>, 3> coords_;
    std::optional<Poly> min_poly_;
};

struct SectionVerdict {
    bool stable = false;
    std::string detail;
};

/* Checks projectively that acting on the section matches reparametrizing
 * the base: (zeta^wx x(v), zeta^wy y(v), zeta^wz z(v)) is proportional
 * to (x(zeta^wv v), y(zeta^wv v), z(zeta^wv v)), with zeta a formal p-th
 * root of unity (computed in Q[t]/(1 + t + ... + t^(p-1)), tensored with
 * the section's coefficient field). Throws invalid_argument if the
 * section does not satisfy the model equation. */
SectionVerdict check_section_stable(const SectionCurve& s, const WeierstrassModel& m,
                                    const DiagonalWeights& w);

/* Weights (a_i, b_i) of an order-n action at the junction points
 * P_0..P_{r+1} of a chain of (-2)-curves. */
struct ChainWeights {
    long n = 2;
    std::vector<std::pair<long, long>> pairs;  // reduced mod n, length >= 2

    static ChainWeights make(long n, std::vector<std::pair<long, long>> pairs);
};

struct ChainViolation {
    enum class Kind { link, sum };
    Kind kind = Kind::link;
    std::size_t index = 0;  // link: left endpoint of the bad edge; sum: the bad pair
};

struct ChainVerdict {
    bool ok = false;
    std::optional<ChainViolation> violation;  // first violation in scan order
    std::string detail;
};

/* Accepts iff b_i + a_{i+1} = 0 mod n for every consecutive pair and
 * a_i + b_i is constant mod n. Scan order: for each i >= 1, the link
 * congruence into pair i is checked before pair i's weight sum. */
ChainVerdict verify_chain(const ChainWeights& c);

/* The unique chain extending (a0, b0): a_{i+1} = -b_i and
 * b_{i+1} = (a0 + b0) - a_{i+1} mod n. verify_chain accepts the output. */
ChainWeights propagate_chain(long a0, long b0, long n, std::size_t length);

}  // namespace delpezzo
