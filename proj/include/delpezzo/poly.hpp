#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/* Univariate polynomial over Q in one variable (written v throughout).
 * Coefficients are stored in ascending degree with no trailing zeros;
 * the zero polynomial has an empty coefficient vector and degree -1. */
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }
    explicit Poly(const Rational& constant) : c_{constant} { trim(); }

    static Poly monomial(const Rational& coeff, int degree);
    /* v - root, handy for building linear places */
    static Poly linear_from_root(const Rational& root);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const;
    Rational coeff(int k) const;  // zero outside stored range
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;

    Poly pow(unsigned e) const;

    /* Euclidean division: returns (quotient, remainder) with
     * deg(remainder) < deg(divisor). Throws on zero divisor. */
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;
    /* Exact division; throws if the remainder is nonzero. */
    Poly divexact(const Poly& divisor) const;

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    Poly monic() const;  // throws on zero polynomial

    /* f(s * v) */
    Poly scale_var(const Rational& s) const;
    /* u^k * f(1/u), valid when k >= deg f; used by the chart swap at infinity */
    Poly reverse_into(int k) const;
    /* multiply by v^k */
    Poly shift_up(int k) const;

    std::string str(const std::string& var = "v") const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0

}  // namespace delpezzo
