#pragma once

#include <string>
#include <vector>

#include "delpezzo/poly.hpp"

namespace delpezzo {

/* A closed point of the projective v-line over Q: a monic irreducible
 * polynomial (finite place, degree = number of conjugate geometric
 * points) or the point at infinity. */
struct Place {
    bool at_infinity = false;
    Poly poly;  // monic, degree >= 1; irreducible for factorizer output

    static Place infinity() {
        Place p;
        p.at_infinity = true;
        return p;
    }
    static Place finite(Poly f);

    int degree() const { return at_infinity ? 1 : poly.degree(); }
    bool operator==(const Place& o) const {
        return at_infinity == o.at_infinity && poly == o.poly;
    }
    std::string str() const;
};

struct PlaceFactor {
    Place place;
    int multiplicity = 0;
};

struct PlaceFactorization {
    Rational unit;  // leading coefficient of the input
    std::vector<PlaceFactor> factors;

    /* multiplicity of a finite place in this factorization (0 if absent) */
    int multiplicity_of(const Place& p) const;
};

/* Factor a nonzero f in Q[v] into monic irreducibles, exactly.
 * unit * prod(place.poly ^ multiplicity) == f. Factors are ordered by
 * (degree, coefficient list), so output is deterministic. */
PlaceFactorization factor_into_places(const Poly& f);

/* Multiplicity of a finite place in nonzero f. Rejects the infinite
 * place: its valuation lives on the other chart. */
int valuation(const Poly& f, const Place& place);

/* Exact irreducibility test over Q for deg f >= 1. */
bool is_irreducible(const Poly& f);

/* Squarefree decomposition of a nonconstant monic f: list of
 * (monic squarefree part, multiplicity), pairwise coprime. */
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

}  // namespace delpezzo
