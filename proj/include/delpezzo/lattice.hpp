#pragma once

#include <string>
#include <vector>

namespace delpezzo {

/* Class c0*e0 + c1*e1 + ... + cn*en in the hyperbolic lattice Z^{1,n}
 * (e0 = line class of P^2, e_i = i-th exceptional class). The pairing
 * is diag(+1, -1, ..., -1). */
struct LatticeClass {
    std::vector<long> c;  // size n+1

    LatticeClass() = default;
    explicit LatticeClass(std::vector<long> coeffs) : c(std::move(coeffs)) {}

    static LatticeClass zero(int n);
    static LatticeClass basis(int n, int i);  // e_i, 0 <= i <= n

    int n() const { return static_cast<int>(c.size()) - 1; }

    bool operator==(const LatticeClass& o) const { return c == o.c; }
    bool operator!=(const LatticeClass& o) const { return !(*this == o); }
    bool operator<(const LatticeClass& o) const { return c < o.c; }

    LatticeClass operator+(const LatticeClass& o) const;
    LatticeClass operator-(const LatticeClass& o) const;
    LatticeClass operator-() const;
    LatticeClass operator*(long k) const;

    std::string str() const;  // e.g. "e0 - e1 - e2", "2e0 - e1"
};

/* u0*v0 - sum u_i*v_i; throws on rank mismatch. */
long pairing(const LatticeClass& u, const LatticeClass& v);

/* K_n = -3e0 + e1 + ... + en */
LatticeClass canonical_class(int n);

long self_intersection(const LatticeClass& v);

/* All v with v.v = -1 and v.K = -1, for 1 <= n <= 8. Complete: the
 * coefficient ranges are certified by Cauchy-Schwarz before the search.
 * Sorted lexicographically by coefficient vector. */
std::vector<LatticeClass> enumerate_exceptional_classes(int n);

/* All v with v.v = -2 and v.K = 0, same contract as above. */
std::vector<LatticeClass> enumerate_roots(int n);

struct DynkinComponent {
    char series = 'A';  // 'A', 'D' or 'E'
    int rank = 1;
    bool operator==(const DynkinComponent&) const = default;
};

/* Multiset of ADE components, kept in display order: E before D before
 * A, rank descending. */
struct DynkinType {
    std::vector<DynkinComponent> components;

    static DynkinType parse(const std::string& s);  // e.g. "2A3+A1", "E8", "0"

    int total_rank() const;
    bool empty() const { return components.empty(); }
    std::string str() const;  // "0" when empty

    bool operator==(const DynkinType& o) const { return components == o.components; }
    bool operator!=(const DynkinType& o) const { return !(*this == o); }
};

/* Recognize the configuration spanned by the given (-2)-classes: edge
 * iff pairing 1. Requires pairwise distinct roots with v.v = -2,
 * v.K = 0 and pairwise pairings in {0, 1}; throws invalid_argument
 * otherwise, and domain_error when a component is not an ADE diagram
 * (cycle, valence >= 4, or a branch pattern outside A/D/E). */
DynkinType dynkin_type(const std::vector<LatticeClass>& roots);

}  // namespace delpezzo
