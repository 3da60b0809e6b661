#include "delpezzo/places.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

/* Factorization over Q, big-prime style:
 *   1. monicize and split off the squarefree parts (repeated gcd),
 *   2. for each squarefree part, pick one prime p larger than twice a
 *      Landau-Mignotte coefficient bound with good reduction,
 *   3. factor mod p (distinct-degree, then Cantor-Zassenhaus splitting),
 *   4. recombine modular factors by subsets of increasing size; the
 *      symmetric lift of lc * subset-product recovers every true factor
 *      exactly because p/2 exceeds the coefficient bound.
 * Everything is exact; the only randomness (splitting polynomials in
 * step 3) uses a fixed seed, so runs are reproducible. */

namespace delpezzo {

namespace {

using Z = mpz_class;
using ZP = std::vector<Z>;  // ascending coefficients, trimmed

void zp_trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZP& a) { return static_cast<int>(a.size()) - 1; }

Z zmod(const Z& a, const Z& p) {
    Z r = a % p;
    if (r < 0) r += p;
    return r;
}

ZP zp_reduce(ZP a, const Z& p) {
    for (auto& x : a) x = zmod(x, p);
    zp_trim(a);
    return a;
}

ZP zp_sub(const ZP& a, const ZP& b, const Z& p) {
    ZP r(std::max(a.size(), b.size()), Z(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
        r[i] = zmod(r[i], p);
    }
    zp_trim(r);
    return r;
}

ZP zp_mul(const ZP& a, const ZP& b, const Z& p) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, Z(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& x : r) x = zmod(x, p);
    zp_trim(r);
    return r;
}

Z zp_inv(const Z& a, const Z& p) {
    Z r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw std::logic_error("zp_inv: not invertible");
    return r;
}

ZP zp_monic(const ZP& a, const Z& p) {
    if (a.empty()) return a;
    Z inv = zp_inv(a.back(), p);
    ZP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = zmod(a[i] * inv, p);
    return r;
}

/* remainder (and optionally quotient) of a by b mod p; b nonzero */
ZP zp_divrem(const ZP& a, const ZP& b, const Z& p, ZP* quotient = nullptr) {
    ZP rem = zp_reduce(a, p);
    int db = zp_deg(b);
    if (db < 0) throw std::logic_error("zp_divrem: zero divisor");
    if (quotient) quotient->assign(std::max(0, zp_deg(rem) - db + 1), Z(0));
    Z lead_inv = zp_inv(b.back(), p);
    while (zp_deg(rem) >= db) {
        int k = zp_deg(rem) - db;
        Z f = zmod(rem.back() * lead_inv, p);
        if (quotient) (*quotient)[k] = f;
        for (int i = 0; i <= db; ++i) rem[k + i] = zmod(rem[k + i] - f * b[i], p);
        zp_trim(rem);
    }
    if (quotient) zp_trim(*quotient);
    return rem;
}

ZP zp_gcd(ZP a, ZP b, const Z& p) {
    a = zp_reduce(std::move(a), p);
    b = zp_reduce(std::move(b), p);
    while (!b.empty()) {
        ZP r = zp_divrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : zp_monic(a, p);
}

ZP zp_powmod(ZP base, Z e, const ZP& m, const Z& p) {
    ZP r{Z(1)};
    base = zp_divrem(base, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = zp_divrem(zp_mul(r, base, p), m, p);
        e >>= 1;
        if (e > 0) base = zp_divrem(zp_mul(base, base, p), m, p);
    }
    return r;
}

ZP zp_derivative(const ZP& a, const Z& p) {
    if (zp_deg(a) < 1) return {};
    ZP r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = zmod(a[i] * Z(static_cast<long>(i)), p);
    zp_trim(r);
    return r;
}

Z z_random_below(const Z& p, std::mt19937_64& rng) {
    size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
    Z r(0);
    for (size_t i = 0; i < words; ++i) {
        r <<= 64;
        r += Z(static_cast<unsigned long>(rng()));
    }
    return zmod(r, p);
}

/* Cantor-Zassenhaus equal-degree splitting: f is monic squarefree mod p,
 * all irreducible factors of degree d. */
void zp_equal_degree(const ZP& f, int d, const Z& p, std::mt19937_64& rng,
                     std::vector<ZP>& out) {
    if (zp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    Z pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), d);
    Z e = (pd - 1) / 2;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ZP a(zp_deg(f));
        for (auto& c : a) c = z_random_below(p, rng);
        zp_trim(a);
        if (zp_deg(a) < 1) continue;
        ZP b = zp_powmod(a, e, f, p);
        if (b.empty())
            b = {zmod(Z(-1), p)};
        else
            b[0] = zmod(b[0] - 1, p);
        zp_trim(b);
        ZP g = zp_gcd(f, b, p);
        if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(f)) {
            ZP q;
            zp_divrem(f, g, p, &q);
            zp_equal_degree(g, d, p, rng, out);
            zp_equal_degree(q, d, p, rng, out);
            return;
        }
    }
    throw std::runtime_error("factor: equal-degree splitting did not converge");
}

/* Distinct-degree then equal-degree factorization of monic squarefree f. */
std::vector<ZP> zp_factor_squarefree(ZP f, const Z& p, std::mt19937_64& rng) {
    std::vector<ZP> out;
    ZP x{Z(0), Z(1)};
    ZP h = x;
    int d = 0;
    while (zp_deg(f) >= 2 * (d + 1)) {
        ++d;
        h = zp_powmod(h, p, f, p);  // x^(p^d) mod f
        ZP g = zp_gcd(f, zp_sub(h, x, p), p);
        if (zp_deg(g) > 0) {
            zp_equal_degree(g, d, p, rng, out);
            ZP q;
            zp_divrem(f, g, p, &q);
            f = q;
            h = zp_divrem(h, f, p);
        }
    }
    if (zp_deg(f) > 0) out.push_back(f);
    return out;
}

/* Q[v] -> primitive Z[v] with positive leading coefficient. */
ZP to_primitive(const Poly& f) {
    Z denlcm(1);
    for (const auto& c : f.coeffs())
        mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.den().get_mpz_t());
    ZP r(f.coeffs().size());
    Z content(0);
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] = f.coeffs()[i].num() * (denlcm / f.coeffs()[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), r[i].get_mpz_t());
    }
    if (content == 0) return {};
    for (auto& c : r) c /= content;
    if (r.back() < 0)
        for (auto& c : r) c = -c;
    return r;
}

Poly to_monic_q(const ZP& f) {
    std::vector<Rational> cs(f.size());
    for (size_t i = 0; i < f.size(); ++i) cs[i] = Rational(f[i], f.back());
    return Poly(std::move(cs));
}

/* coefficient bound: any factor h of primitive G (with lc adjusted to
 * lc(G)) has |coefficients| <= lc(G) * 2^deg(G) * ||G||_2 */
Z mignotte_bound(const ZP& g) {
    Z norm2(0);
    for (const auto& c : g) norm2 += c * c;
    Z root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Z b = g.back() * root;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), zp_deg(g));
    return b;
}

Z symmetric(const Z& a, const Z& p) {
    Z r = zmod(a, p);
    if (2 * r > p) r -= p;
    return r;
}

/* Exact division test in Z[v] for primitive operands; returns quotient. */
bool z_divides(const ZP& divisor, const ZP& dividend, ZP* quotient) {
    // both primitive, so Gauss reduces this to exactness over Q
    Poly q = to_monic_q(dividend);
    Poly d = to_monic_q(divisor);
    auto [quo, rem] = q.divrem(d);
    if (!rem.is_zero()) return false;
    if (quotient) {
        Poly scaled = quo * Rational(dividend.back(), divisor.back());
        *quotient = to_primitive(scaled);
        if (quotient->empty()) return false;
    }
    return true;
}

/* Factor a monic squarefree nonconstant g over Q into monic irreducibles. */
std::vector<Poly> factor_squarefree_q(const Poly& g) {
    if (g.degree() == 1) return {g};
    ZP G = to_primitive(g);

    Z p = 2 * mignotte_bound(G) + 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        // good reduction: degree preserved (p > lc always holds here) and
        // squarefree mod p
        ZP gm = zp_reduce(G, p);
        if (zp_deg(gm) != zp_deg(G)) continue;
        ZP d = zp_gcd(gm, zp_derivative(gm, p), p);
        if (zp_deg(d) == 0) break;
    }

    std::mt19937_64 rng(0x5eedD37aULL);
    std::vector<ZP> modular = zp_factor_squarefree(zp_monic(zp_reduce(G, p), p), p, rng);
    std::sort(modular.begin(), modular.end());

    std::vector<Poly> out;
    ZP H = G;
    for (size_t take = 1; !modular.empty() && 2 * take <= modular.size();) {
        bool found = false;
        std::vector<size_t> idx(take);
        for (size_t i = 0; i < take; ++i) idx[i] = i;
        for (;;) {
            ZP cand{zmod(H.back(), p)};
            for (size_t i : idx) cand = zp_mul(cand, modular[i], p);
            for (auto& c : cand) c = symmetric(c, p);
            zp_trim(cand);
            ZP cpp;
            Z content(0);
            for (const auto& c : cand) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
            if (content != 0) {
                cpp = cand;
                for (auto& c : cpp) c /= content;
                if (cpp.back() < 0)
                    for (auto& c : cpp) c = -c;
            }
            ZP quotient;
            if (!cpp.empty() && zp_deg(cpp) > 0 && z_divides(cpp, H, &quotient)) {
                out.push_back(to_monic_q(cpp));
                H = quotient;
                std::vector<ZP> rest;
                for (size_t i = 0, j = 0; i < modular.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) { ++j; continue; }
                    rest.push_back(modular[i]);
                }
                modular = std::move(rest);
                found = true;
                break;
            }
            // next combination of the current size
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[pos] == modular.size() - take + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++take;
    }
    if (zp_deg(H) > 0) out.push_back(to_monic_q(H));
    return out;
}

bool place_factor_less(const PlaceFactor& a, const PlaceFactor& b) {
    if (a.place.poly.degree() != b.place.poly.degree())
        return a.place.poly.degree() < b.place.poly.degree();
    const auto& ca = a.place.poly.coeffs();
    const auto& cb = b.place.poly.coeffs();
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return false;
}

}  // namespace

Place Place::finite(Poly f) {
    if (f.degree() < 1) throw std::invalid_argument("Place: finite place needs degree >= 1");
    if (f.leading() != Rational(1)) throw std::invalid_argument("Place: carrier must be monic");
    Place p;
    p.poly = std::move(f);
    return p;
}

std::string Place::str() const {
    return at_infinity ? "v=infinity" : poly.str();
}

int PlaceFactorization::multiplicity_of(const Place& p) const {
    for (const auto& f : factors)
        if (f.place == p) return f.multiplicity;
    return 0;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("squarefree_decomposition: degree >= 1 required");
    std::vector<std::pair<Poly, int>> out;
    Poly cur = f.monic();
    Poly g = gcd(cur, cur.derivative());
    Poly s = cur.divexact(g);  // radical
    int i = 1;
    while (s.degree() > 0) {
        Poly y = gcd(s, g);
        Poly part = s.divexact(y);
        if (part.degree() > 0) out.emplace_back(part, i);
        s = y;
        if (!g.is_zero() && g.degree() >= 0) g = g.divexact(y);
        ++i;
    }
    return out;
}

PlaceFactorization factor_into_places(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_into_places: zero polynomial");
    PlaceFactorization r;
    r.unit = f.leading();
    if (f.degree() == 0) return r;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& irr : factor_squarefree_q(part)) {
            PlaceFactor pf;
            pf.place = Place::finite(irr);
            pf.multiplicity = mult;
            r.factors.push_back(std::move(pf));
        }
    }
    std::sort(r.factors.begin(), r.factors.end(), place_factor_less);
    return r;
}

int valuation(const Poly& f, const Place& place) {
    if (f.is_zero()) throw std::invalid_argument("valuation: zero polynomial");
    if (place.at_infinity)
        throw std::invalid_argument("valuation: infinite place lives on the other chart");
    int v = 0;
    Poly cur = f;
    for (;;) {
        auto [q, rem] = cur.divrem(place.poly);
        if (!rem.is_zero()) return v;
        ++v;
        cur = q;
        if (cur.is_zero()) throw std::logic_error("valuation: unreachable");
    }
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree >= 1 required");
    auto fac = factor_into_places(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace delpezzo
