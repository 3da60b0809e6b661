#include "delpezzo/torus_action.hpp"

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <stdexcept>

#include "delpezzo/places.hpp"

namespace delpezzo {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mulmod(long a, long b, long m) {
    return static_cast<long>(static_cast<__int128>(a) * b % m);
}

bool is_prime(long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

/* Polynomial in v whose coefficients live in Q[a]/(min_poly); the
 * entry at index j is the v^j coefficient. No trailing-zero guarantee
 * is needed: helpers tolerate zero entries. */
using NFPoly = std::vector<Poly>;

Poly nf_reduce(const Poly& e, const std::optional<Poly>& m) {
    if (!m || e.degree() < m->degree()) return e;
    return e.divrem(*m).second;
}

NFPoly nf_lift(const Poly& f) {
    NFPoly out;
    out.reserve(static_cast<size_t>(f.degree() + 1));
    for (int j = 0; j <= f.degree(); ++j) out.push_back(Poly(f.coeff(j)));
    return out;
}

NFPoly nfv_mul(const NFPoly& f, const NFPoly& g, const std::optional<Poly>& m) {
    if (f.empty() || g.empty()) return {};
    NFPoly out(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) out[i + j] = out[i + j] + f[i] * g[j];
    for (Poly& c : out) c = nf_reduce(c, m);
    return out;
}

NFPoly nfv_sub(NFPoly f, const NFPoly& g) {
    if (f.size() < g.size()) f.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i) f[i] = f[i] - g[i];
    return f;
}

bool nfv_is_zero(const NFPoly& f) {
    for (const Poly& c : f)
        if (!c.is_zero()) return false;
    return true;
}

/* Element of Q[t]/(1 + t + ... + t^(p-1)) over the coefficient field,
 * stored sparsely by t-exponent in [0, p). It vanishes iff all p
 * buckets hold the same value (the cyclotomic relation identifies the
 * all-ones vector with zero). */
using RElem = std::map<long, Poly>;

void r_add(RElem& acc, long e, const Poly& c) {
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) it->second = it->second + c;
}

bool r_is_zero(const RElem& f, long p, const std::optional<Poly>& m) {
    std::map<long, Poly> nz;
    for (const auto& [e, c] : f) {
        Poly r = nf_reduce(c, m);
        if (!r.is_zero()) nz.emplace(e, std::move(r));
    }
    if (nz.empty()) return true;
    if (static_cast<long>(nz.size()) < p) return false;
    const Poly& first = nz.begin()->second;
    for (const auto& [e, c] : nz)
        if (!(c == first)) return false;
    return true;
}

}  // namespace

DiagonalWeights DiagonalWeights::make(long p, long wx, long wy, long wz, long wv) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("action order must be a prime >= 5, got " + std::to_string(p));
    DiagonalWeights w;
    w.p = p;
    w.wx = mod(wx, p);
    w.wy = mod(wy, p);
    w.wz = mod(wz, p);
    w.wv = mod(wv, p);
    return w;
}

std::string MonomialWeight::str() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* name, int e) {
        if (e == 0) return;
        if (!first) os << ' ';
        first = false;
        os << name;
        if (e > 1) os << '^' << e;
    };
    put("v", ev);
    put("x", ex);
    put("y", ey);
    put("z", ez);
    if (first) os << '1';
    return os.str();
}

InvarianceReport check_invariance(const WeierstrassModel& m, const DiagonalWeights& w) {
    InvarianceReport rep;
    auto weight_of = [&](int ex, int ey, int ez, int ev) {
        long s = mulmod(ex, w.wx, w.p);
        s = mod(s + mulmod(ey, w.wy, w.p), w.p);
        s = mod(s + mulmod(ez, w.wz, w.p), w.p);
        s = mod(s + mulmod(ev, w.wv, w.p), w.p);
        return s;
    };
    auto push = [&](int ex, int ey, int ez, int ev) {
        rep.monomials.push_back({ex, ey, ez, ev, weight_of(ex, ey, ez, ev)});
    };
    push(0, 2, 1, 0);  // y^2 z
    push(3, 0, 0, 0);  // x^3
    for (int k = 0; k <= m.A().degree(); ++k)
        if (!m.A().coeff(k).is_zero()) push(1, 0, 2, k);  // v^k x z^2
    for (int k = 0; k <= m.B().degree(); ++k)
        if (!m.B().coeff(k).is_zero()) push(0, 0, 3, k);  // v^k z^3
    rep.weight_class = rep.monomials.front().weight;
    for (size_t i = 1; i < rep.monomials.size(); ++i)
        if (rep.monomials[i].weight != rep.weight_class) rep.offending.push_back(i);
    rep.invariant = rep.offending.empty();
    return rep;
}

BaseAction base_action(const DiagonalWeights& w) {
    BaseAction b;
    if (w.wv == 0) {
        b.order = 1;
        b.whole_base_fixed = true;
        b.fixed_points = {"all"};
    } else {
        b.order = w.p;
        b.whole_base_fixed = false;
        b.fixed_points = {"0", "inf"};
    }
    return b;
}

SectionCurve SectionCurve::rational(const Poly& x, const Poly& y, const Poly& z) {
    SectionCurve s;
    s.coords_ = {nf_lift(x), nf_lift(y), nf_lift(z)};
    if (x.is_zero() && y.is_zero() && z.is_zero())
        throw std::invalid_argument("section coordinates are identically zero");
    return s;
}

SectionCurve SectionCurve::algebraic(std::vector<Poly> x, std::vector<Poly> y,
                                     std::vector<Poly> z, const Poly& min_poly) {
    if (min_poly.degree() < 1 || !(min_poly.leading() == Rational(1)))
        throw std::invalid_argument("minimal polynomial must be monic of degree >= 1");
    if (!is_irreducible(min_poly))
        throw std::invalid_argument("minimal polynomial is reducible: " + min_poly.str("a"));
    SectionCurve s;
    s.min_poly_ = min_poly;
    s.coords_ = {std::move(x), std::move(y), std::move(z)};
    bool any = false;
    for (auto& coord : s.coords_)
        for (Poly& c : coord) {
            c = nf_reduce(c, s.min_poly_);
            any = any || !c.is_zero();
        }
    if (!any) throw std::invalid_argument("section coordinates are identically zero");
    return s;
}

std::string SectionCurve::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 3; ++i) {
        if (i) os << ", ";
        const NFPoly& coord = coords_[static_cast<size_t>(i)];
        if (nfv_is_zero(coord)) {
            os << '0';
            continue;
        }
        bool first = true;
        for (size_t j = 0; j < coord.size(); ++j) {
            if (coord[j].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            std::string c = coord[j].degree() >= 1 ? "(" + coord[j].str("a") + ")"
                                                   : coord[j].str("a");
            if (j == 0) {
                os << c;
            } else {
                if (c != "1") os << c << '*';
                os << 'v';
                if (j > 1) os << '^' << j;
            }
        }
    }
    os << ']';
    return os.str();
}

SectionVerdict check_section_stable(const SectionCurve& s, const WeierstrassModel& m,
                                    const DiagonalWeights& w) {
    const std::optional<Poly>& mp = s.min_poly();
    const NFPoly& x = s.coord(0);
    const NFPoly& y = s.coord(1);
    const NFPoly& z = s.coord(2);

    // precondition: y^2 z - x^3 - A x z^2 - B z^3 == 0 identically
    NFPoly lhs = nfv_mul(nfv_mul(y, y, mp), z, mp);
    NFPoly x3 = nfv_mul(nfv_mul(x, x, mp), x, mp);
    NFPoly z2 = nfv_mul(z, z, mp);
    NFPoly axz2 = nfv_mul(nf_lift(m.A()), nfv_mul(x, z2, mp), mp);
    NFPoly bz3 = nfv_mul(nf_lift(m.B()), nfv_mul(z, z2, mp), mp);
    NFPoly residue = nfv_sub(nfv_sub(nfv_sub(lhs, x3), axz2), bz3);
    if (!nfv_is_zero(residue))
        throw std::invalid_argument("section " + s.str() + " not on model");

    // cross products of (zeta^wi coord_i(v)) with (coord_j(zeta^wv v))
    const long cw[3] = {w.wx, w.wy, w.wz};
    const char name[4] = "xyz";
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const NFPoly& ci = s.coord(i);
            const NFPoly& cj = s.coord(j);
            std::map<size_t, RElem> cross;  // v-degree -> element
            auto accumulate = [&](const NFPoly& act, long wact, const NFPoly& par, int sign) {
                for (size_t a = 0; a < act.size(); ++a) {
                    if (act[a].is_zero()) continue;
                    for (size_t b = 0; b < par.size(); ++b) {
                        if (par[b].is_zero()) continue;
                        long e = mod(wact + mulmod(static_cast<long>(b), w.wv, w.p), w.p);
                        Poly c = nf_reduce(act[a] * par[b], mp);
                        r_add(cross[a + b], e, sign > 0 ? c : -c);
                    }
                }
            };
            accumulate(ci, cw[i], cj, +1);
            accumulate(cj, cw[j], ci, -1);
            for (const auto& [deg, elem] : cross) {
                if (!r_is_zero(elem, w.p, mp)) {
                    SectionVerdict v;
                    v.stable = false;
                    std::ostringstream os;
                    os << "coordinates " << name[i] << ", " << name[j]
                       << ": proportionality fails at v-degree " << deg;
                    v.detail = os.str();
                    return v;
                }
            }
        }
    }
    return {true, "image matches the reparametrized section projectively"};
}

ChainWeights ChainWeights::make(long n, std::vector<std::pair<long, long>> pairs) {
    if (n < 2) throw std::invalid_argument("chain order must be >= 2");
    if (pairs.size() < 2) throw std::invalid_argument("chain needs at least two junction points");
    for (auto& [a, b] : pairs) {
        a = mod(a, n);
        b = mod(b, n);
    }
    ChainWeights c;
    c.n = n;
    c.pairs = std::move(pairs);
    return c;
}

ChainVerdict verify_chain(const ChainWeights& c) {
    const long sum = mod(c.pairs[0].first + c.pairs[0].second, c.n);
    for (size_t i = 1; i < c.pairs.size(); ++i) {
        if (mod(c.pairs[i - 1].second + c.pairs[i].first, c.n) != 0) {
            std::ostringstream os;
            os << "link congruence fails between positions " << (i - 1) << " and " << i;
            return {false, ChainViolation{ChainViolation::Kind::link, i - 1}, os.str()};
        }
        if (mod(c.pairs[i].first + c.pairs[i].second, c.n) != sum) {
            std::ostringstream os;
            os << "weight sum at position " << i << " differs from position 0";
            return {false, ChainViolation{ChainViolation::Kind::sum, i}, os.str()};
        }
    }
    return {true, std::nullopt, "chain congruences hold"};
}

ChainWeights propagate_chain(long a0, long b0, long n, std::size_t length) {
    if (n < 2) throw std::invalid_argument("chain order must be >= 2");
    if (length < 2) throw std::invalid_argument("chain needs at least two junction points");
    std::vector<std::pair<long, long>> pairs;
    pairs.reserve(length);
    long a = mod(a0, n), b = mod(b0, n);
    const long sum = mod(a + b, n);
    pairs.emplace_back(a, b);
    for (size_t i = 1; i < length; ++i) {
        a = mod(-b, n);
        b = mod(sum - a, n);
        pairs.emplace_back(a, b);
    }
    return ChainWeights::make(n, std::move(pairs));
}

}  // namespace delpezzo
