#include "delpezzo/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace delpezzo {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rational& coeff, int degree) {
    if (degree < 0) throw std::domain_error("Poly::monomial: negative degree");
    std::vector<Rational> cs(degree + 1);
    cs[degree] = coeff;
    return Poly(std::move(cs));
}

Poly Poly::linear_from_root(const Rational& root) {
    return Poly{-root, Rational(1)};
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

Poly Poly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
}

Poly Poly::pow(unsigned e) const {
    Poly r{Rational(1)};
    Poly base = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly::divrem: division by zero polynomial");
    Poly rem = *this;
    int dd = divisor.degree();
    if (rem.degree() < dd) return {Poly(), rem};
    std::vector<Rational> q(rem.degree() - dd + 1);
    Rational lead_inv = divisor.leading().inv();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rational f = rem.leading() * lead_inv;
        q[k] = f;
        rem = rem - divisor.shift_up(k) * f;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::divexact(const Poly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) throw std::domain_error("Poly::divexact: division is not exact");
    return q;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
    return *this * leading().inv();
}

Poly Poly::scale_var(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    Rational p(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * p;
        p *= s;
    }
    return Poly(std::move(r));
}

Poly Poly::reverse_into(int k) const {
    if (k < degree()) throw std::domain_error("Poly::reverse_into: k below degree");
    std::vector<Rational> r(k + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[k - i] = c_[i];
    return Poly(std::move(r));
}

Poly Poly::shift_up(int k) const {
    if (is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational a = coeff(k);
        if (a.is_zero()) continue;
        if (!first) out << (a.sign() > 0 ? " + " : " - ");
        else if (a.sign() < 0) out << "-";
        Rational mag = a.abs();
        bool unit = (mag == Rational(1));
        if (k == 0 || !unit) out << mag.str();
        if (k > 0) {
            if (!unit) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divrem(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

}  // namespace delpezzo
