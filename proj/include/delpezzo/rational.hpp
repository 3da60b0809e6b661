#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace delpezzo {

/* Exact rational number. Canonical form is maintained at all times:
 * gcd(num, den) = 1 and den > 0. Backed by GMP, so magnitudes are
 * limited by memory only. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    /* Accepts "n" or "n/d" with optional leading sign, base 10. */
    static Rational parse(const std::string& s) {
        auto bad = [&]() -> std::domain_error {
            return std::domain_error("Rational: cannot parse '" + s + "'");
        };
        if (s.empty()) throw bad();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s));
            mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
            if (d == 0) throw std::domain_error("Rational: zero denominator");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw bad();
        }
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(unsigned long e) const {
        mpq_class r(1), base(v_);
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return Rational(r);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

}  // namespace delpezzo
