#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace canring {

// Exact rational number. Invariants: always in lowest terms, denominator
// positive, zero is 0/1. Arithmetic never rounds; division by zero throws.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const mpz_class& n) : num_(n), den_(1) {}
    Rational(const mpz_class& n, const mpz_class& d) : num_(n), den_(d) { normalize(); }
    Rational(long n, long d) : num_(n), den_(d) { normalize(); }

    // Accepts "p" or "p/q" with optional leading minus, nothing else.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    // Largest integer <= value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        return q;
    }
    // Smallest integer >= value.
    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        return q;
    }
    // value - floor(value), in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

    // Exact comparison by cross-multiplication (denominators positive).
    int cmp(const Rational& o) const {
        mpz_class lhs = num_ * o.den_;
        mpz_class rhs = o.num_ * den_;
        return ::cmp(lhs, rhs);
    }

    Rational pow(long e) const {
        if (e < 0) {
            if (num_ == 0) throw std::domain_error("Rational: zero to negative power");
            return Rational(1) / pow(-e);
        }
        Rational r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // "p" when the value is an integer, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return num_.get_str();
        return num_.get_str() + "/" + den_.get_str();
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (sgn(den_) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    mpz_class num_;
    mpz_class den_;
};

inline Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    auto check_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(text)) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        return Rational(mpz_class(text));
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!check_int(a) || !check_int(b))
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    return Rational(mpz_class(a), mpz_class(b));
}

}  // namespace canring
