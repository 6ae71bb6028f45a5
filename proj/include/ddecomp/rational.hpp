#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "ddecomp/error.hpp"

namespace ddecomp {

// Arbitrary-precision rational, permanently reduced, denominator > 0.
// Thin wrapper over GMP's mpq that enforces canonical form at every
// construction site.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw ArithmeticError("rational with zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    const mpz_class numerator() const { return q_.get_num(); }
    const mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ArithmeticError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inv() const {
        if (is_zero()) throw ArithmeticError("inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    Rational pow(unsigned e) const {
        Rational base = *this, acc = 1;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Largest integer <= value.
    mpz_class floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return f;
    }
    mpz_class ceil() const {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return c;
    }

    double to_double() const { return q_.get_d(); }

    // "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Parses an optionally signed decimal literal ("-0.5", "3", "0.4753")
    // into the exact rational it denotes.
    static Rational from_decimal(std::string_view text);

    // Parses "n", "-n/d", or a decimal literal. Used by the report
    // round-trip path.
    static Rational from_string(std::string_view text);

  private:
    mpq_class q_;
};

inline Rational Rational::from_decimal(std::string_view text) {
    std::size_t i = 0, n = text.size();
    if (n == 0) throw ParseError("empty decimal literal");
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    std::size_t frac_digits = 0;
    bool any = false, seen_dot = false;
    for (; i < n; ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot) throw ParseError("two decimal points in literal");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
            any = true;
        } else {
            throw ParseError(std::string("bad character '") + c + "' in decimal literal");
        }
    }
    if (!any) throw ParseError("decimal literal has no digits");
    mpz_class num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    return Rational(num, den);
}

inline Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_decimal(text);
    Rational num = from_decimal(text.substr(0, slash));
    Rational den = from_decimal(text.substr(slash + 1));
    if (!num.is_integer() || !den.is_integer())
        throw ParseError("fraction parts must be integers");
    return num / den;
}

// Element of Q(i): exact complex number with rational real and imaginary
// parts. The coefficient field for every polynomial in the library.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(int n) : re_(n) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw ArithmeticError("complex division by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inv() const {
        if (is_zero()) throw ArithmeticError("inverse of zero");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational pow(unsigned e) const {
        GaussianRational base = *this, acc = 1;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // "3", "-1/2", "i", "2+i", "1-2/3i", ...
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string s;
        if (!re_.is_zero()) s = re_.str();
        if (im_ == Rational(1)) s += s.empty() ? "i" : "+i";
        else if (im_ == Rational(-1)) s += "-i";
        else {
            std::string t = im_.str();
            if (!s.empty() && t[0] != '-') s += "+";
            s += t + "i";
        }
        return s;
    }

  private:
    Rational re_{0}, im_{0};
};

}  // namespace ddecomp
