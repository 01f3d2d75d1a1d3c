#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <ostream>
#include <string>

#include "saddleform/errors.hpp"

namespace saddleform {

using BigInt = boost::multiprecision::cpp_int;

/// Rational number in lowest terms with a positive denominator.
/// Zero is always stored as 0/1, so structural equality is value equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw DivisionByZero();
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw DivisionByZero();
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    /// Nearest double (correctly rounded via the multiprecision rational).
    double to_double() const;

    /// "a" when the denominator is 1, otherwise "a/b".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline double Rational::to_double() const {
    boost::multiprecision::cpp_rational q(num_, den_);
    return q.convert_to<double>();
}

inline std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

/// Element of Q(i): re + im*i with exact rational parts.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long long n) : re_(n) {}
    Gaussian(Rational re) : re_(std::move(re)) {}
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    Gaussian conj() const { return Gaussian(re_, -im_); }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    Gaussian& operator+=(const Gaussian& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        if (o.is_zero()) throw DivisionByZero();
        Rational n2 = o.re_ * o.re_ + o.im_ * o.im_;
        Gaussian c = o.conj();
        *this *= c;
        re_ /= n2;
        im_ /= n2;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {re_.to_double(), im_.to_double()};
    }

    /// "a/b + c/d*i" with zero parts omitted; plain "i"/"-i" for unit
    /// imaginary parts; "0" for zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (!re_.is_zero()) s = re_.str();
        if (!im_.is_zero()) {
            if (im_.is_negative()) {
                s += s.empty() ? "-" : " - ";
                Rational m = -im_;
                if (!m.is_one()) s += m.str() + "*";
            } else {
                if (!s.empty()) s += " + ";
                if (!im_.is_one()) s += im_.str() + "*";
            }
            s += "i";
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

private:
    Rational re_;
    Rational im_;
};

} // namespace saddleform
