#pragma once

#include <gmpxx.h>

#include <string>

#include "cohomjump/errors.hpp"

namespace cohomjump {

using Rational = mpq_class;

// mpq_class does not canonicalize on construction; every Rational built from
// raw numerator/denominator must pass through here.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string render(const Rational& r);

// Element of Q(i). Both parts are kept in lowest terms with positive
// denominators; all constructors canonicalize.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(Rational re, Rational im = Rational(0))
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

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
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        if (sgn(n) == 0) throw InvalidInputError("division by zero in Q(i)");
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

    GaussianRational inverse() const {
        GaussianRational one(1);
        return one /= *this;
    }

private:
    Rational re_, im_;
};

// Rendering: "p/q" for real values, "r/s*i" for imaginary, "a+b*i" for mixed,
// "0" for zero. Unit imaginary parts render as "i" / "-i".
std::string render(const GaussianRational& g);

// True when the rendering contains an interior '+' or '-', i.e. callers that
// embed the value in a product must parenthesize it.
bool needs_parens(const GaussianRational& g);

} // namespace cohomjump
