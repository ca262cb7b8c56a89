#pragma once

#include <complex>
#include <string>

#include "monodesc/cball.hpp"
#include "monodesc/matrix.hpp"
#include "monodesc/poly.hpp"

namespace monodesc {

// Rational function over Q(i) in canonical form: denominator monic,
// gcd(num, den) = 1, zero represented as 0/1. Equality is structural.
class RatFunc {
public:
    RatFunc() : den_(Poly::one()) {}
    RatFunc(long v) : num_(Poly(GaussianRational(v))), den_(Poly::one()) {}  // NOLINT
    explicit RatFunc(const GaussianRational& c) : num_(Poly(c)), den_(Poly::one()) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);  // canonicalizes; throws DivisionByZero on den = 0

    static RatFunc z() { return RatFunc(Poly::z()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussianRational constant_value() const;

    RatFunc operator-() const { return raw(-num_, den_); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(long e) const;

    // Quotient rule, canonicalized.
    RatFunc derivative() const { return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_); }

    // Entrywise complex conjugation of the coefficients.
    RatFunc conj() const { return raw(num_.conj(), den_.conj()); }

    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;
    CBall eval(const CBall& x) const;

    std::string str() const;

private:
    Poly num_, den_;
    static RatFunc raw(Poly n, Poly d) {
        RatFunc f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

using RFMat = Mat<RatFunc>;
using QiMat = Mat<GaussianRational>;

RFMat derivative(const RFMat& a);
RFMat conj(const RFMat& a);
QiMat conj(const QiMat& a);
RFMat embed(const QiMat& a);
CMat to_cmat(const QiMat& a);
CMat eval(const RFMat& a, const std::complex<double>& x);

inline RFMat rfmat_identity(int n) { return RFMat::identity(n, RatFunc(1)); }
inline QiMat qimat_identity(int n) { return QiMat::identity(n, GaussianRational(1)); }

}  // namespace monodesc
