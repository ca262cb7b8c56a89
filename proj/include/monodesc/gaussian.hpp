#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "monodesc/errors.hpp"

namespace monodesc {

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
// Both parts are kept canonical (reduced, positive denominator), so equality
// is structural.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose
    GaussianRational(const mpz_class& v) : re_(v), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    // p/q as an exact rational; q must be nonzero.
    static GaussianRational ratio(long p, long q) {
        if (q == 0) throw DivisionByZero("ratio with zero denominator");
        mpq_class v(p, q);
        v.canonicalize();
        return GaussianRational(v, mpq_class(0));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // re^2 + im^2, the field norm down to Q.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        mpq_class n = norm();
        return GaussianRational(re_ / n, -im_ / n);
    }

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
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(long e) const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // Canonical text form: "0", "1", "-i", "3/2", "1-2*i", "1/2+i", ...
    std::string str() const;

private:
    mpq_class re_, im_;
};

inline bool is_zero(const GaussianRational& a) { return a.is_zero(); }

}  // namespace monodesc
