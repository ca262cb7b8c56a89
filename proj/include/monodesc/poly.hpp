#pragma once

#include <complex>
#include <string>
#include <vector>

#include "monodesc/gaussian.hpp"

namespace monodesc {

// Univariate polynomial over Q(i). Coefficients ascending by power, no
// trailing zeros, so equality is structural and degree() is honest.
class Poly {
public:
    Poly() = default;  // zero polynomial
    explicit Poly(const GaussianRational& c) : c_{c} { trim(); }
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly z() { return Poly(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1)}); }
    static Poly one() { return Poly(GaussianRational(1)); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational(0);
        return c_[static_cast<size_t>(k)];
    }
    const GaussianRational& lead() const { return c_.back(); }  // requires nonzero
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussianRational& s, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    Poly conj() const;
    Poly monic() const;  // requires nonzero

    // p(z + a), exact Taylor shift.
    Poly shifted(const GaussianRational& a) const;

    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    // Field long division: f = q*g + r with deg r < deg g; g nonzero.
    static void divrem(const Poly& f, const Poly& g, Poly& q, Poly& r);

    // Monic gcd via a primitive (fraction-free) polynomial remainder
    // sequence on denominator-cleared coefficients; no coefficient blowup.
    static Poly gcd(const Poly& f, const Poly& g);
    static Poly lcm(const Poly& f, const Poly& g);

    std::string str() const;

private:
    std::vector<GaussianRational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

}  // namespace monodesc
