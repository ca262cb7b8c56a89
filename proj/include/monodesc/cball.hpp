#pragma once

#include <cmath>
#include <complex>

#include "monodesc/errors.hpp"

namespace monodesc {

// Complex double with an error radius. Arithmetic propagates the radius
// first-order-exactly and inflates it for rounding, so the radius is a
// trustworthy (if slightly pessimistic) bound when inputs are bounded.
struct CBall {
    std::complex<double> v{0.0, 0.0};
    double err = 0.0;

    CBall() = default;
    CBall(std::complex<double> value, double e = 0.0) : v(value), err(e) {}
    explicit CBall(double value) : v(value, 0.0) {}

    static double rounding(const std::complex<double>& x) {
        constexpr double eps = 2.220446049250313e-16;
        return 4.0 * eps * std::abs(x);
    }
};

inline CBall operator+(const CBall& a, const CBall& b) {
    std::complex<double> v = a.v + b.v;
    return {v, a.err + b.err + CBall::rounding(v)};
}

inline CBall operator-(const CBall& a, const CBall& b) {
    std::complex<double> v = a.v - b.v;
    return {v, a.err + b.err + CBall::rounding(v)};
}

inline CBall operator*(const CBall& a, const CBall& b) {
    std::complex<double> v = a.v * b.v;
    double e = std::abs(a.v) * b.err + std::abs(b.v) * a.err + a.err * b.err;
    return {v, e + CBall::rounding(v)};
}

inline bool definitely_nonzero(const CBall& a) { return std::abs(a.v) > a.err; }

inline CBall operator/(const CBall& a, const CBall& b) {
    if (!definitely_nonzero(b)) throw DivisionByZero("ball division by possible zero");
    std::complex<double> v = a.v / b.v;
    double lb = std::abs(b.v) - b.err;
    double e = (a.err + std::abs(v) * b.err) / lb;
    return {v, e + CBall::rounding(v)};
}

}  // namespace monodesc
