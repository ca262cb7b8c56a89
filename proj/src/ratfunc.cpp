#include "monodesc/ratfunc.hpp"

namespace monodesc {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divrem(num, g, q, r);
        num = std::move(q);
        Poly::divrem(den, g, q, r);
        den = std::move(q);
    }
    GaussianRational inv = den.lead().inverse();
    num_ = inv * num;
    den_ = inv * den;
}

GaussianRational RatFunc::constant_value() const {
    if (!is_constant()) throw ContractViolation("constant_value of non-constant entry");
    return num_.coeff(0);  // den is monic constant = 1
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw DivisionByZero("negative power of zero");
        return (RatFunc(1) / *this).pow(-e);
    }
    RatFunc acc(1);
    RatFunc base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

GaussianRational RatFunc::eval(const GaussianRational& x) const {
    GaussianRational d = den_.eval(x);
    if (d.is_zero()) throw PoleEvaluation("evaluation at a pole");
    return num_.eval(x) / d;
}

std::complex<double> RatFunc::eval(const std::complex<double>& x) const {
    std::complex<double> d = den_.eval(x);
    if (d == std::complex<double>(0.0, 0.0)) throw PoleEvaluation("evaluation at a pole");
    return num_.eval(x) / d;
}

CBall RatFunc::eval(const CBall& x) const {
    CBall n(0.0), d(0.0);
    for (int k = num_.degree(); k >= 0; --k) n = n * x + CBall(num_.coeff(k).to_complex());
    for (int k = den_.degree(); k >= 0; --k) d = d * x + CBall(den_.coeff(k).to_complex());
    if (!definitely_nonzero(d)) throw PoleEvaluation("evaluation at (or too near) a pole");
    return n / d;
}

std::string RatFunc::str() const {
    if (den_ == Poly::one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RFMat derivative(const RFMat& a) {
    return a.map([](const RatFunc& f) { return f.derivative(); });
}

RFMat conj(const RFMat& a) {
    return a.map([](const RatFunc& f) { return f.conj(); });
}

QiMat conj(const QiMat& a) {
    return a.map([](const GaussianRational& c) { return c.conj(); });
}

RFMat embed(const QiMat& a) {
    return a.map([](const GaussianRational& c) { return RatFunc(c); });
}

CMat to_cmat(const QiMat& a) {
    return a.map([](const GaussianRational& c) { return c.to_complex(); });
}

CMat eval(const RFMat& a, const std::complex<double>& x) {
    return a.map([&](const RatFunc& f) { return f.eval(x); });
}

}  // namespace monodesc
