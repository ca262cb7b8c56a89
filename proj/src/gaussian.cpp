#include "monodesc/gaussian.hpp"

namespace monodesc {

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational acc(1);
    GaussianRational base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

namespace {

// |im| rendered as a factor of i: "i", "3*i", "2/5*i".
std::string imag_factor(const mpq_class& a) {
    if (a == 1) return "i";
    return a.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::str() const {
    bool has_re = sgn(re_) != 0;
    bool has_im = sgn(im_) != 0;
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out += re_.get_str();
    if (has_im) {
        mpq_class a = abs(im_);
        if (!has_re) {
            out += (sgn(im_) < 0 ? "-" : "") + imag_factor(a);
        } else {
            out += (sgn(im_) < 0 ? "-" : "+") + imag_factor(a);
        }
    }
    return out;
}

}  // namespace monodesc
