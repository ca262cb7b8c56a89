#include "monodesc/poly.hpp"

#include <utility>

namespace monodesc {

Poly Poly::operator-() const {
    std::vector<GaussianRational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t j = 0; j < a.c_.size(); ++j)
        for (size_t k = 0; k < b.c_.size(); ++k) v[j + k] += a.c_[j] * b.c_[k];
    return Poly(std::move(v));
}

Poly operator*(const GaussianRational& s, const Poly& p) {
    std::vector<GaussianRational> v;
    v.reserve(p.c_.size());
    for (const auto& c : p.c_) v.push_back(s * c);
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussianRational> v;
    v.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) v.push_back(GaussianRational(static_cast<long>(k)) * c_[k]);
    return Poly(std::move(v));
}

Poly Poly::conj() const {
    std::vector<GaussianRational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.conj());
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    GaussianRational inv = lead().inverse();
    return inv * *this;
}

Poly Poly::shifted(const GaussianRational& a) const {
    if (c_.size() <= 1 || a.is_zero()) return *this;
    std::vector<GaussianRational> b = c_;
    int d = degree();
    for (int j = 0; j < d; ++j)
        for (int k = d - 1; k >= j; --k) b[static_cast<size_t>(k)] += a * b[static_cast<size_t>(k) + 1];
    return Poly(std::move(b));
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k].to_complex();
    return acc;
}

void Poly::divrem(const Poly& f, const Poly& g, Poly& q, Poly& r) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    r = f;
    if (f.degree() < g.degree()) {
        q = Poly();
        return;
    }
    std::vector<GaussianRational> qc(static_cast<size_t>(f.degree() - g.degree()) + 1);
    GaussianRational ginv = g.lead().inverse();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int k = r.degree() - g.degree();
        GaussianRational c = r.lead() * ginv;
        qc[static_cast<size_t>(k)] = c;
        // r -= c * z^k * g, written out to keep it cheap
        std::vector<GaussianRational> rc = r.c_;
        for (int j = 0; j <= g.degree(); ++j)
            rc[static_cast<size_t>(j + k)] -= c * g.c_[static_cast<size_t>(j)];
        r = Poly(std::move(rc));
    }
    q = Poly(std::move(qc));
}

namespace {

// Scale to Gaussian-integer coefficients and strip the integer content.
Poly cleared(const Poly& p) {
    mpz_class l(1);
    for (const auto& c : p.coeffs()) {
        l = lcm(l, c.re().get_den());
        l = lcm(l, c.im().get_den());
    }
    std::vector<GaussianRational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.emplace_back(mpq_class(c.re() * l), mpq_class(c.im() * l));
    mpz_class g(0);
    for (const auto& c : v) {
        g = gcd(g, c.re().get_num());
        g = gcd(g, c.im().get_num());
    }
    if (g > 1) {
        mpq_class inv(mpz_class(1), g);
        inv.canonicalize();
        GaussianRational s(inv, mpq_class(0));
        for (auto& c : v) c *= s;
    }
    return Poly(std::move(v));
}

// Pseudo-remainder: repeatedly scale by lead(b) and cancel the top term, so
// every intermediate stays Gaussian-integral.
Poly pseudo_rem(Poly a, const Poly& b) {
    const GaussianRational& d = b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int k = a.degree() - b.degree();
        GaussianRational top = a.lead();
        std::vector<GaussianRational> rc(a.coeffs().size());
        for (int j = 0; j < a.degree(); ++j) rc[static_cast<size_t>(j)] = d * a.coeff(j);
        for (int j = 0; j < b.degree(); ++j)
            rc[static_cast<size_t>(j + k)] -= top * b.coeff(j);
        // leading terms cancel by construction
        rc.pop_back();
        a = Poly(std::move(rc));
    }
    return a;
}

}  // namespace

Poly Poly::gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g.is_zero() ? Poly() : g.monic();
    if (g.is_zero()) return f.monic();
    Poly a = cleared(f);
    Poly b = cleared(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = cleared(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    Poly q, r;
    divrem(f * g, gcd(f, g), q, r);
    return q.monic();
}

namespace {

// Power token: "z", "z^3".
std::string zpow(int k) {
    if (k == 1) return "z";
    return "z^" + std::to_string(k);
}

// One printed term; constant coefficients avoid parentheses only when the
// reparse is unambiguous.
std::string term_str(const GaussianRational& c, int k) {
    if (k == 0) return c.str();
    bool real = c.is_real();
    bool imag = sgn(c.re()) == 0 && !c.is_zero();
    if (real) {
        if (c.re() == 1) return zpow(k);
        if (c.re() == -1) return "-" + zpow(k);
        return c.re().get_str() + "*" + zpow(k);
    }
    if (imag) {
        if (c.im() == 1) return "i*" + zpow(k);
        if (c.im() == -1) return "-i*" + zpow(k);
        return c.im().get_str() + "*i*" + zpow(k);
    }
    return "(" + c.str() + ")*" + zpow(k);
}

}  // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        GaussianRational c = coeff(k);
        if (c.is_zero()) continue;
        std::string t = term_str(c, k);
        if (out.empty()) {
            out = t;
        } else if (t.front() == '-') {
            out += t;
        } else {
            out += "+" + t;
        }
    }
    return out;
}

}  // namespace monodesc
