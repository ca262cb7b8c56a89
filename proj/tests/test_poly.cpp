#include "doctest.h"
#include "monodesc/poly.hpp"
#include "oracles.hpp"

using monodesc::GaussianRational;
using monodesc::Poly;
using oracle::make_poly;

TEST_SUITE_BEGIN("poly");

TEST_CASE("degree and trailing-zero trimming") {
    CHECK(Poly().degree() == -1);
    CHECK(Poly().is_zero());
    CHECK(make_poly({0}).is_zero());
    CHECK(make_poly({1, 0, 0}).degree() == 0);
    CHECK(make_poly({1, 0, 0}) == make_poly({1}));
    CHECK(Poly::z().degree() == 1);
    CHECK(Poly::z().coeff(1) == GaussianRational(1));
    CHECK(make_poly({7}).coeff(5) == GaussianRational(0));
}

TEST_CASE("ring goldens") {
    Poly z = Poly::z();
    CHECK((z + make_poly({1})) * (z - make_poly({1})) == make_poly({-1, 0, 1}));
    CHECK(make_poly({1, 1}) - make_poly({1, 1}) == Poly());
    CHECK(make_poly({0, 0, 3}).derivative() == make_poly({0, 6}));
    CHECK(make_poly({5}).derivative() == Poly());
    CHECK(GaussianRational(2) * make_poly({1, 1}) == make_poly({2, 2}));
}

TEST_CASE("ring axioms and the Leibniz rule on random polynomials") {
    auto rng = oracle::make_rng(201);
    for (int t = 0; t < 60; ++t) {
        Poly p = oracle::rand_poly(rng, 4);
        Poly q = oracle::rand_poly(rng, 4);
        Poly r = oracle::rand_poly(rng, 3);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
        CHECK((p + q).derivative() == p.derivative() + q.derivative());
    }
}

TEST_CASE("Taylor shift agrees with evaluation") {
    auto rng = oracle::make_rng(202);
    for (int t = 0; t < 40; ++t) {
        Poly p = oracle::rand_poly(rng, 4);
        GaussianRational a = oracle::rand_gr(rng);
        GaussianRational x = oracle::rand_gr(rng);
        CHECK(p.shifted(a).eval(x) == p.eval(x + a));
    }
    CHECK(Poly::z().shifted(GaussianRational(1)) == make_poly({1, 1}));
}

TEST_CASE("division with remainder") {
    auto rng = oracle::make_rng(203);
    for (int t = 0; t < 40; ++t) {
        Poly f = oracle::rand_poly(rng, 5);
        Poly g = oracle::rand_poly(rng, 3);
        if (g.is_zero()) g = Poly::one();
        Poly q, r;
        Poly::divrem(f, g, q, r);
        CHECK(f == q * g + r);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("gcd and lcm") {
    Poly z = Poly::z();
    Poly zm1 = z - Poly::one();
    Poly f = (z * z - Poly::one());        // (z-1)(z+1)
    Poly g = zm1 * zm1;                    // (z-1)^2
    CHECK(Poly::gcd(f, g) == zm1);         // monic representative
    CHECK(Poly::gcd(z + Poly::one(), z + make_poly({2})) == Poly::one());
    auto rng = oracle::make_rng(204);
    for (int t = 0; t < 25; ++t) {
        Poly a = oracle::rand_poly(rng, 3);
        Poly b = oracle::rand_poly(rng, 3);
        if (a.is_zero() || b.is_zero()) continue;
        Poly d = Poly::gcd(a, b);
        Poly q, r;
        Poly::divrem(a, d, q, r);
        CHECK(r.is_zero());
        Poly::divrem(b, d, q, r);
        CHECK(r.is_zero());
        Poly m = Poly::lcm(a, b);
        Poly::divrem(m, a, q, r);
        CHECK(r.is_zero());
        Poly::divrem(m, b, q, r);
        CHECK(r.is_zero());
        // lcm * gcd equals a * b up to a scalar: compare after making monic
        CHECK((m * d).monic() == (a * b).monic());
    }
}

TEST_CASE("coefficient conjugation") {
    Poly p(std::vector<GaussianRational>{GaussianRational(1), GaussianRational::i()});
    CHECK(p.conj() == Poly(std::vector<GaussianRational>{GaussianRational(1), -GaussianRational::i()}));
    auto rng = oracle::make_rng(205);
    for (int t = 0; t < 25; ++t) {
        Poly a = oracle::rand_poly(rng, 4);
        Poly b = oracle::rand_poly(rng, 4);
        GaussianRational x = oracle::rand_gr(rng);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().eval(x.conj()) == a.eval(x).conj());
    }
}

TEST_CASE("monic normalization") {
    CHECK(make_poly({2, 2}).monic() == make_poly({1, 1}));
    CHECK(make_poly({0, 0, 4}).monic() == make_poly({0, 0, 1}));
    CHECK(make_poly({2, 2}).monic().lead().is_one());
}

TEST_CASE("exact and floating evaluation agree") {
    auto rng = oracle::make_rng(206);
    for (int t = 0; t < 20; ++t) {
        Poly p = oracle::rand_poly(rng, 4);
        GaussianRational x = oracle::rand_gr(rng);
        std::complex<double> exact = p.eval(x).to_complex();
        std::complex<double> approx = p.eval(x.to_complex());
        CHECK(std::abs(exact - approx) < 1e-10 * (1.0 + std::abs(exact)));
    }
}

TEST_SUITE_END();
