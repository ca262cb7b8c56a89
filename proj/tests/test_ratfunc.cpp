#include "doctest.h"
#include "monodesc/ratfunc.hpp"
#include "oracles.hpp"

using monodesc::CBall;
using monodesc::DivisionByZero;
using monodesc::GaussianRational;
using monodesc::PoleEvaluation;
using monodesc::Poly;
using monodesc::RatFunc;
using oracle::make_poly;

TEST_SUITE_BEGIN("ratfunc");

TEST_CASE("canonical form: cancellation and monic denominator") {
    Poly z = Poly::z();
    // (z^2 - 1)/(z - 1) reduces to z + 1
    CHECK(RatFunc(z * z - Poly::one(), z - Poly::one()) == RatFunc(z + Poly::one()));
    // denominator is normalized monic, numerator absorbs the scale
    RatFunc f(Poly::one(), make_poly({0, 2}));  // 1/(2z)
    CHECK(f.den() == make_poly({0, 1}));
    CHECK(f.num() == Poly(GaussianRational::ratio(1, 2)));
    CHECK(f.den().lead().is_one());
    // zero is 0/1
    RatFunc zero(Poly(), make_poly({3, 1}));
    CHECK(zero.is_zero());
    CHECK(zero.den() == Poly::one());
    CHECK_THROWS_AS(RatFunc(Poly::one(), Poly()), DivisionByZero);
}

TEST_CASE("field axioms on random rational functions") {
    auto rng = oracle::make_rng(301);
    for (int t = 0; t < 40; ++t) {
        RatFunc f = oracle::rand_ratfunc(rng);
        RatFunc g = oracle::rand_ratfunc(rng);
        RatFunc h = oracle::rand_ratfunc(rng);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == RatFunc());
        if (!g.is_zero()) CHECK(f / g * g == f);
    }
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(), DivisionByZero);
}

TEST_CASE("derivative golden and calculus identities") {
    Poly z = Poly::z();
    RatFunc f(z, z - Poly::one());  // z/(z-1)
    RatFunc expected(-Poly::one(), (z - Poly::one()) * (z - Poly::one()));
    CHECK(f.derivative() == expected);
    CHECK(RatFunc(5).derivative() == RatFunc());
    auto rng = oracle::make_rng(302);
    for (int t = 0; t < 40; ++t) {
        RatFunc a = oracle::rand_ratfunc(rng);
        RatFunc b = oracle::rand_ratfunc(rng);
        CHECK((a + b).derivative() == a.derivative() + b.derivative());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        if (!b.is_zero()) {
            RatFunc q = a / b;
            CHECK(q.derivative() == (a.derivative() * b - a * b.derivative()) / (b * b));
        }
    }
}

TEST_CASE("coefficient conjugation") {
    Poly z = Poly::z();
    RatFunc f(z, z - Poly(GaussianRational::i()));  // z/(z-i)
    CHECK(f.conj() == RatFunc(z, z + Poly(GaussianRational::i())));
    auto rng = oracle::make_rng(303);
    for (int t = 0; t < 30; ++t) {
        RatFunc a = oracle::rand_ratfunc(rng);
        RatFunc b = oracle::rand_ratfunc(rng);
        CHECK(a.conj().conj() == a);
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.derivative().conj() == a.conj().derivative());
    }
}

TEST_CASE("powers") {
    auto rng = oracle::make_rng(304);
    for (int t = 0; t < 15; ++t) {
        RatFunc f = oracle::rand_ratfunc(rng);
        CHECK(f.pow(2) == f * f);
        CHECK(f.pow(0) == RatFunc(1));
        if (!f.is_zero()) CHECK(f.pow(-1) == RatFunc(1) / f);
    }
}

TEST_CASE("constants") {
    CHECK(RatFunc(5).is_constant());
    CHECK(RatFunc(5).constant_value() == GaussianRational(5));
    CHECK(!RatFunc::z().is_constant());
    RatFunc c(make_poly({2, 2}), make_poly({1, 1}));  // (2z+2)/(z+1) = 2
    CHECK(c.is_constant());
    CHECK(c.constant_value() == GaussianRational(2));
}

TEST_CASE("evaluation: exact, floating, and at a pole") {
    Poly z = Poly::z();
    RatFunc f(Poly::one(), z);  // 1/z
    CHECK(f.eval(GaussianRational(2)) == GaussianRational::ratio(1, 2));
    CHECK_THROWS_AS(f.eval(GaussianRational(0)), PoleEvaluation);
    auto rng = oracle::make_rng(305);
    for (int t = 0; t < 20; ++t) {
        RatFunc g = oracle::rand_ratfunc(rng);
        GaussianRational x = oracle::rand_center(rng);  // never a pooled pole
        std::complex<double> exact = g.eval(x).to_complex();
        std::complex<double> approx = g.eval(x.to_complex());
        CHECK(std::abs(exact - approx) < 1e-9 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("ball evaluation brackets the true value") {
    Poly z = Poly::z();
    RatFunc f(z, z * z + Poly::one());  // z/(z^2+1)
    CBall x(std::complex<double>(0.5, 0.25), 0.0);
    CBall y = f.eval(x);
    std::complex<double> exact = f.eval(std::complex<double>(0.5, 0.25));
    CHECK(std::abs(y.v - exact) <= y.err + 1e-15);
    CHECK(y.err < 1e-12);
    // a ball straddling the pole of 1/z is rejected
    RatFunc inv(Poly::one(), z);
    CHECK_THROWS_AS(inv.eval(CBall(std::complex<double>(1e-20, 0.0), 1.0)), PoleEvaluation);
}

TEST_SUITE_END();
