#pragma once
// Test-side helpers: independent oracles for values the library also
// computes, plus seeded random generators for exact and floating inputs.
// Everything here is implemented from first principles so that agreement
// with the library is evidence, not circularity.

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

#include "monodesc/loops.hpp"
#include "monodesc/matrix.hpp"
#include "monodesc/ratfunc.hpp"

namespace oracle {

namespace md = monodesc;
using cd = std::complex<double>;

// ---------------------------------------------------------------------------
// Matrix exponential by scaling, a short Taylor sum, and repeated squaring.
// With the scaled row-sum norm below 1/4, thirty Taylor terms leave a
// remainder far below double precision.
inline double row_sum_norm(const md::CMat& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

inline md::CMat matrix_exp(md::CMat m) {
    const int n = m.rows();
    int squarings = 0;
    while (row_sum_norm(m) > 0.25 && squarings < 64) {
        m = cd(0.5, 0.0) * m;
        ++squarings;
    }
    md::CMat sum = md::cmat_identity(n);
    md::CMat term = md::cmat_identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = cd(1.0 / k, 0.0) * (term * m);
        sum += term;
    }
    while (squarings-- > 0) sum = sum * sum;
    return sum;
}

// Determinant by Gaussian elimination with partial pivoting (plain doubles).
inline cd det_numeric(md::CMat a) {
    int n = a.rows();
    cd det(1.0, 0.0);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) == 0.0) return {0.0, 0.0};
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            cd f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// Winding number by summing the turning angles of the polygon as seen from p.
// Valid whenever no single segment subtends an angle of pi or more at p,
// which holds for every polygon used in the tests.
inline int winding_by_angle(const md::Loop& loop, cd p) {
    double total = 0.0;
    for (size_t k = 0; k + 1 < loop.vertices.size(); ++k) {
        cd a = loop.vertices[k] - p;
        cd b = loop.vertices[k + 1] - p;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

// ---------------------------------------------------------------------------
// Seeded randomness. Every test passes its own fixed seed so runs are
// reproducible; the helpers never touch global state.
inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline double rand_unit(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
}

// Small Gaussian rational: numerators in [-num_max, num_max], denominators
// in [1, den_max].
inline md::GaussianRational rand_gr(std::mt19937_64& rng, long num_max = 4, long den_max = 3) {
    mpq_class re(rand_int(rng, -num_max, num_max), rand_int(rng, 1, den_max));
    mpq_class im(rand_int(rng, -num_max, num_max), rand_int(rng, 1, den_max));
    re.canonicalize();
    im.canonicalize();
    return md::GaussianRational(re, im);
}

inline md::GaussianRational rand_gr_nonzero(std::mt19937_64& rng, long num_max = 4,
                                            long den_max = 3) {
    for (;;) {
        md::GaussianRational g = rand_gr(rng, num_max, den_max);
        if (!g.is_zero()) return g;
    }
}

inline md::QiMat rand_qimat(std::mt19937_64& rng, int n, long num_max = 4, long den_max = 3) {
    md::QiMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rand_gr(rng, num_max, den_max);
    return m;
}

inline md::QiMat rand_invertible_qimat(std::mt19937_64& rng, int n, long num_max = 3,
                                       long den_max = 2) {
    for (;;) {
        md::QiMat m = rand_qimat(rng, n, num_max, den_max);
        if (!md::exact_det(m, md::GaussianRational(1)).is_zero()) return m;
    }
}

inline md::Poly make_poly(std::initializer_list<long> coeffs) {
    std::vector<md::GaussianRational> v;
    for (long c : coeffs) v.emplace_back(c);
    return md::Poly(std::move(v));
}

inline md::Poly poly_from_roots(const std::vector<md::GaussianRational>& roots) {
    md::Poly p = md::Poly::one();
    for (const md::GaussianRational& r : roots)
        p = p * md::Poly(std::vector<md::GaussianRational>{-r, md::GaussianRational(1)});
    return p;
}

inline md::Poly rand_poly(std::mt19937_64& rng, int max_deg, long num_max = 3, long den_max = 2) {
    int deg = static_cast<int>(rand_int(rng, 0, max_deg));
    std::vector<md::GaussianRational> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = rand_gr(rng, num_max, den_max);
    return md::Poly(std::move(c));
}

// Shared pool of candidate denominator roots; centers are chosen from a
// disjoint list so any pooled system is ordinary at every candidate center.
inline const std::vector<md::GaussianRational>& root_pool() {
    static const std::vector<md::GaussianRational> pool = {
        md::GaussianRational(0),  md::GaussianRational(1),      md::GaussianRational(-1),
        md::GaussianRational::i(), -md::GaussianRational::i(),  md::GaussianRational(2)};
    return pool;
}

inline const std::vector<md::GaussianRational>& center_pool() {
    static const std::vector<md::GaussianRational> pool = {
        md::GaussianRational::ratio(1, 2), md::GaussianRational::ratio(-1, 2),
        md::GaussianRational(3),
        md::GaussianRational(mpq_class(1, 2), mpq_class(1)),
        md::GaussianRational(mpq_class(-3), mpq_class(1, 2))};
    return pool;
}

// Rational function with numerator of degree <= 2 and a denominator built
// from at most `den_factors` distinct pool roots, so its poles are known.
inline md::RatFunc rand_ratfunc(std::mt19937_64& rng, int den_factors = 2) {
    const auto& pool = root_pool();
    int nf = static_cast<int>(rand_int(rng, 0, den_factors));
    std::vector<md::GaussianRational> roots;
    while (static_cast<int>(roots.size()) < nf) {
        md::GaussianRational r = pool[static_cast<size_t>(rand_int(rng, 0, static_cast<long>(pool.size()) - 1))];
        bool dup = false;
        for (const auto& x : roots) dup = dup || x == r;
        if (!dup) roots.push_back(r);
    }
    return md::RatFunc(rand_poly(rng, 2), poly_from_roots(roots));
}

inline md::RFMat rand_rfmat(std::mt19937_64& rng, int n, int den_factors = 2,
                            int zero_percent = 30) {
    md::RFMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rand_int(rng, 0, 99) >= zero_percent) m(i, j) = rand_ratfunc(rng, den_factors);
    return m;
}

// A center from the disjoint pool; every pooled system is ordinary there.
inline md::GaussianRational rand_center(std::mt19937_64& rng) {
    const auto& pool = center_pool();
    return pool[static_cast<size_t>(rand_int(rng, 0, static_cast<long>(pool.size()) - 1))];
}

inline md::CMat rand_cmat(std::mt19937_64& rng, int n, double scale = 1.0) {
    md::CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cd(rand_unit(rng), rand_unit(rng)) * scale;
    return m;
}

// ---------------------------------------------------------------------------
// Exact Taylor coefficients of f(c + t) about t = 0, computed directly by
// shifting numerator and denominator and dividing the two power series.
// Requires the denominator not to vanish at c.
inline std::vector<md::GaussianRational> taylor_coeffs(const md::RatFunc& f,
                                                       const md::GaussianRational& c, int count) {
    md::Poly n = f.num().shifted(c);
    md::Poly d = f.den().shifted(c);
    md::GaussianRational d0 = d.coeff(0);
    std::vector<md::GaussianRational> e(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        md::GaussianRational s = n.coeff(k);
        for (int j = 0; j < k; ++j) s -= e[static_cast<size_t>(j)] * d.coeff(k - j);
        e[static_cast<size_t>(k)] = s / d0;
    }
    return e;
}

inline std::vector<md::QiMat> system_taylor(const md::RFMat& a, const md::GaussianRational& c,
                                            int count) {
    std::vector<md::QiMat> out(static_cast<size_t>(count), md::QiMat(a.rows(), a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            std::vector<md::GaussianRational> e = taylor_coeffs(a(i, j), c, count);
            for (int k = 0; k < count; ++k) out[static_cast<size_t>(k)](i, j) = e[static_cast<size_t>(k)];
        }
    return out;
}

// Star-shaped polygon around `center` winding `turns` times (sign = sense),
// with every segment subtending less than pi, so winding_by_angle is exact.
inline md::Loop rand_star_loop(std::mt19937_64& rng, cd center, int turns) {
    int segs = 12 + static_cast<int>(rand_int(rng, 0, 6));
    int total = segs * std::abs(turns);
    double dir = turns >= 0 ? 1.0 : -1.0;
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    double phase = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    md::Loop l;
    std::vector<double> radii(static_cast<size_t>(total));
    for (auto& r : radii) r = radius(rng);
    for (int k = 0; k <= total; ++k) {
        double ang = phase + dir * 2.0 * std::numbers::pi * std::abs(turns) * k / total;
        double r = radii[static_cast<size_t>(k % total)];
        l.vertices.push_back(center + std::polar(r, ang));
    }
    l.base = l.vertices.front();
    l.vertices.back() = l.vertices.front();
    return l;
}

}  // namespace oracle
