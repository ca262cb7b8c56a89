#include "monodesc/descent.hpp"

#include <random>

#include "eigen_util.hpp"

namespace monodesc {

RFMat gauge_transform(const RFMat& a, const RFMat& c) {
    if (!a.is_square() || !c.is_square() || a.rows() != c.rows())
        throw ContractViolation("gauge shape mismatch");
    if (exact_det(c, RatFunc(1)).is_zero()) throw SingularGauge("gauge matrix is singular");
    RFMat cinv = exact_inverse(c, RatFunc(1));
    return cinv * a * c - cinv * derivative(c);
}

bool check_equivalence(const RFMat& a, const RFMat& b, const RFMat& c) {
    return gauge_transform(a, c) == b;
}

namespace {

// Exact nullspace basis of an m x n system over Q(i), via Gauss-Jordan.
std::vector<std::vector<GaussianRational>> nullspace(std::vector<std::vector<GaussianRational>> rows,
                                                     int ncols) {
    int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_of_col(static_cast<size_t>(ncols), -1);
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rank)]);
        GaussianRational inv = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)].inverse();
        for (int j = 0; j < ncols; ++j) rows[static_cast<size_t>(rank)][static_cast<size_t>(j)] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            GaussianRational f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = 0; j < ncols; ++j)
                rows[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        pivot_of_col[static_cast<size_t>(col)] = rank;
        ++rank;
    }
    std::vector<std::vector<GaussianRational>> basis;
    for (int col = 0; col < ncols; ++col) {
        if (pivot_of_col[static_cast<size_t>(col)] >= 0) continue;
        std::vector<GaussianRational> v(static_cast<size_t>(ncols));
        v[static_cast<size_t>(col)] = GaussianRational(1);
        for (int c2 = 0; c2 < ncols; ++c2) {
            int pr = pivot_of_col[static_cast<size_t>(c2)];
            if (pr >= 0) v[static_cast<size_t>(c2)] = -rows[static_cast<size_t>(pr)][static_cast<size_t>(col)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QiMat vec_to_mat(const std::vector<GaussianRational>& v, int n) {
    QiMat m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m(k, l) = v[static_cast<size_t>(k) * n + l];
    return m;
}

bool invertible(const QiMat& m) { return !exact_det(m, GaussianRational(1)).is_zero(); }

// RatFunc * clearing polynomial must divide out exactly.
Poly cleared_product(const RatFunc& f, const Poly& d) {
    RatFunc p = f * RatFunc(d);
    if (p.den() != Poly::one()) throw ContractViolation("denominator clearing failed");
    return p.num();
}

}  // namespace

std::optional<QiMat> find_constant_gauge(const RFMat& a, const RFMat& b, unsigned seed) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw ContractViolation("gauge search shape mismatch");
    int n = a.rows();
    int nu = n * n;

    // Exact linear system: for each (i,j), the entry of A C - C B vanishes.
    std::vector<std::vector<GaussianRational>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly d = Poly::one();
            for (int k = 0; k < n; ++k) d = Poly::lcm(d, a(i, k).den());
            for (int l = 0; l < n; ++l) d = Poly::lcm(d, b(l, j).den());
            std::vector<Poly> coeff(static_cast<size_t>(nu));
            for (int k = 0; k < n; ++k)
                coeff[static_cast<size_t>(k) * n + j] += cleared_product(a(i, k), d);
            for (int l = 0; l < n; ++l)
                coeff[static_cast<size_t>(i) * n + l] -= cleared_product(b(l, j), d);
            int maxdeg = -1;
            for (const Poly& p : coeff) maxdeg = std::max(maxdeg, p.degree());
            for (int pw = 0; pw <= maxdeg; ++pw) {
                std::vector<GaussianRational> row(static_cast<size_t>(nu));
                bool nonzero = false;
                for (int u = 0; u < nu; ++u) {
                    row[static_cast<size_t>(u)] = coeff[static_cast<size_t>(u)].coeff(pw);
                    nonzero = nonzero || !row[static_cast<size_t>(u)].is_zero();
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }

    std::vector<std::vector<GaussianRational>> basis = nullspace(std::move(rows), nu);
    if (basis.empty()) return std::nullopt;

    for (const auto& v : basis) {
        QiMat c = vec_to_mat(v, n);
        if (invertible(c)) return c;
    }

    // deterministic seeded search over small Gaussian-integer combinations
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<GaussianRational> v(static_cast<size_t>(nu));
        for (const auto& bvec : basis) {
            GaussianRational w(mpq_class(coef(rng)), mpq_class(coef(rng)));
            if (w.is_zero()) w = GaussianRational(1);
            for (int u = 0; u < nu; ++u) v[static_cast<size_t>(u)] += w * bvec[static_cast<size_t>(u)];
        }
        QiMat c = vec_to_mat(v, n);
        if (invertible(c)) return c;
    }
    return std::nullopt;
}

Cocycle::Cocycle(QiMat chi) : chi_(std::move(chi)) {
    if (!chi_.is_square()) throw ContractViolation("cocycle must be square");
    if (chi_ * conj(chi_) != qimat_identity(chi_.rows()))
        throw ContractViolation("cocycle condition chi * conj(chi) = I fails");
}

Cocycle Cocycle::trivial(int n) { return Cocycle(qimat_identity(n)); }

bool Cocycle::is_trivial() const { return chi_ == qimat_identity(chi_.rows()); }

QiMat split_cocycle(const Cocycle& c, unsigned seed) {
    int n = c.dim();
    const QiMat& chi = c.chi();
    QiMat chi_conj = conj(chi);
    auto try_q = [&](const QiMat& q) -> std::optional<QiMat> {
        QiMat p = q + conj(q) * chi_conj;
        if (!invertible(p)) return std::nullopt;
        if (conj(p) != p * chi) throw ContractViolation("cocycle splitting identity failed");
        return p;
    };
    GaussianRational one(1), im = GaussianRational::i();
    std::vector<QiMat> candidates;
    candidates.push_back(qimat_identity(n));
    candidates.push_back(im * qimat_identity(n));
    QiMat alt(n, n), alt2(n, n);
    for (int k = 0; k < n; ++k) {
        alt(k, k) = k % 2 ? im : one;
        alt2(k, k) = k % 2 ? one : im;
    }
    candidates.push_back(alt);
    candidates.push_back(alt2);
    for (const QiMat& q : candidates)
        if (auto p = try_q(q)) return *p;

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        QiMat q(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q(i, j) = GaussianRational(mpq_class(coef(rng)), mpq_class(coef(rng)));
        if (auto p = try_q(q)) return *p;
    }
    throw ContractViolation("no invertible splitting found for the cocycle");
}

namespace {

template <class M, class Scalar>
M mu_block_impl(const M& m, Scalar half, Scalar minus_half_i) {
    M out(2 * m.rows(), 2 * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const auto& f = m(i, j);
            auto fc = f.conj();
            auto re = half * (f + fc);
            auto im = minus_half_i * (f - fc);
            out(2 * i, 2 * j) = re;
            out(2 * i, 2 * j + 1) = -im;
            out(2 * i + 1, 2 * j) = im;
            out(2 * i + 1, 2 * j + 1) = re;
        }
    return out;
}

}  // namespace

RFMat mu_block(const RFMat& m) {
    return mu_block_impl<RFMat, RatFunc>(m, RatFunc(GaussianRational::ratio(1, 2)),
                                         RatFunc(GaussianRational(mpq_class(0), mpq_class(-1, 2))));
}

QiMat mu_block(const QiMat& m) {
    return mu_block_impl<QiMat, GaussianRational>(
        m, GaussianRational::ratio(1, 2), GaussianRational(mpq_class(0), mpq_class(-1, 2)));
}

CMat mu_block_numeric(const CMat& m) {
    CMat out(2 * m.rows(), 2 * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            double re = m(i, j).real(), im = m(i, j).imag();
            out(2 * i, 2 * j) = re;
            out(2 * i, 2 * j + 1) = -im;
            out(2 * i + 1, 2 * j) = im;
            out(2 * i + 1, 2 * j + 1) = re;
        }
    return out;
}

RFMat mu_descend(const RFMat& a, const Cocycle& chi) {
    if (!a.is_square()) throw ContractViolation("system matrix must be square");
    if (chi.dim() != a.rows()) throw ContractViolation("cocycle dimension mismatch");
    RFMat twisted = a;
    if (!chi.is_trivial()) {
        RFMat p = embed(split_cocycle(chi));
        twisted = exact_inverse(p, RatFunc(1)) * a * p;
    }
    RFMat out = mu_block(twisted);
    // realness certificate: every entry must be fixed by conjugation, exactly
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j)
            if (out(i, j).conj() != out(i, j))
                throw NotDescendable("block entry fails the exact realness certificate");
    return out;
}

DescentReport descent_report(const RFMat& a, const ContinuationConfig& cfg, unsigned seed) {
    DescentReport rep;
    RFMat b = conj(a);
    if (b == a) {
        rep.verdict = DescentReport::Verdict::TriviallyReal;
        rep.certificate = qimat_identity(a.rows());
        rep.certificate_exact = true;
        rep.monodromy_residual = 0.0;
        return rep;
    }
    std::optional<QiMat> c = find_constant_gauge(a, b, seed);
    if (!c) {
        rep.verdict = DescentReport::Verdict::NotFound;
        return rep;
    }
    rep.verdict = DescentReport::Verdict::Equivalent;
    rep.certificate = *c;
    rep.certificate_exact = check_equivalence(a, b, embed(*c));

    std::vector<std::complex<double>> poles = finite_poles(a);
    if (!poles.empty()) {
        std::vector<Loop> loops = standard_loops(poles, default_base(poles));
        RatFuncSystem sys_a(a), sys_b(b);
        CMat cc = to_cmat(*c);
        CMat cinv = cmat_inverse(cc);
        double worst = 0.0;
        for (const Loop& l : loops) {
            CMat ma = continue_along(sys_a, l, cfg);
            CMat mb = continue_along(sys_b, l, cfg);
            worst = std::max(worst, max_dev(cinv * ma * cc, mb));
        }
        rep.monodromy_residual = worst;
        rep.loops_checked = static_cast<int>(loops.size());
    }
    return rep;
}

}  // namespace monodesc
