#include "monodesc/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eigen_util.hpp"

namespace monodesc {

using cd = std::complex<double>;

namespace {

// In-place Taylor shift: b becomes the coefficient list of p(c + t).
void shift_in_place(std::vector<cd>& b, cd c) {
    int d = static_cast<int>(b.size()) - 1;
    for (int j = 0; j < d; ++j)
        for (int k = d - 1; k >= j; --k) b[static_cast<size_t>(k)] += c * b[static_cast<size_t>(k) + 1];
}

std::vector<cd> to_cd(const Poly& p) {
    std::vector<cd> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
    if (out.empty()) out.push_back(cd(0.0, 0.0));
    return out;
}

// q = n/d as a truncated power series with d[0] != 0.
std::vector<cd> series_divide(const std::vector<cd>& n, const std::vector<cd>& d, int order) {
    std::vector<cd> q(static_cast<size_t>(order));
    cd d0 = d[0];
    for (int k = 0; k < order; ++k) {
        cd acc = k < static_cast<int>(n.size()) ? n[static_cast<size_t>(k)] : cd(0.0, 0.0);
        int jmax = std::min<int>(k, static_cast<int>(d.size()) - 1);
        for (int j = 1; j <= jmax; ++j) acc -= d[static_cast<size_t>(j)] * q[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = acc / d0;
    }
    return q;
}

std::vector<GaussianRational> series_divide_exact(const Poly& n, const Poly& d, int order) {
    std::vector<GaussianRational> q(static_cast<size_t>(order));
    GaussianRational d0inv = d.coeff(0).inverse();
    for (int k = 0; k < order; ++k) {
        GaussianRational acc = n.coeff(k);
        int jmax = std::min(k, d.degree());
        for (int j = 1; j <= jmax; ++j) acc -= d.coeff(j) * q[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = acc * d0inv;
    }
    return q;
}

}  // namespace

std::vector<cd> poly_roots(const Poly& p) {
    int d = p.degree();
    if (d <= 0) return {};
    std::vector<cd> c = to_cd(p);
    if (d == 1) return {-c[0] / c[1]};
    if (d == 2) {
        cd a = c[2], b = c[1], c0 = c[0];
        cd s = std::sqrt(b * b - 4.0 * a * c0);
        if (std::abs(b - s) > std::abs(b + s)) s = -s;
        cd q = -0.5 * (b + s);
        if (q != cd(0.0, 0.0)) return {q / a, c0 / q};
        cd r = std::sqrt(-c0 / a);
        return {r, -r};
    }
    // companion matrix of the monic normalization
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        m(k, d - 1) = -c[static_cast<size_t>(k)] / c[static_cast<size_t>(d)];
        if (k + 1 < d) m(k + 1, k) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<cd> out;
    out.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) out.push_back(es.eigenvalues()(k));
    return out;
}

std::vector<cd> finite_poles(const RFMat& a) {
    std::vector<cd> out;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            for (cd r : poly_roots(a(i, j).den())) {
                bool seen = false;
                for (cd e : out)
                    if (std::abs(r - e) <= 1e-9 * (1.0 + std::abs(r))) {
                        seen = true;
                        break;
                    }
                if (!seen) out.push_back(r);
            }
        }
    std::sort(out.begin(), out.end(), [](cd x, cd y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

double distance_to_nearest(const std::vector<cd>& pts, cd z) {
    double best = std::numeric_limits<double>::infinity();
    for (cd p : pts) best = std::min(best, std::abs(z - p));
    return best;
}

RatFuncSystem::RatFuncSystem(const RFMat& a) {
    if (!a.is_square()) throw ContractViolation("system matrix must be square");
    n_ = a.rows();
    entries_.reserve(static_cast<size_t>(n_) * static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) entries_.push_back({to_cd(a(i, j).num()), to_cd(a(i, j).den())});
    poles_ = finite_poles(a);
}

std::vector<CMat> RatFuncSystem::expand(cd center, int order) const {
    std::vector<CMat> out(static_cast<size_t>(order), CMat(n_, n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Entry& e = entries_[static_cast<size_t>(i) * n_ + j];
            std::vector<cd> num = e.num, den = e.den;
            shift_in_place(num, center);
            shift_in_place(den, center);
            double scale = 0.0;
            for (cd d : den) scale = std::max(scale, std::abs(d));
            if (std::abs(den[0]) < 1e-14 * scale) throw PoleEvaluation("expansion at a pole");
            std::vector<cd> q = series_divide(num, den, order);
            for (int k = 0; k < order; ++k) out[static_cast<size_t>(k)](i, j) = q[static_cast<size_t>(k)];
        }
    return out;
}

ResidueSystem::ResidueSystem(std::vector<cd> poles, std::vector<CMat> residues)
    : poles_(std::move(poles)), residues_(std::move(residues)) {
    if (poles_.size() != residues_.size() || poles_.empty())
        throw ContractViolation("residue list must match pole list");
    n_ = residues_[0].rows();
    for (const CMat& b : residues_)
        if (b.rows() != n_ || b.cols() != n_) throw ContractViolation("residue shape mismatch");
}

std::vector<CMat> ResidueSystem::expand(cd center, int order) const {
    std::vector<CMat> out(static_cast<size_t>(order), CMat(n_, n_));
    for (size_t k = 0; k < poles_.size(); ++k) {
        cd diff = center - poles_[k];
        if (std::abs(diff) < 1e-300) throw PoleEvaluation("expansion at a pole");
        cd w = 1.0 / diff;
        // 1/(z - s) = sum_j (-1)^j w^{j+1} t^j about z = center + t
        cd f = w;
        for (int j = 0; j < order; ++j) {
            out[static_cast<size_t>(j)] += f * residues_[k];
            f *= -w;
        }
    }
    return out;
}

namespace {

template <class MatT, class Scalar>
std::vector<MatT> recursion(const std::vector<MatT>& a, MatT w0, int order, int n,
                            Scalar inv_of_int(long)) {
    std::vector<MatT> w;
    w.reserve(static_cast<size_t>(order));
    w.push_back(std::move(w0));
    for (int i = 1; i < order; ++i) {
        MatT s(n, n);
        for (int j = 0; j < i; ++j) s += a[static_cast<size_t>(j)] * w[static_cast<size_t>(i - 1 - j)];
        w.push_back(inv_of_int(i) * s);
    }
    return w;
}

cd cd_inv(long i) { return cd(1.0 / static_cast<double>(i), 0.0); }
GaussianRational gr_inv(long i) { return GaussianRational::ratio(1, i); }

}  // namespace

CSeries fundamental_series(const LocalSystem& sys, cd center, int order, const CMat* w0) {
    if (order < 1) throw ContractViolation("series order must be positive");
    int n = sys.dim();
    CMat seed = w0 ? *w0 : cmat_identity(n);
    if (w0) {
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(to_eigen(seed));
        if (!lu.isInvertible()) throw SingularInitial("seed matrix is singular");
    }
    std::vector<CMat> a = sys.expand(center, order);
    CSeries out;
    out.center = center;
    out.radius = distance_to_nearest(sys.poles(), center);
    out.coeffs = recursion<CMat, cd>(a, std::move(seed), order, n, cd_inv);
    return out;
}

CSeries fundamental_series(const RFMat& a, cd center, int order, const CMat* w0) {
    return fundamental_series(RatFuncSystem(a), center, order, w0);
}

QiSeries fundamental_series_exact(const RFMat& a, const GaussianRational& center, int order,
                                  const QiMat* w0) {
    if (order < 1) throw ContractViolation("series order must be positive");
    if (!a.is_square()) throw ContractViolation("system matrix must be square");
    int n = a.rows();
    QiMat seed = w0 ? *w0 : qimat_identity(n);
    if (w0 && exact_det(seed, GaussianRational(1)).is_zero())
        throw SingularInitial("seed matrix is singular");
    // exact local expansion, entry by entry
    std::vector<QiMat> ac(static_cast<size_t>(order), QiMat(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly num = a(i, j).num().shifted(center);
            Poly den = a(i, j).den().shifted(center);
            if (den.coeff(0).is_zero()) throw PoleEvaluation("expansion at a pole");
            std::vector<GaussianRational> q = series_divide_exact(num, den, order);
            for (int k = 0; k < order; ++k) ac[static_cast<size_t>(k)](i, j) = q[static_cast<size_t>(k)];
        }
    QiSeries out;
    out.center = center;
    out.radius = distance_to_nearest(finite_poles(a), center.to_complex());
    out.coeffs = recursion<QiMat, GaussianRational>(ac, std::move(seed), order, n, gr_inv);
    return out;
}

namespace {

void check_disk(double dist, double radius, double step_fraction) {
    if (!std::isfinite(radius)) return;
    if (dist > step_fraction * radius * (1.0 + 1e-12))
        throw OutOfDisk("evaluation point outside the trusted disk");
}

}  // namespace

CMat evaluate_series(const CSeries& s, cd point, double step_fraction) {
    cd t = point - s.center;
    check_disk(std::abs(t), s.radius, step_fraction);
    size_t n = s.coeffs.size();
    CMat acc = s.coeffs[n - 1];
    for (size_t k = n - 1; k-- > 0;) acc = t * acc + s.coeffs[k];
    return acc;
}

QiMat evaluate_series_exact(const QiSeries& s, const GaussianRational& point, double step_fraction) {
    GaussianRational t = point - s.center;
    check_disk(std::abs(t.to_complex()), s.radius, step_fraction);
    size_t n = s.coeffs.size();
    QiMat acc = s.coeffs[n - 1];
    for (size_t k = n - 1; k-- > 0;) acc = t * acc + s.coeffs[k];
    return acc;
}

CMatBall evaluate_series_ball(const CSeries& s, cd point, double step_fraction) {
    cd t = point - s.center;
    double dist = std::abs(t);
    check_disk(dist, s.radius, step_fraction);
    int n = s.coeffs[0].rows(), m = s.coeffs[0].cols();
    size_t ord = s.coeffs.size();
    CMatBall out{CMat(n, m), Mat<double>(n, m)};
    CBall tb(t, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            CBall acc(s.coeffs[ord - 1](i, j));
            for (size_t k = ord - 1; k-- > 0;) acc = acc * tb + CBall(s.coeffs[k](i, j));
            out.value(i, j) = acc.v;
            out.err(i, j) = acc.err;
        }
    // geometric tail bound for the truncated remainder
    size_t win = std::min<size_t>(8, ord);
    double tmax = 0.0, prev = -1.0, q_emp = 0.0;
    double sp = std::pow(dist, static_cast<double>(ord - win));
    for (size_t k = ord - win; k < ord; ++k) {
        double mk = inf_norm(s.coeffs[k]) * sp;
        sp *= dist;
        tmax = std::max(tmax, mk);
        if (prev > 0.0 && mk > 0.0) q_emp = std::max(q_emp, mk / prev);
        prev = mk;
    }
    double q = std::isfinite(s.radius) ? dist / s.radius : std::min(q_emp, 0.9);
    double tail = q < 1.0 ? tmax * q / (1.0 - q) : std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) out.err(i, j) += tail;
    return out;
}

}  // namespace monodesc
