#include "monodesc/realize.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "eigen_util.hpp"
#include "parallel.hpp"

namespace monodesc {

using cd = std::complex<double>;

SymmetrizedTargets symmetrize_targets(const TargetData& t) {
    size_t r = t.points.size();
    if (r == 0) throw ContractViolation("at least one target point required");
    if (t.generators.size() != r)
        throw ContractViolation("one generator per target point required");
    int n = t.generators[0].rows();
    for (const CMat& g : t.generators) {
        if (!g.is_square() || g.rows() != n) throw ContractViolation("generator shape mismatch");
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(to_eigen(g));
        if (!lu.isInvertible()) throw ContractViolation("target generator is singular");
    }
    for (size_t k = 0; k < r; ++k) {
        if (!(t.points[k].imag() > 0.0))
            throw ContractViolation("target points must lie strictly in the upper half plane");
        for (size_t j = k + 1; j < r; ++j)
            if (std::abs(t.points[k] - t.points[j]) <= 1e-12 * (1.0 + std::abs(t.points[k])))
                throw ContractViolation("target points must be pairwise distinct");
    }

    SymmetrizedTargets st;
    st.n = n;
    st.r = static_cast<int>(r);
    st.poles = t.points;
    for (size_t k = 0; k < r; ++k) st.poles.push_back(std::conj(t.points[k]));
    st.targets = t.generators;
    for (size_t k = 0; k < r; ++k) st.targets.push_back(conj(t.generators[k]));
    st.base = t.base ? *t.base : default_base(st.poles);
    // Upper-pole loops are the positively oriented standard ones; each lower
    // pole gets the mirror image of its partner's loop (orientation reversed),
    // so the conjugated target is the literal monodromy along it.
    st.loops = standard_loops(st.poles, st.base);
    for (size_t k = 0; k < r; ++k)
        st.loops[r + k] = mirror_loop(st.loops[k]);
    return st;
}

namespace {

Eigen::MatrixXcd db_sqrt(Eigen::MatrixXcd x) {
    int n = static_cast<int>(x.rows());
    Eigen::MatrixXcd y = x, z = Eigen::MatrixXcd::Identity(n, n);
    for (int iter = 0; iter < 100; ++iter) {
        Eigen::FullPivLU<Eigen::MatrixXcd> ly(y), lz(z);
        if (!ly.isInvertible() || !lz.isInvertible())
            throw LogBranchFailure("square-root iteration hit a singular iterate");
        Eigen::MatrixXcd yn = 0.5 * (y + lz.inverse());
        Eigen::MatrixXcd zn = 0.5 * (z + ly.inverse());
        double delta = (yn - y).cwiseAbs().maxCoeff();
        y = yn;
        z = zn;
        if (delta <= 1e-15 * (1.0 + y.cwiseAbs().maxCoeff())) return y;
    }
    throw LogBranchFailure("square-root iteration did not converge");
}

}  // namespace

CMat principal_log(const CMat& m, std::vector<cd>* eigenvalues, std::vector<cd>* log_eigenvalues) {
    if (!m.is_square()) throw ContractViolation("logarithm of a non-square matrix");
    int n = m.rows();
    Eigen::MatrixXcd em = to_eigen(m);
    double scale = 1.0 + em.cwiseAbs().maxCoeff();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(em, true);
    std::vector<cd> eigs, logs;
    bool on_cut = false;
    for (int k = 0; k < n; ++k) {
        cd lambda = es.eigenvalues()(k);
        if (std::abs(lambda) < 1e-14 * scale)
            throw LogBranchFailure("target matrix is singular; no logarithm exists");
        eigs.push_back(lambda);
        logs.push_back(std::log(lambda));
        if (lambda.real() < 0.0 && std::abs(lambda.imag()) <= 1e-12 * std::abs(lambda))
            on_cut = true;
    }
    if (eigenvalues) *eigenvalues = eigs;
    if (log_eigenvalues) *log_eigenvalues = logs;

    // eigendecomposition route when the eigenvector basis reconstructs m
    const Eigen::MatrixXcd& v = es.eigenvectors();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
    if (lu.isInvertible()) {
        Eigen::MatrixXcd vinv = lu.inverse();
        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
        for (int k = 0; k < n; ++k) d(k, k) = eigs[static_cast<size_t>(k)];
        if ((v * d * vinv - em).cwiseAbs().maxCoeff() <= 1e-10 * scale) {
            for (int k = 0; k < n; ++k) d(k, k) = logs[static_cast<size_t>(k)];
            return from_eigen(v * d * vinv);
        }
    }

    // defective: inverse scaling and squaring, principal branch only
    if (on_cut)
        throw LogBranchFailure("defective target with an eigenvalue on the negative real cut");
    Eigen::MatrixXcd x = em;
    int squarings = 0;
    Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
    while ((x - eye).cwiseAbs().maxCoeff() > 0.25) {
        if (++squarings > 64) throw LogBranchFailure("scaling did not contract toward identity");
        x = db_sqrt(x);
    }
    Eigen::MatrixXcd e = x - eye;
    Eigen::MatrixXcd term = e, acc = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 1; j <= 48; ++j) {
        acc += term * ((j % 2 ? 1.0 : -1.0) / static_cast<double>(j));
        term = term * e;
    }
    return from_eigen(std::pow(2.0, squarings) * acc);
}

AnsatzResult residue_ansatz(const SymmetrizedTargets& st) {
    AnsatzResult out;
    out.system.poles = st.poles;
    const cd two_pi_i(0.0, 2.0 * M_PI);
    for (int k = 0; k < st.r; ++k) {
        std::vector<cd> eigs, logs;
        CMat l = principal_log(st.targets[static_cast<size_t>(k)], &eigs, &logs);
        out.system.residues.push_back((1.0 / two_pi_i) * l);
        std::string line;
        for (size_t j = 0; j < eigs.size(); ++j) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%s%.6g%+.6gi -> %.6g%+.6gi", j ? ", " : "",
                          eigs[j].real(), eigs[j].imag(), logs[j].real(), logs[j].imag());
            line += buf;
        }
        out.log_branches.push_back(line);
    }
    for (int k = 0; k < st.r; ++k)
        out.system.residues.push_back(conj(out.system.residues[static_cast<size_t>(k)]));
    return out;
}

namespace {

// Unknown vector layout: upper residues only, (Re, Im) interleaved.
std::vector<double> pack(const FuchsianNumeric& sys, int r, int n) {
    std::vector<double> x;
    x.reserve(static_cast<size_t>(2 * r * n * n));
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                x.push_back(sys.residues[static_cast<size_t>(k)](i, j).real());
                x.push_back(sys.residues[static_cast<size_t>(k)](i, j).imag());
            }
    return x;
}

FuchsianNumeric unpack(const std::vector<double>& x, const std::vector<cd>& poles, int r, int n) {
    FuchsianNumeric sys;
    sys.poles = poles;
    size_t p = 0;
    for (int k = 0; k < r; ++k) {
        CMat b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                b(i, j) = cd(x[p], x[p + 1]);
                p += 2;
            }
        sys.residues.push_back(b);
    }
    for (int k = 0; k < r; ++k) sys.residues.push_back(conj(sys.residues[static_cast<size_t>(k)]));
    return sys;
}

std::vector<double> residual_vector(const FuchsianNumeric& sys, const SymmetrizedTargets& st,
                                    const ContinuationConfig& cfg) {
    ResidueSystem rs(sys.poles, sys.residues);
    std::vector<CMat> ms(st.loops.size());
    run_parallel(cfg.jobs, static_cast<int>(st.loops.size()), [&](int l) {
        ContinuationConfig c1 = cfg;
        c1.jobs = 1;
        ms[static_cast<size_t>(l)] = continue_along(rs, st.loops[static_cast<size_t>(l)], c1);
    });
    std::vector<double> f;
    f.reserve(st.loops.size() * static_cast<size_t>(2 * st.n * st.n));
    for (size_t l = 0; l < st.loops.size(); ++l) {
        CMat diff = ms[l] - st.targets[l];
        for (int i = 0; i < st.n; ++i)
            for (int j = 0; j < st.n; ++j) {
                f.push_back(diff(i, j).real());
                f.push_back(diff(i, j).imag());
            }
    }
    return f;
}

double inf_norm_vec(const std::vector<double>& v) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

}  // namespace

RefineResult refine_residues(const FuchsianNumeric& init, const SymmetrizedTargets& st,
                             const RefineOptions& opt) {
    int r = st.r, n = st.n;
    if (static_cast<int>(init.residues.size()) != 2 * r)
        throw ContractViolation("refine needs the symmetrized residue list");
    std::vector<double> x = pack(init, r, n);
    int nu = static_cast<int>(x.size());

    std::vector<double> f = residual_vector(init, st, opt.cont);
    double res = inf_norm_vec(f);
    if (res <= opt.tol) return {unpack(x, init.poles, r, n), 0, res};

    for (int iter = 1; iter <= opt.max_iter; ++iter) {
        int m = static_cast<int>(f.size());
        Eigen::MatrixXd jac(m, nu);
        run_parallel(opt.cont.jobs, nu, [&](int col) {
            std::vector<double> x2 = x;
            double h = opt.fd_scale * (1.0 + std::abs(x2[static_cast<size_t>(col)]));
            x2[static_cast<size_t>(col)] += h;
            ContinuationConfig c1 = opt.cont;
            c1.jobs = 1;
            std::vector<double> f2 = residual_vector(unpack(x2, init.poles, r, n), st, c1);
            for (int row = 0; row < m; ++row)
                jac(row, col) = (f2[static_cast<size_t>(row)] - f[static_cast<size_t>(row)]) / h;
        });
        Eigen::VectorXd rhs(m);
        for (int row = 0; row < m; ++row) rhs(row) = -f[static_cast<size_t>(row)];
        Eigen::VectorXd d = jac.colPivHouseholderQr().solve(rhs);

        double lambda = 1.0;
        bool accepted = false;
        for (int h = 0; h <= opt.max_halvings; ++h, lambda *= 0.5) {
            std::vector<double> xt = x;
            for (int u = 0; u < nu; ++u) xt[static_cast<size_t>(u)] += lambda * d(u);
            std::vector<double> ft = residual_vector(unpack(xt, init.poles, r, n), st, opt.cont);
            double rt = inf_norm_vec(ft);
            if (rt < res) {
                x = std::move(xt);
                f = std::move(ft);
                res = rt;
                accepted = true;
                break;
            }
        }
        if (!accepted) throw NoConvergence(iter, res);
        if (res <= opt.tol) return {unpack(x, init.poles, r, n), iter, res};
    }
    throw NoConvergence(opt.max_iter, res);
}

namespace {

mpq_class decimal_to_mpq(const char* s) {
    bool neg = false;
    const char* p = s;
    if (*p == '-') {
        neg = true;
        ++p;
    } else if (*p == '+') {
        ++p;
    }
    std::string digits;
    long frac = 0;
    bool in_frac = false;
    long exp10 = 0;
    for (; *p; ++p) {
        if (*p >= '0' && *p <= '9') {
            digits += *p;
            if (in_frac) ++frac;
        } else if (*p == '.') {
            in_frac = true;
        } else if (*p == 'e' || *p == 'E') {
            exp10 = std::strtol(p + 1, nullptr, 10);
            break;
        }
    }
    mpz_class mant(digits.empty() ? "0" : digits);
    if (neg) mant = -mant;
    long shift = exp10 - frac;
    mpz_class num = mant, den = 1;
    mpz_class ten(10);
    if (shift > 0) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
        num *= pw;
    } else if (shift < 0) {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class rationalize(double x, int digits) {
    if (x == 0.0) return mpq_class(0);
    if (!std::isfinite(x)) throw ContractViolation("cannot rationalize a non-finite value");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    return decimal_to_mpq(buf);
}

GaussianRational rationalize_c(cd v, int digits) {
    return GaussianRational(rationalize(v.real(), digits), rationalize(v.imag(), digits));
}

}  // namespace

RFMat rationalize_system(const FuchsianNumeric& sys, int digits) {
    if (digits < 3 || digits > 18) throw ContractViolation("rationalization digits out of range");
    size_t total = sys.poles.size();
    if (total == 0 || total % 2 != 0 || sys.residues.size() != total)
        throw ContractViolation("rationalize expects conjugate-paired pole data");
    size_t r = total / 2;
    int n = sys.residues[0].rows();
    for (size_t k = 0; k < r; ++k) {
        if (std::abs(sys.poles[r + k] - std::conj(sys.poles[k])) > 1e-9 * (1.0 + std::abs(sys.poles[k])))
            throw ContractViolation("pole list is not conjugate-paired");
    }

    // exact data: rationalize the upper half, mirror the lower half exactly
    std::vector<GaussianRational> poles_exact;
    std::vector<QiMat> res_exact;
    for (size_t k = 0; k < r; ++k) {
        poles_exact.push_back(rationalize_c(sys.poles[k], digits));
        QiMat b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b(i, j) = rationalize_c(sys.residues[k](i, j), digits);
        res_exact.push_back(b);
    }
    for (size_t k = 0; k < r; ++k) {
        poles_exact.push_back(poles_exact[k].conj());
        res_exact.push_back(conj(res_exact[k]));
    }

    RFMat a(n, n);
    for (size_t k = 0; k < 2 * r; ++k) {
        Poly den(std::vector<GaussianRational>{-poles_exact[k], GaussianRational(1)});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const GaussianRational& b = res_exact[k](i, j);
                if (b.is_zero()) continue;
                a(i, j) += RatFunc(Poly(b), den);
            }
    }
    return a;
}

RealizationResult realize_and_descend(const TargetData& t, const RefineOptions& opt, int digits) {
    RealizationResult out;
    out.sym = symmetrize_targets(t);
    AnsatzResult ansatz = residue_ansatz(out.sym);
    RefineResult rr = refine_residues(ansatz.system, out.sym, opt);
    out.numeric = rr.system;
    out.complex_system = rationalize_system(rr.system, digits);
    out.real_system = mu_descend(out.complex_system, Cocycle::trivial(out.sym.n));

    RealizationReport& rep = out.report;
    rep.refine_iterations = rr.iterations;
    rep.refine_residual = rr.residual;
    rep.log_branches = ansatz.log_branches;

    RatFuncSystem sys(out.complex_system);
    for (size_t l = 0; l < out.sym.loops.size(); ++l) {
        CMat m = continue_along(sys, out.sym.loops[l], opt.cont);
        double dev = max_dev(m, out.sym.targets[l]);
        rep.loop_residuals.push_back(dev);
        rep.max_loop_residual = std::max(rep.max_loop_residual, dev);
    }
    rep.conjugation_residual = check_conjugation_formula(out.complex_system, out.sym.loops, opt.cont).max_dev;
    rep.descent = descent_report(out.complex_system, opt.cont);

    RatFuncSystem real_sys(out.real_system);
    for (size_t l = 0; l < out.sym.loops.size(); ++l) {
        CMat m = continue_along(real_sys, out.sym.loops[l], opt.cont);
        rep.real_block_residual =
            std::max(rep.real_block_residual, max_dev(m, mu_block_numeric(out.sym.targets[l])));
    }
    return out;
}

}  // namespace monodesc
