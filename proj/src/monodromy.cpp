#include "monodesc/monodromy.hpp"

#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace monodesc {

using cd = std::complex<double>;

namespace {

Mat<double> abs_mat(const CMat& m) {
    return m.map([](const cd& v) { return std::abs(v); });
}

// |E*M - Ehat*Mhat| <= errE*(|Mhat| + errM) + |Ehat|*errM, entrywise.
Mat<double> product_err(const CMat& e, const Mat<double>& err_e, const CMat& m,
                        const Mat<double>& err_m) {
    Mat<double> abs_e = abs_mat(e);
    Mat<double> abs_m = abs_mat(m);
    Mat<double> slack = abs_m + err_m;
    Mat<double> out = err_e * slack + abs_e * err_m;
    // rounding inflation for the product itself
    constexpr double eps = 2.220446049250313e-16;
    Mat<double> round_term = abs_e * abs_m;
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j)
            out(i, j) += 4.0 * eps * static_cast<double>(e.cols()) * round_term(i, j);
    return out;
}

double max_entry(const Mat<double>& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) best = std::max(best, m(i, j));
    return best;
}

}  // namespace

CMat continue_along(const LocalSystem& sys, const Loop& loop, const ContinuationConfig& cfg) {
    const auto& v = loop.vertices;
    if (v.size() < 2) throw DegenerateGeometry("loop needs at least two vertices");
    double scale = 1.0 + std::abs(loop.base);
    if (std::abs(v.front() - loop.base) > 1e-12 * scale || std::abs(v.back() - loop.base) > 1e-12 * scale)
        throw DegenerateGeometry("loop is not closed at its base");
    if (cfg.order < 2) throw ContractViolation("continuation needs order >= 2");

    int n = sys.dim();
    CMat m = cmat_identity(n);
    Mat<double> err(n, n);
    long expansions = 0;

    for (size_t seg = 0; seg + 1 < v.size(); ++seg) {
        cd from = v[seg], to = v[seg + 1];
        double len = std::abs(to - from);
        if (len == 0.0) continue;
        cd dir = (to - from) / len;
        double pos = 0.0;
        cd cur = from;
        while (pos < len) {
            double rho = distance_to_nearest(sys.poles(), cur);
            double cap = std::isfinite(rho) ? cfg.step_fraction * rho * 0.98 : cfg.max_step;
            cap = std::min(cap, cfg.max_step);
            if (cap <= 1e-13 * (1.0 + std::abs(cur)))
                throw OutOfDisk("continuation cannot step: pole too close to the path");
            double step = std::min(cap, len - pos);
            cd next = (len - (pos + step) < 1e-12 * len) ? to : cur + step * dir;
            if (++expansions > cfg.max_expansions)
                throw OutOfDisk("continuation step budget exhausted near a pole");
            CSeries w = fundamental_series(sys, cur, cfg.order);
            if (cfg.track_error) {
                CMatBall e = evaluate_series_ball(w, next, cfg.step_fraction);
                err = product_err(e.value, e.err, m, err);
                m = e.value * m;
            } else {
                CMat e = evaluate_series(w, next, cfg.step_fraction);
                m = e * m;
            }
            pos += step;
            cur = next;
        }
    }
    if (cfg.track_error && max_entry(err) > cfg.tol)
        throw PrecisionLoss("tracked continuation error " + std::to_string(max_entry(err)) +
                            " exceeds tolerance " + std::to_string(cfg.tol));
    return m;
}

CMat continue_along(const RFMat& a, const Loop& loop, const ContinuationConfig& cfg) {
    RatFuncSystem sys(a);
    return continue_along(sys, loop, cfg);
}

MonodromyRep monodromy_rep(const LocalSystem& sys, std::vector<Loop> loops,
                           const ContinuationConfig& cfg) {
    MonodromyRep rep;
    if (loops.empty()) return rep;
    rep.base = loops[0].base;
    for (const Loop& l : loops)
        if (std::abs(l.base - rep.base) > 1e-12 * (1.0 + std::abs(rep.base)))
            throw ContractViolation("representation loops must share one base point");
    rep.loops = std::move(loops);
    rep.matrices.assign(rep.loops.size(), CMat());
    run_parallel(cfg.jobs, static_cast<int>(rep.loops.size()),
                 [&](int k) { rep.matrices[static_cast<size_t>(k)] = continue_along(sys, rep.loops[static_cast<size_t>(k)], cfg); });
    return rep;
}

MonodromyRep monodromy_rep(const RFMat& a, const ContinuationConfig& cfg) {
    RatFuncSystem sys(a);
    if (sys.poles().empty()) {
        MonodromyRep rep;
        rep.base = cd(0.0, 0.0);
        return rep;
    }
    double base = default_base(sys.poles());
    return monodromy_rep(sys, standard_loops(sys.poles(), base), cfg);
}

ConjugationCheck check_conjugation_formula(const RFMat& a, const std::vector<Loop>& loops,
                                           const ContinuationConfig& cfg) {
    ConjugationCheck out;
    if (loops.empty()) return out;
    if (std::abs(loops[0].base.imag()) > 1e-12 * (1.0 + std::abs(loops[0].base)))
        throw ContractViolation("conjugation check requires a real base point");
    RatFuncSystem sys(a);
    RatFuncSystem sys_conj(conj(a));
    out.per_loop.assign(loops.size(), 0.0);
    run_parallel(cfg.jobs, static_cast<int>(loops.size()), [&](int k) {
        const Loop& l = loops[static_cast<size_t>(k)];
        CMat m = continue_along(sys, l, cfg);
        CMat mc = continue_along(sys_conj, mirror_loop(l), cfg);
        out.per_loop[static_cast<size_t>(k)] = max_dev(mc, conj(m));
    });
    for (double d : out.per_loop) out.max_dev = std::max(out.max_dev, d);
    return out;
}

}  // namespace monodesc
