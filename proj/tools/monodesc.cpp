// Command-line front end: solve, monodromy, conjugate-check, gauge, descend,
// realize, pipeline. Reports go to stdout behind a timestamp header line;
// --output writes the deterministic body (no timestamp) to files.
#include <CLI11.hpp>

#include <cstdio>
#include <ctime>
#include <string>

#include "monodesc/descent.hpp"
#include "monodesc/errors.hpp"
#include "monodesc/io.hpp"
#include "monodesc/monodromy.hpp"
#include "monodesc/parse.hpp"
#include "monodesc/realize.hpp"
#include "monodesc/series.hpp"

namespace md = monodesc;
using cd = std::complex<double>;

namespace {

struct CommonOpts {
    int order = 64;
    double step_fraction = 0.5;
    double tol = 1e-8;
    int jobs = 1;
    bool track_error = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--order", c.order, "series truncation order")->check(CLI::Range(2, 4096));
    cmd->add_option("--step-fraction", c.step_fraction, "step size as a fraction of the local radius")
        ->check(CLI::Range(1e-3, 0.999));
    cmd->add_option("--tol", c.tol, "tolerance for tracked error and checks")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", c.jobs, "worker threads for independent loops")
        ->check(CLI::Range(1, 256));
}

md::ContinuationConfig to_cfg(const CommonOpts& c) {
    md::ContinuationConfig cfg;
    cfg.order = c.order;
    cfg.step_fraction = c.step_fraction;
    cfg.tol = c.tol;
    cfg.jobs = c.jobs;
    cfg.track_error = c.track_error;
    return cfg;
}

void emit(const std::string& subcommand, const std::string& body, const std::string& out) {
    std::time_t t = std::time(nullptr);
    char stamp[64];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    std::printf("# monodesc %s | generated %s\n", subcommand.c_str(), stamp);
    std::fputs(body.c_str(), stdout);
    if (!out.empty()) md::write_text_file(out, body);
}

md::RFMat load_system(const std::string& path) {
    return md::parse_system(md::read_text_file(path));
}

std::vector<md::Loop> resolve_loops(const md::RFMat& a, const std::string& loops_path, bool auto_loops) {
    if (auto_loops) {
        std::vector<cd> s = md::finite_poles(a);
        if (s.empty()) throw md::ContractViolation("--auto needs at least one finite pole");
        return md::standard_loops(s, md::default_base(s));
    }
    std::vector<md::Loop> loops = md::loops_from_text(md::read_text_file(loops_path));
    if (loops.empty()) throw md::BadInput("loop file contains no loops");
    std::vector<cd> s = md::finite_poles(a);
    for (const md::Loop& l : loops) md::validate_loop(l, s, md::clearance_min(s, l.base));
    return loops;
}

std::string run_solve(const std::string& path, const std::string& center, int order,
                      const std::string& mode) {
    md::RFMat a = load_system(path);
    md::GaussianRational c = md::parse_constant(center);
    std::string body = "system: " + md::print_system(a) + "\n";
    body += "center: " + c.str() + "\norder: " + std::to_string(order) + "\nmode: " + mode + "\n";
    if (mode == "exact") {
        md::QiSeries s = md::fundamental_series_exact(a, c, order);
        for (int k = 0; k < order; ++k)
            body += "W[" + std::to_string(k) + "] = " +
                    md::print_system(s.coeffs[static_cast<size_t>(k)]) + "\n";
    } else {
        md::CSeries s = md::fundamental_series(a, c.to_complex(), order);
        body += "radius: " + md::fmt_g(s.radius) + "\n";
        for (int k = 0; k < order; ++k)
            body += "W[" + std::to_string(k) + "] = " +
                    md::fmt_cmat(s.coeffs[static_cast<size_t>(k)]) + "\n";
    }
    return body;
}

std::string conjugation_lines(const md::RFMat& a, const std::vector<md::Loop>& loops,
                              const md::ContinuationConfig& cfg) {
    md::ConjugationCheck chk = md::check_conjugation_formula(a, loops, cfg);
    std::string body;
    for (size_t k = 0; k < chk.per_loop.size(); ++k)
        body += "conjugation deviation, loop " + std::to_string(k) + ": " +
                md::fmt_g(chk.per_loop[k]) + "\n";
    body += "conjugation deviation, max: " + md::fmt_g(chk.max_dev) + "\n";
    body += std::string("within tolerance: ") + (chk.max_dev < cfg.tol ? "yes" : "no") + "\n";
    return body;
}

std::string run_monodromy(const std::string& path, const std::string& loops_path, bool auto_loops,
                          const CommonOpts& c, bool check_conj) {
    md::RFMat a = load_system(path);
    std::vector<md::Loop> loops = resolve_loops(a, loops_path, auto_loops);
    md::ContinuationConfig cfg = to_cfg(c);
    md::RatFuncSystem sys(a);
    md::MonodromyRep rep = md::monodromy_rep(sys, loops, cfg);
    std::string body = md::rep_to_text(rep);
    if (check_conj) body += conjugation_lines(a, loops, cfg);
    return body;
}

std::string run_conjugate_check(const std::string& path, const std::string& loops_path,
                                bool auto_loops, const CommonOpts& c) {
    md::RFMat a = load_system(path);
    std::vector<md::Loop> loops = resolve_loops(a, loops_path, auto_loops);
    return conjugation_lines(a, loops, to_cfg(c));
}

std::string run_gauge(const std::string& a_path, const std::string& b_path,
                      const std::string& cert_path, const std::string& apply_path, unsigned seed) {
    md::RFMat a = load_system(a_path);
    if (!apply_path.empty()) {
        md::RFMat c = load_system(apply_path);
        return "transformed system:\n" + md::print_system(md::gauge_transform(a, c)) + "\n";
    }
    if (b_path.empty())
        throw md::BadInput("gauge needs a second system unless --apply is given");
    md::RFMat b = load_system(b_path);
    if (!cert_path.empty()) {
        md::RFMat c = load_system(cert_path);
        bool ok = md::check_equivalence(a, b, c);
        return std::string("equivalent via given gauge: ") + (ok ? "yes" : "no") + "\n";
    }
    std::optional<md::QiMat> c = md::find_constant_gauge(a, b, seed);
    if (!c) return "constant gauge: none found in the search space\n";
    return "constant gauge found:\n" + md::print_system(*c) + "\nverified: exact\n";
}

std::string descent_lines(const md::DescentReport& r) {
    std::string body = "verdict: ";
    switch (r.verdict) {
        case md::DescentReport::Verdict::TriviallyReal: body += "trivially real\n"; break;
        case md::DescentReport::Verdict::Equivalent: body += "equivalent to its conjugate\n"; break;
        case md::DescentReport::Verdict::NotFound: body += "no constant certificate found\n"; break;
    }
    if (r.certificate) {
        body += "certificate: " + md::print_system(*r.certificate) + "\n";
        body += std::string("certificate exact: ") + (r.certificate_exact ? "yes" : "no") + "\n";
    }
    if (r.loops_checked > 0)
        body += "monodromy cross-check residual: " + md::fmt_g(r.monodromy_residual) + " over " +
                std::to_string(r.loops_checked) + " loops\n";
    return body;
}

std::string run_descend(const std::string& path, const std::string& cocycle_path, unsigned seed,
                        const CommonOpts& c, const std::string& out) {
    md::RFMat a = load_system(path);
    md::Cocycle chi = cocycle_path.empty()
                          ? md::Cocycle::trivial(a.rows())
                          : md::Cocycle(md::parse_constant_system(md::read_text_file(cocycle_path)));
    md::RFMat real = md::mu_descend(a, chi);
    std::string body = descent_lines(md::descent_report(a, to_cfg(c), seed));
    body += std::string("cocycle: ") + (chi.is_trivial() ? "trivial" : "supplied") + "\n";
    body += "real system:\n" + md::print_system(real) + "\n";
    if (!out.empty()) md::write_text_file(out, md::print_system(real) + "\n");
    return body;
}

std::string realize_report_common(const md::SymmetrizedTargets& st) {
    std::string body = "base: " + md::fmt_g(st.base) + "\npoles:";
    for (cd p : st.poles) body += " " + md::fmt_complex(p);
    return body + "\n";
}

std::string run_realize(const std::string& path, const md::RefineOptions& opt, int digits,
                        const std::string& out_prefix) {
    md::TargetData t = md::targets_from_text(md::read_text_file(path));
    md::SymmetrizedTargets st = md::symmetrize_targets(t);
    md::AnsatzResult ansatz = md::residue_ansatz(st);
    md::RefineResult rr = md::refine_residues(ansatz.system, st, opt);
    md::RFMat a = md::rationalize_system(rr.system, digits);

    std::string body = realize_report_common(st);
    for (size_t k = 0; k < ansatz.log_branches.size(); ++k)
        body += "log branch, pole " + std::to_string(k) + ": " + ansatz.log_branches[k] + "\n";
    body += "refine iterations: " + std::to_string(rr.iterations) + "\n";
    body += "refine residual: " + md::fmt_g(rr.residual) + "\n";

    md::RatFuncSystem sys(a);
    double worst = 0.0;
    for (size_t l = 0; l < st.loops.size(); ++l) {
        double dev = md::max_dev(md::continue_along(sys, st.loops[l], opt.cont), st.targets[l]);
        worst = std::max(worst, dev);
        body += "loop residual " + std::to_string(l) + ": " + md::fmt_g(dev) + "\n";
    }
    body += "max loop residual: " + md::fmt_g(worst) + "\n";
    body += "complex system:\n" + md::print_system(a) + "\n";
    if (!out_prefix.empty()) {
        md::write_text_file(out_prefix + ".complex.sys", md::print_system(a) + "\n");
        md::write_text_file(out_prefix + ".report.txt", body);
    }
    return body;
}

std::string run_pipeline(const std::string& path, const md::RefineOptions& opt, int digits,
                         const std::string& out_prefix) {
    md::TargetData t = md::targets_from_text(md::read_text_file(path));
    md::RealizationResult res = md::realize_and_descend(t, opt, digits);
    const md::RealizationReport& rep = res.report;

    std::string body = realize_report_common(res.sym);
    for (size_t k = 0; k < rep.log_branches.size(); ++k)
        body += "log branch, pole " + std::to_string(k) + ": " + rep.log_branches[k] + "\n";
    body += "refine iterations: " + std::to_string(rep.refine_iterations) + "\n";
    body += "refine residual: " + md::fmt_g(rep.refine_residual) + "\n";
    for (size_t l = 0; l < rep.loop_residuals.size(); ++l)
        body += "loop residual " + std::to_string(l) + ": " + md::fmt_g(rep.loop_residuals[l]) + "\n";
    body += "max loop residual: " + md::fmt_g(rep.max_loop_residual) + "\n";
    body += "conjugation residual: " + md::fmt_g(rep.conjugation_residual) + "\n";
    body += "real block residual: " + md::fmt_g(rep.real_block_residual) + "\n";
    body += descent_lines(rep.descent);
    body += "complex system:\n" + md::print_system(res.complex_system) + "\n";
    body += "real system:\n" + md::print_system(res.real_system) + "\n";
    if (!out_prefix.empty()) {
        md::write_text_file(out_prefix + ".complex.sys", md::print_system(res.complex_system) + "\n");
        md::write_text_file(out_prefix + ".real.sys", md::print_system(res.real_system) + "\n");
        md::write_text_file(out_prefix + ".report.txt", body);
    }
    return body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear differential systems over C(z)/R(z): series solutions, monodromy, "
                 "descent, and constructive realization"};
    app.require_subcommand(1);

    std::string matrix_path, loops_path, center = "0", mode = "float", output;
    std::string b_path, cert_path, apply_path, cocycle_path;
    bool auto_loops = false, check_conj = false;
    int solve_order = 8, digits = 15;
    unsigned seed = 1;
    CommonOpts common;
    md::RefineOptions ropt;

    CLI::App* solve = app.add_subcommand("solve", "truncated fundamental solution at a point");
    solve->add_option("matrix", matrix_path, "system definition file")->required();
    solve->add_option("--center", center, "expansion point (constant expression)");
    solve->add_option("--order", solve_order, "number of coefficients")->check(CLI::Range(1, 4096));
    solve->add_option("--mode", mode, "float | exact")
        ->check(CLI::IsMember({"float", "exact"}));
    solve->add_option("--output", output, "write the report body to this file");

    CLI::App* mono = app.add_subcommand("monodromy", "monodromy representation along loops");
    mono->add_option("matrix", matrix_path, "system definition file")->required();
    mono->add_option("--loops", loops_path, "loop file (JSON)");
    mono->add_flag("--auto", auto_loops, "standard loops around the finite poles");
    mono->add_flag("--check-conjugation", check_conj, "append the mirrored-loop formula check");
    mono->add_flag("--track-error", common.track_error, "propagate ball error bounds");
    mono->add_option("--output", output, "write the report body to this file");
    add_common(mono, common);

    CLI::App* cc = app.add_subcommand("conjugate-check", "mirrored-loop conjugation formula check");
    cc->add_option("matrix", matrix_path, "system definition file")->required();
    cc->add_option("--loops", loops_path, "loop file (JSON)");
    cc->add_flag("--auto", auto_loops, "standard loops around the finite poles");
    cc->add_option("--output", output, "write the report body to this file");
    add_common(cc, common);

    CLI::App* gauge = app.add_subcommand("gauge", "gauge equivalence: search, check, or apply");
    gauge->add_option("a", matrix_path, "first system")->required();
    gauge->add_option("b", b_path, "second system (target of the gauge)");
    gauge->add_option("--certificate", cert_path, "gauge matrix file to check");
    gauge->add_option("--apply", apply_path, "gauge matrix file to apply to the first system");
    gauge->add_option("--seed", seed, "seed for the certificate search");
    gauge->add_option("--output", output, "write the report body to this file");

    CLI::App* desc = app.add_subcommand("descend", "real form via the regular-representation block map");
    desc->add_option("matrix", matrix_path, "system definition file")->required();
    desc->add_option("--cocycle", cocycle_path, "constant cocycle matrix file");
    desc->add_option("--seed", seed, "seed for the certificate search");
    desc->add_option("--output", output, "write the real system to this file");
    add_common(desc, common);

    CLI::App* real = app.add_subcommand("realize", "Fuchsian system matching target monodromy");
    real->add_option("targets", matrix_path, "target data file (JSON)")->required();
    real->add_option("--max-iter", ropt.max_iter, "refinement iteration cap")->check(CLI::Range(1, 1000));
    real->add_option("--newton-tol", ropt.tol, "refinement residual target")->check(CLI::PositiveNumber);
    real->add_option("--digits", digits, "significant digits kept when rationalizing")
        ->check(CLI::Range(3, 18));
    real->add_option("--output", output, "prefix for .complex.sys and .report.txt files");
    add_common(real, common);

    CLI::App* pipe = app.add_subcommand("pipeline", "realize targets, then descend to a real system");
    pipe->add_option("targets", matrix_path, "target data file (JSON)")->required();
    pipe->add_option("--max-iter", ropt.max_iter, "refinement iteration cap")->check(CLI::Range(1, 1000));
    pipe->add_option("--newton-tol", ropt.tol, "refinement residual target")->check(CLI::PositiveNumber);
    pipe->add_option("--digits", digits, "significant digits kept when rationalizing")
        ->check(CLI::Range(3, 18));
    pipe->add_option("--output", output, "prefix for .complex.sys, .real.sys, .report.txt files");
    add_common(pipe, common);

    try {
        app.parse(argc, argv);
        if (mono->parsed() || cc->parsed()) {
            if (!auto_loops && loops_path.empty())
                throw md::BadInput("either --loops or --auto is required");
        }
        if (solve->parsed()) emit("solve", run_solve(matrix_path, center, solve_order, mode), output);
        if (mono->parsed())
            emit("monodromy", run_monodromy(matrix_path, loops_path, auto_loops, common, check_conj),
                 output);
        if (cc->parsed())
            emit("conjugate-check", run_conjugate_check(matrix_path, loops_path, auto_loops, common),
                 output);
        if (gauge->parsed())
            emit("gauge", run_gauge(matrix_path, b_path, cert_path, apply_path, seed), output);
        if (desc->parsed())
            emit("descend", run_descend(matrix_path, cocycle_path, seed, common, output), "");
        if (real->parsed() || pipe->parsed()) {
            ropt.cont = to_cfg(common);
            if (real->parsed()) emit("realize", run_realize(matrix_path, ropt, digits, output), "");
            if (pipe->parsed()) emit("pipeline", run_pipeline(matrix_path, ropt, digits, output), "");
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const md::NoConvergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const md::PrecisionLoss& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const md::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const md::BadInput& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const md::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 4;
    }
    return 0;
}
