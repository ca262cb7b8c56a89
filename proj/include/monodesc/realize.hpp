#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monodesc/descent.hpp"
#include "monodesc/monodromy.hpp"

namespace monodesc {

// Prescribed monodromy data: target generator per upper-half-plane point.
struct TargetData {
    std::vector<std::complex<double>> points;  // distinct, strictly upper half plane
    std::vector<CMat> generators;              // invertible, common size n x n
    std::optional<double> base;                // real; computed when absent
};

// Conjugation-closed pole set with mirrored targets and standard loops.
struct SymmetrizedTargets {
    int n = 0, r = 0;
    std::vector<std::complex<double>> poles;  // s_1..s_r, conj(s_1)..conj(s_r)
    double base = 0.0;
    std::vector<Loop> loops;                  // standard loops, pole order
    std::vector<CMat> targets;                // C_1..C_r, conj(C_1)..conj(C_r)
};

SymmetrizedTargets symmetrize_targets(const TargetData& t);

// Principal matrix logarithm: eigendecomposition when well conditioned,
// inverse scaling-and-squaring otherwise. Optionally reports eigenvalues and
// their chosen logarithms. Throws LogBranchFailure when no consistent branch
// exists (singular target, or defective with an eigenvalue on the cut).
CMat principal_log(const CMat& m, std::vector<std::complex<double>>* eigenvalues = nullptr,
                   std::vector<std::complex<double>>* log_eigenvalues = nullptr);

struct FuchsianNumeric {
    std::vector<std::complex<double>> poles;  // upper half first, then conjugates
    std::vector<CMat> residues;               // lower half slaved to conj(upper)
};

struct AnsatzResult {
    FuchsianNumeric system;
    std::vector<std::string> log_branches;  // one line per upper pole
};

// First-order guess B_k = log(C_k) / (2*pi*i), mirrored below the axis.
AnsatzResult residue_ansatz(const SymmetrizedTargets& st);

struct RefineOptions {
    double tol = 1e-9;
    int max_iter = 50;
    int max_halvings = 50;
    double fd_scale = 1e-6;  // forward-difference step 1e-6 * (1 + |entry|)
    ContinuationConfig cont;
};

struct RefineResult {
    FuchsianNumeric system;
    int iterations = 0;
    double residual = 0.0;
};

// Gauss-Newton on the upper residues (lower ones conjugate-slaved exactly),
// matching loop monodromies to targets. Throws NoConvergence.
RefineResult refine_residues(const FuchsianNumeric& init, const SymmetrizedTargets& st,
                             const RefineOptions& opt);

// Exact embedding into Q(i)(z) with conjugation-slaved poles and residues;
// the result satisfies conj(A) == A structurally.
RFMat rationalize_system(const FuchsianNumeric& sys, int digits);

struct RealizationReport {
    std::vector<double> loop_residuals;  // rationalized system vs targets
    double max_loop_residual = 0.0;
    double conjugation_residual = 0.0;   // mirrored-loop formula check
    double real_block_residual = 0.0;    // doubled system vs block-mapped targets
    int refine_iterations = 0;
    double refine_residual = 0.0;
    std::vector<std::string> log_branches;
    DescentReport descent;
};

struct RealizationResult {
    SymmetrizedTargets sym;
    FuchsianNumeric numeric;
    RFMat complex_system;  // n x n over Q(i)(z)
    RFMat real_system;     // 2n x 2n, exactly real
    RealizationReport report;
};

RealizationResult realize_and_descend(const TargetData& t, const RefineOptions& opt,
                                      int digits = 15);

}  // namespace monodesc
