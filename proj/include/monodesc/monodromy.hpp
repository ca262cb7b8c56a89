#pragma once

#include <vector>

#include "monodesc/loops.hpp"
#include "monodesc/series.hpp"

namespace monodesc {

struct ContinuationConfig {
    int order = 64;             // truncation order of each local series
    double step_fraction = 0.5; // step <= step_fraction * distance to nearest pole
    double max_step = 4.0;      // absolute cap, for pole-free directions
    double tol = 1e-8;          // acceptance tolerance for tracked error / checks
    bool track_error = false;   // propagate ball error bounds; PrecisionLoss on overflow
    int jobs = 1;               // worker threads for independent loops / columns
    long max_expansions = 500000;
};

// Transport of the identity-normalized solution germ at loop.base around the
// loop by repeated re-expansion; returns the germ's value back at the base.
// For a loop followed by another, matrices compose in reverse order:
// continuing along (a then b) yields M_b * M_a.
CMat continue_along(const LocalSystem& sys, const Loop& loop, const ContinuationConfig& cfg);
CMat continue_along(const RFMat& a, const Loop& loop, const ContinuationConfig& cfg);

struct MonodromyRep {
    std::complex<double> base{0.0, 0.0};
    std::vector<Loop> loops;
    std::vector<CMat> matrices;
};

MonodromyRep monodromy_rep(const LocalSystem& sys, std::vector<Loop> loops,
                           const ContinuationConfig& cfg);

// Standard loops around the finite poles of a; empty rep when there are none.
MonodromyRep monodromy_rep(const RFMat& a, const ContinuationConfig& cfg);

struct ConjugationCheck {
    std::vector<double> per_loop;
    double max_dev = 0.0;
};

// Deviation of the conjugated system's monodromy along mirrored loops from
// the conjugate of the original monodromy; requires a real base point.
ConjugationCheck check_conjugation_formula(const RFMat& a, const std::vector<Loop>& loops,
                                           const ContinuationConfig& cfg);

}  // namespace monodesc
