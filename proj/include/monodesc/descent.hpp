#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "monodesc/monodromy.hpp"
#include "monodesc/ratfunc.hpp"

namespace monodesc {

// Gauge action on systems: Y = C V turns Y' = A Y into V' = B V with
//   B = C^{-1} A C - C^{-1} C'.
// C must be invertible over the rational-function field.
RFMat gauge_transform(const RFMat& a, const RFMat& c);

// Exact check that gauge_transform(a, c) == b.
bool check_equivalence(const RFMat& a, const RFMat& b, const RFMat& c);

// Constant invertible C over Q(i) with C^{-1} A C = B, if one exists in the
// solution space of the exact linear system A C = C B. The nullspace is
// computed exactly; the invertible representative is found by a
// deterministic seeded search.
std::optional<QiMat> find_constant_gauge(const RFMat& a, const RFMat& b, unsigned seed = 1);

// Galois cocycle for the conjugation action: a constant chi with
// chi * conj(chi) = I (exact).
class Cocycle {
public:
    explicit Cocycle(QiMat chi);
    static Cocycle trivial(int n);
    const QiMat& chi() const { return chi_; }
    bool is_trivial() const;
    int dim() const { return chi_.rows(); }

private:
    QiMat chi_;
};

// Splitting matrix P with conj(P) = P * chi, invertible, exact.
QiMat split_cocycle(const Cocycle& c, unsigned seed = 1);

// Regular-representation block map over the basis (1, i):
// an entry a + b*i becomes the 2x2 block [[a, -b], [b, a]].
RFMat mu_block(const RFMat& m);
QiMat mu_block(const QiMat& m);
CMat mu_block_numeric(const CMat& m);

// Real form of twice the size: twist by the cocycle (conjugating by a
// splitting matrix), then apply the block map. Every output entry is checked
// exactly for vanishing imaginary parts; NotDescendable on failure.
RFMat mu_descend(const RFMat& a, const Cocycle& chi);

struct DescentReport {
    enum class Verdict { TriviallyReal, Equivalent, NotFound };
    Verdict verdict = Verdict::NotFound;
    std::optional<QiMat> certificate;  // constant gauge C with C^{-1} A C = conj(A)
    bool certificate_exact = false;    // exact recheck of the gauge identity
    double monodromy_residual = std::numeric_limits<double>::quiet_NaN();
    int loops_checked = 0;
};

// Decides whether a is gauge-equivalent to its conjugate by a constant
// gauge, with an exact certificate and a numeric monodromy cross-check.
DescentReport descent_report(const RFMat& a, const ContinuationConfig& cfg, unsigned seed = 1);

}  // namespace monodesc
