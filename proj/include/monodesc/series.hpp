#pragma once

#include <complex>
#include <memory>
#include <utility>
#include <vector>

#include "monodesc/ratfunc.hpp"

namespace monodesc {

// Truncated matrix power series about a center, with the distance to the
// nearest finite pole as its trust radius (infinity when there is none).
struct CSeries {
    std::complex<double> center{0.0, 0.0};
    double radius = 0.0;
    std::vector<CMat> coeffs;  // W_0 .. W_{order-1}
};

struct QiSeries {
    GaussianRational center;
    double radius = 0.0;
    std::vector<QiMat> coeffs;
};

// Value matrix with entrywise error radii, for tracked evaluation.
struct CMatBall {
    CMat value;
    Mat<double> err;
};

// Local-expansion provider: anything that can produce the Taylor
// coefficients of the system matrix about an ordinary point.
class LocalSystem {
public:
    virtual ~LocalSystem() = default;
    virtual int dim() const = 0;
    virtual const std::vector<std::complex<double>>& poles() const = 0;
    virtual std::vector<CMat> expand(std::complex<double> center, int order) const = 0;
};

// Provider backed by a rational-function matrix; numerator/denominator
// coefficients are cached as complex doubles once.
class RatFuncSystem final : public LocalSystem {
public:
    explicit RatFuncSystem(const RFMat& a);
    int dim() const override { return n_; }
    const std::vector<std::complex<double>>& poles() const override { return poles_; }
    std::vector<CMat> expand(std::complex<double> center, int order) const override;

private:
    struct Entry {
        std::vector<std::complex<double>> num, den;
    };
    int n_ = 0;
    std::vector<Entry> entries_;
    std::vector<std::complex<double>> poles_;
};

// Provider for a Fuchsian sum  A(z) = sum_k B_k / (z - s_k).
class ResidueSystem final : public LocalSystem {
public:
    ResidueSystem(std::vector<std::complex<double>> poles, std::vector<CMat> residues);
    int dim() const override { return n_; }
    const std::vector<std::complex<double>>& poles() const override { return poles_; }
    std::vector<CMat> expand(std::complex<double> center, int order) const override;
    const std::vector<CMat>& residues() const { return residues_; }

private:
    int n_ = 0;
    std::vector<std::complex<double>> poles_;
    std::vector<CMat> residues_;
};

// Roots of a polynomial over Q(i), as complex doubles. Closed forms for
// degree <= 2, companion-matrix eigenvalues above that.
std::vector<std::complex<double>> poly_roots(const Poly& p);

// Deduplicated union of the denominator roots of all entries.
std::vector<std::complex<double>> finite_poles(const RFMat& a);

double distance_to_nearest(const std::vector<std::complex<double>>& pts, std::complex<double> z);

// Truncated fundamental solution W with W(center) = W0 (identity when null)
// and W' = A W, via the convolution recursion
//   i * W_i = sum_{j+k=i-1} A_j W_k.
CSeries fundamental_series(const LocalSystem& sys, std::complex<double> center, int order,
                           const CMat* w0 = nullptr);
CSeries fundamental_series(const RFMat& a, std::complex<double> center, int order,
                           const CMat* w0 = nullptr);
QiSeries fundamental_series_exact(const RFMat& a, const GaussianRational& center, int order,
                                  const QiMat* w0 = nullptr);

// Horner evaluation; refuses points outside step_fraction * radius.
CMat evaluate_series(const CSeries& s, std::complex<double> point, double step_fraction);
QiMat evaluate_series_exact(const QiSeries& s, const GaussianRational& point, double step_fraction);

// Same value plus entrywise error radii: rounding/ball propagation plus a
// geometric tail bound for the truncated remainder.
CMatBall evaluate_series_ball(const CSeries& s, std::complex<double> point, double step_fraction);

}  // namespace monodesc
