#pragma once

#include <complex>
#include <vector>

#include "monodesc/errors.hpp"

namespace monodesc {

// Closed polygonal loop. vertices.front() == vertices.back() == base.
struct Loop {
    std::complex<double> base{0.0, 0.0};
    std::vector<std::complex<double>> vertices;
};

double diameter(const std::vector<std::complex<double>>& pts);

// Default base point: to the left of every pole, one diameter plus one away.
double default_base(const std::vector<std::complex<double>>& s);

// Minimum admissible distance between a loop and any pole.
double clearance_min(const std::vector<std::complex<double>>& s, std::complex<double> base);

double dist_point_segment(std::complex<double> p, std::complex<double> a, std::complex<double> b);

// Signed winding number of a closed polygon around p (crossing count).
int winding_number(const Loop& loop, std::complex<double> p);

// Checks closedness and pole clearance; throws DegenerateGeometry.
void validate_loop(const Loop& loop, const std::vector<std::complex<double>>& poles,
                   double clearance);

// One loop per pole, in input order: straight approach from the base with
// deterministic detours around intervening poles, then a counterclockwise
// square head around the target pole, then the approach reversed. The
// construction is conjugation-equivariant: for a conjugate-closed pole set,
// the loop of conj(s) is the reversed conjugate of the loop of s.
std::vector<Loop> standard_loops(const std::vector<std::complex<double>>& s, double base);

// Conjugated vertices in the same traversal order (no orientation flip).
Loop mirror_loop(const Loop& loop);

// Concatenation: follow a first, then b. Bases must coincide.
Loop concat_loops(const Loop& a, const Loop& b);

// Same path with every segment split at its midpoint.
Loop refine_loop(const Loop& loop);

}  // namespace monodesc
