#pragma once
#include <complex>
#include <vector>

#include "gaborlab/exec.hpp"
#include "gaborlab/phase_space.hpp"
#include "gaborlab/time_function.hpp"

// Time-domain side of the laboratory: time-frequency shifts of the
// normalized Gaussian window, their exact pairwise inner products, and
// finite-section diagnostics (Gram spectra, biorthogonal-system residuals,
// distance-to-span ladders) for shift systems over a phase-space point set.
//
// Inner products are closed forms, locked against an adaptive-quadrature
// oracle in the test suite:
//   <rho_l g, rho_m g> = e^{i pi (y_l - y_m)(x_l + x_m)}
//                        e^{-(pi/2)((x_l-x_m)^2 + (y_l-y_m)^2)}
// with the convention that the inner product is linear in its first slot.

namespace gaborlab {

// e^{2 pi i y t} g(t - x) at a real time t.
std::complex<double> tf_shift_eval(double x, double y, double t);

// Exact inner product of two shifted windows (see the closed form above).
std::complex<double> gauss_inner_product(PhasePoint lambda, PhasePoint mu);

struct GramSection {
    std::vector<PhasePoint> points;
    std::vector<std::complex<double>> entries;  // row-major size() x size()
    double sigma_min = 0.0;
    double sigma_max = 0.0;

    std::size_t size() const { return points.size(); }
};

// Gram matrix of the shift system over the points of `spec` inside `radius`,
// with its extreme eigenvalues (= singular values; the matrix is Hermitian
// positive semidefinite).  Sections are capped at 400 points: beyond that a
// dense eigensolve stops being interactive, and the request is rejected
// rather than silently subsampled.
GramSection gram_section(const PointSetSpec& spec, double radius, Exec exec = Exec::parallel);

struct BiorthogonalReport {
    std::vector<PhasePoint> points;
    double residual_matrix_deviation = 0.0;  // max |(G C - I)_{ij}|
    double regularization = 0.0;             // the value actually used
};

// Solves the finite-section biorthogonality equations G C = I by Tikhonov
// least squares (spectral filter w -> w/(w^2 + reg^2)) and reports the worst
// entrywise deviation from the identity.  A numerically singular section
// with reg = 0 is an error advising a positive regularization, never a
// silent pseudo-inverse.
BiorthogonalReport biorthogonal_residual(const PointSetSpec& spec, double radius,
                                         double regularization, Exec exec = Exec::parallel);

// L^2 distance from the (internally normalized) target to the span of the
// shift system truncated at each ladder radius.  Computed from the Gram
// section and closed-form cross inner products; mathematically nonincreasing
// along the ladder since the spans are nested.  Sections that lose rank at
// the eigenvalue cutoff 1e-14 * sigma_max are handled by dropping the
// deficient directions, with a notice on stderr.
std::vector<double> completeness_residual(const TimeFunctionSpec& target,
                                          const PointSetSpec& spec,
                                          const std::vector<double>& radius_ladder,
                                          Exec exec = Exec::parallel);

namespace detail {

// <f, rho_{(a,b)} g> in closed form for every time-catalog member (f taken
// unnormalized).  Exposed so tests can pit it against direct quadrature.
std::complex<double> pair_with_shift(const TimeFunctionSpec& f, PhasePoint p);

}  // namespace detail

}  // namespace gaborlab
