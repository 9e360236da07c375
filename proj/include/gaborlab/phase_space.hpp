#pragma once
#include <complex>
#include <vector>

#include "gaborlab/exec.hpp"

// Phase-space point sets and their counting functions.
//
// A point (xi, eta) stands for the time-frequency shift by xi in time and
// eta in frequency; identified with the complex number xi + i*eta when a
// modulus or an inverse square is needed.  Angles live in (0, 2pi], with the
// positive real axis assigned 2pi, and sectors are half-open (theta,
// vartheta].  Membership in a disk of radius r is strict, with a 1e-12
// relative guard band under which "on the boundary" counts as outside.

namespace gaborlab {

struct PhasePoint {
    double xi = 0.0;
    double eta = 0.0;

    double modulus2() const { return xi * xi + eta * eta; }
    double modulus() const;
    double angle() const;  // in (0, 2pi]; positive real axis = 2pi
    std::complex<double> to_complex() const { return {xi, eta}; }
    bool operator==(const PhasePoint& o) const { return xi == o.xi && eta == o.eta; }
};

enum class PointSetKind { AxesTheorem1, Lattice, LatticeMinusPoint, Explicit };

// AxesTheorem1 is the fixed set {(-1,0),(1,0)} together with (0,±sqrt(2n))
// and (±sqrt(2n),0) for n >= 1.  Lattices are a*Z x b*Z; the origin is a
// lattice point but is dropped from every generated list (inverse squares
// are undefined there) with a notice on stderr.  LatticeMinusPoint drops one
// further named node.  Explicit lists must be distinct and away from the
// origin.
struct PointSetSpec {
    PointSetKind kind = PointSetKind::AxesTheorem1;
    double a = 1.0;
    double b = 1.0;
    PhasePoint omitted{};
    std::vector<PhasePoint> points;

    static PointSetSpec axes_theorem1();
    static PointSetSpec lattice(double a, double b);
    static PointSetSpec lattice_minus_point(double a, double b, PhasePoint omitted);
    static PointSetSpec explicit_list(std::vector<PhasePoint> pts);
};

struct SectorCount {
    double r = 0.0;
    double theta = 0.0;
    double vartheta = 0.0;
    long long count = 0;
};

struct DensityEstimate {
    double theta = 0.0;
    double vartheta = 0.0;
    std::vector<double> r_ladder;
    std::vector<long long> counts;
    std::vector<double> values;  // count / (pi r^2) per rung
    double extrapolated = 0.0;   // value at the largest rung; no fitting
};

// All points of the set with modulus strictly below radius, sorted by
// (modulus, angle); deterministic.
std::vector<PhasePoint> generate_points(const PointSetSpec& spec, double radius);

// Number of points with modulus < r and angle in (theta, vartheta].
// Preconditions: r > 0 and 0 <= theta < vartheta <= 2pi.
SectorCount count_sector(const PointSetSpec& spec, double r, double theta, double vartheta);

// Sector counts divided by pi r^2 along an increasing ladder of at least
// three radii; the largest rung is reported as the extrapolated density.
DensityEstimate angular_density(const PointSetSpec& spec, double theta, double vartheta,
                                const std::vector<double>& r_ladder, Exec exec = Exec::parallel);

// Sum of lambda^{-2} over the generated points with |lambda| < r, taken as
// complex numbers; compensated summation keeps the shell cancellations exact.
std::complex<double> inverse_square_partial_sum(const PointSetSpec& spec, double r);

// Convention helpers (exposed because counting and generation must agree).
double angle_in_0_2pi(double xi, double eta);
bool strictly_inside(double modulus2, double radius2);

}  // namespace gaborlab
