#pragma once
#include <complex>
#include <random>
#include <vector>

#include "gaborlab/entire_function.hpp"
#include "gaborlab/exec.hpp"

// Radial growth diagnostics for entire functions of order two: directional
// growth exponents ("indicator" values h(theta) ~ log|F(r e^{i theta})|/r^2
// along a radius ladder), the angular-average density they induce, a
// zero-counting vs. circle-average consistency check, and the support-style
// envelope machinery for admissible direction sets (pairwise gaps <= pi/2).

namespace gaborlab {

struct IndicatorProfile {
    std::vector<double> thetas;         // uniform grid on [0, 2 pi)
    std::vector<double> h_values;       // estimated directional exponent per angle
    std::vector<double> r_ladder;       // full ladder used (top half enters the estimate)
    std::vector<double> fit_residuals;  // spread (max-min) of the surviving rung values
};

// Directional exponent estimate.  For each of theta_count uniform angles the
// top half of the radius ladder is evaluated; rungs whose sample point lands
// within 0.3/sqrt(r) of a cataloged zero are nudged by half an angular step
// (at most twice) and skipped if still excluded; h(theta) is the max of
// log|F|/r^2 over the surviving rungs.  Functions without a zero catalog are
// sampled as-is.  Throws std::runtime_error if every top rung is excluded at
// some angle (ladder too sparse for the zero pattern).
IndicatorProfile estimate_indicator(const EntireFunctionSpec& F, int theta_count,
                                    const std::vector<double>& r_ladder,
                                    Exec exec = Exec::parallel);

// Angular average of the profile against the order-two normalization:
// (1/pi^2) Int h(theta) dtheta by the periodic trapezoid rule.
double levin_density(const IndicatorProfile& profile);

struct JensenReport {
    double r = 0.0;
    double lhs = 0.0;  // sum of mult * log(r/|z0|) over cataloged zeros inside
    double rhs = 0.0;  // circle average of log|F| minus log|F(0)|
};

// Zero-counting consistency check on |z| <= r: the cataloged-zero sum must
// match the circle average of log|F| (both sides reported; callers compare).
// Requires a zero catalog and |F(0)| > 1e-8; throws std::runtime_error when a
// zero sits within 1e-6 of the circle (move r instead of fighting the log
// singularity).
JensenReport jensen_check(const EntireFunctionSpec& F, double r);

// An admissible direction set: angles sorted strictly increasing in [0, 2 pi)
// with every circular gap (wraparound included) at most pi/2 + 1e-6 (the slack
// admits boundary-case sets whose angles are written to a few digits).
class DirectionSet {
  public:
    explicit DirectionSet(std::vector<double> angles);
    const std::vector<double>& angles() const { return angles_; }

  private:
    std::vector<double> angles_;
};

// Envelope value H(theta) = (pi/2) cos(2 delta), delta the circular distance
// to the nearest direction.  Ties at sector midpoints resolve to either side
// (the two candidate values coincide there).
double h_envelope(const DirectionSet& dirs, double theta);

struct LevelCheckReport {
    double integral = 0.0;  // Int_0^{2 pi} H(theta) dtheta
    bool passes = false;    // integral >= 2 pi - 1e-6
};

// Integrates the envelope exactly-in-structure: per sector between adjacent
// directions the integrand is smooth (the kink sits at the midpoint), so each
// half-sector gets its own composite Simpson rule, giving ~1e-9 accuracy and
// making the equality case (gaps exactly pi/2) land on 2 pi to quadrature
// precision.
LevelCheckReport level_inequality_check(const DirectionSet& dirs);

// Seeded sweep helper: a random admissible direction set (5 to 12 directions,
// gaps rescaled to close the circle, rejection-sampled to keep every gap at
// most pi/2, with a deterministic equal-gap fallback).
DirectionSet random_direction_set(std::mt19937_64& rng);

struct ConvexityFloorReport {
    double worst_margin = 0.0;          // most negative (h - floor) over all maxima windows
    std::vector<double> maxima_thetas;  // detected local maxima of the smoothed profile
};

// Checks the trigonometric-floor property of indicator profiles: around each
// local maximum theta0 of the (3-tap smoothed) profile, h(theta) must stay
// above h(theta0) cos(2 (theta - theta0)) for |theta - theta0| <= pi/4.
// Margins use the raw (unsmoothed) values; smoothing only locates maxima.
// Plateau ties report the leftmost index; a constant profile has no maxima
// and reports margin 0.
ConvexityFloorReport convexity_floor_check(const IndicatorProfile& profile);

}  // namespace gaborlab
