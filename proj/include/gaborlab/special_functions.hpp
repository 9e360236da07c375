#pragma once
#include <complex>
#include <vector>

#include "gaborlab/exec.hpp"

// The entire function s(z) = (z^2 - 1) z^{-2} sin(pi z^2 / 2) and the
// Mittag-Leffler function E_{1/2}(z) = sum_k z^k / Gamma(1 + k/2).
//
// s has simple zeros exactly at ±1 and at ±sqrt(2n), ±i sqrt(2n) for n >= 1,
// with s(0) = -pi/2 after removing the singularity at the origin.  Its
// modulus grows like exp((pi/2) r^2 |sin 2θ|) away from the zeros, which
// overflows doubles well inside the validated radius, so evaluation happens
// in log-magnitude + phase form and plain values are materialized only when
// log|s| stays below 700.

namespace gaborlab {

// Value in log-magnitude + phase form: value = exp(log_abs) * e^{i arg}.
// log_abs may be -inf (an exact zero).
struct LogComplex {
    double log_abs = 0.0;
    double arg = 0.0;
    std::complex<double> to_complex() const;  // throws std::range_error above exp(700)
};

// s(z); relative accuracy ~1e-12 for |z| <= 30 away from the zeros (near a
// zero the absolute scale (1+|z|^2)*1e-14 applies; nothing can hold relative
// accuracy across a sign change).  Throws std::range_error when the value
// exceeds exp(700).
std::complex<double> eval_s(std::complex<double> z);
LogComplex eval_s_log(std::complex<double> z);

// Zeros of s with modulus < r, for exclusion disks and Jensen sums.
std::vector<std::complex<double>> s_zeros_within(double r);
// Distance from z to the nearest zero of s (the zeros sit on the two axes,
// so only a handful of shell candidates need checking).
double s_zero_distance(std::complex<double> z);

// E_{1/2}(z) for |z| <= 20, relative accuracy ~1e-9 measured against the
// larger of the two asymptotic components (the function has zeros near the
// diagonals where pointwise relative accuracy is not a meaningful target).
// Power series in binary128 up to the switch radius, asymptotic expansion
// beyond it; the expansion carries the 2 e^{z^2} term exactly when
// Re z >= 0, where the reflection E(z) = 2 e^{z^2} - E(-z) makes it exact.
std::complex<double> eval_mittag_leffler_half(std::complex<double> z);
LogComplex eval_mittag_leffler_half_log(std::complex<double> z);

// The algebraic part T(z) = E_{1/2}(z) - [Re z >= 0] * 2 e^{z^2} of the
// large-|z| expansion, available from the switch radius outward.  At
// x = 10 the subtraction E - 2e^{x^2} would need ~46 digits, so bounds on
// the deviation from 2 e^{z^2} must be checked through this function.
std::complex<double> mittag_leffler_half_tail(std::complex<double> z);

constexpr double ml_half_switch_radius = 5.5;

namespace detail {
// Both branches exposed for the switch-radius agreement test.
std::complex<double> ml_half_series(std::complex<double> z);      // |z| <= switch radius
std::complex<double> ml_half_asymptotic(std::complex<double> z);  // |z| >= switch radius
}  // namespace detail

// Growth-ratio scan of |s| against the model exp((pi/2) r^2 |sin 2θ|) over
// a polar grid, skipping points within epsilon * r^{-1/2} of a zero of s.
struct GrowthRatioPoint {
    double r = 0.0;
    double theta = 0.0;
    double log_abs_s = 0.0;
    double model_exponent = 0.0;
    double ratio = 0.0;  // NaN on excluded points
    bool excluded = false;
};

struct GrowthRatioReport {
    std::vector<GrowthRatioPoint> grid;  // r-major, theta-minor, grid order
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    long long excluded_count = 0;
};

GrowthRatioReport growth_ratio_scan(const std::vector<double>& r_list, int theta_count,
                                    double epsilon = 0.3, Exec exec = Exec::parallel);

}  // namespace gaborlab
