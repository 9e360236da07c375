#pragma once
#include <complex>
#include <string>

// Time-domain function catalog built around the normalized Gaussian window
// g(t) = 2^{1/4} e^{-pi t^2}.  Members are the window itself, its
// time-frequency shifts e^{2 pi i y t} g(t - x), and the monomial-weighted
// windows t^k g(t) (unnormalized; norm_l2 reports the exact norm so callers
// can normalize when a contract requires a unit-norm member).
//
// Every member has the shape scale * t^degree * exp(-pi t^2 + beta t +
// gamma); exponent_form() exposes that decomposition so integral transforms
// can complete the square once and integrate on a shifted contour instead of
// fighting oscillation on the real line.

namespace gaborlab {

enum class TimeFunctionKind { Gaussian, ShiftedGaussian, MonomialGaussian };

struct TimeFunctionSpec {
    TimeFunctionKind kind = TimeFunctionKind::Gaussian;
    double x = 0.0;  // time shift      (ShiftedGaussian)
    double y = 0.0;  // frequency shift (ShiftedGaussian)
    int k = 0;       // monomial degree (MonomialGaussian), 0 <= k <= 8

    static TimeFunctionSpec gaussian();
    static TimeFunctionSpec shifted_gaussian(double x, double y);
    static TimeFunctionSpec monomial_gaussian(int k);  // throws if k outside [0, 8]

    std::string describe() const;
};

// f(t) = scale * t^degree * exp(-pi t^2 + beta t + gamma).
struct GaussianExponentForm {
    double scale = 0.0;
    int degree = 0;
    std::complex<double> beta{0.0, 0.0};
    double gamma = 0.0;
};

GaussianExponentForm exponent_form(const TimeFunctionSpec& f);

// Value at a (possibly complex) argument; complex arguments are what the
// shifted-contour quadrature feeds in.
std::complex<double> time_function_eval(const TimeFunctionSpec& f, std::complex<double> t);

// Exact L^2 norm: 1 for Gaussian and ShiftedGaussian; for MonomialGaussian
// the closed form sqrt((2k-1)!! / (4 pi)^k).
double time_function_norm(const TimeFunctionSpec& f);

}  // namespace gaborlab
