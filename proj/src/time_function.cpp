#include "gaborlab/time_function.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaborlab {

namespace {
constexpr double kPi = std::numbers::pi;
const double kWindowPeak = std::pow(2.0, 0.25);  // 2^{1/4}, unit L^2 norm
}  // namespace

TimeFunctionSpec TimeFunctionSpec::gaussian() { return {}; }

TimeFunctionSpec TimeFunctionSpec::shifted_gaussian(double x, double y) {
    TimeFunctionSpec f;
    f.kind = TimeFunctionKind::ShiftedGaussian;
    f.x = x;
    f.y = y;
    return f;
}

TimeFunctionSpec TimeFunctionSpec::monomial_gaussian(int k) {
    if (k < 0 || k > 8)
        throw std::invalid_argument("monomial_gaussian: degree must lie in [0, 8]");
    TimeFunctionSpec f;
    f.kind = TimeFunctionKind::MonomialGaussian;
    f.k = k;
    return f;
}

std::string TimeFunctionSpec::describe() const {
    switch (kind) {
        case TimeFunctionKind::Gaussian:
            return "gauss";
        case TimeFunctionKind::ShiftedGaussian:
            return "shift(" + std::to_string(x) + "," + std::to_string(y) + ")";
        case TimeFunctionKind::MonomialGaussian:
            return "tpow(" + std::to_string(k) + ")";
    }
    return "?";
}

GaussianExponentForm exponent_form(const TimeFunctionSpec& f) {
    GaussianExponentForm e;
    e.scale = kWindowPeak;
    switch (f.kind) {
        case TimeFunctionKind::Gaussian:
            break;
        case TimeFunctionKind::ShiftedGaussian:
            // e^{2 pi i y t} 2^{1/4} e^{-pi(t-x)^2}
            //   = 2^{1/4} e^{-pi t^2 + 2 pi (x + i y) t - pi x^2}
            e.beta = {2.0 * kPi * f.x, 2.0 * kPi * f.y};
            e.gamma = -kPi * f.x * f.x;
            break;
        case TimeFunctionKind::MonomialGaussian:
            e.degree = f.k;
            break;
    }
    return e;
}

std::complex<double> time_function_eval(const TimeFunctionSpec& f, std::complex<double> t) {
    GaussianExponentForm e = exponent_form(f);
    std::complex<double> p = 1.0;
    for (int i = 0; i < e.degree; ++i) p *= t;
    return e.scale * p * std::exp(-kPi * t * t + e.beta * t + e.gamma);
}

double time_function_norm(const TimeFunctionSpec& f) {
    if (f.kind != TimeFunctionKind::MonomialGaussian) return 1.0;
    double n2 = 1.0;  // (2k-1)!! / (4 pi)^k
    for (int j = 1; j <= f.k; ++j) n2 *= (2.0 * j - 1.0) / (4.0 * kPi);
    return std::sqrt(n2);
}

}  // namespace gaborlab
