#include "gaborlab/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gaborlab {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// sin(w) for complex w in log-magnitude + phase form.
//
// sin(u + iv) = sin u cosh v + i cos u sinh v, and |sin w|^2 = sin^2 u +
// sinh^2 v.  cosh/sinh overflow near |v| = 710 while the validated |z| <= 30
// pushes |v| = (pi/2)|Im z^2| up to ~1414, so for large |v| we use
// sin(u+iv) = (e^{|v|}/2) (sin u ± i cos u) (1 + O(e^{-2|v|})), whose
// correction is below 1e-26 once |v| > 30.
// ---------------------------------------------------------------------------
LogComplex log_sin(std::complex<double> w) {
    const double u = w.real(), v = w.imag();
    const double av = std::abs(v);
    if (av <= 30.0) {
        std::complex<double> s = std::sin(w);
        return {std::log(std::abs(s)), std::arg(s)};
    }
    const double sgn = v > 0.0 ? 1.0 : -1.0;
    std::complex<double> dir{std::sin(u), sgn * std::cos(u)};  // unit modulus
    return {av - std::numbers::ln2, std::arg(dir)};
}

// ---------------------------------------------------------------------------
// binary128 complex arithmetic for the E_{1/2} power series.  The series
// cancels e^{|z|^2}-sized partial terms down to O(1/|z|) near the negative
// real axis; at the switch radius that costs ~13 decimal digits, which
// binary128 absorbs with ~20 to spare while double (even with compensated
// summation of exactly-rounded terms) cannot.
// ---------------------------------------------------------------------------
struct QComplex {
    __float128 re, im;
};

inline QComplex qadd(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
inline QComplex qmul(QComplex a, QComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline QComplex qscale(QComplex a, __float128 s) { return {a.re * s, a.im * s}; }
inline double qmag(QComplex a) {
    double r = static_cast<double>(a.re), i = static_cast<double>(a.im);
    return std::abs(r) + std::abs(i);
}

// 2/sqrt(pi) split into two doubles; their binary128 sum is accurate to
// ~5e-34, enough for the series' target of ~1e-19 relative after the
// cancellation loss.
constexpr double kTwoOverSqrtPiHi = 1.1283791670955126;
constexpr double kTwoOverSqrtPiLo = 1.533545961316588e-17;
constexpr double kOneOverSqrtPi = 0.5641895835477563;

}  // namespace

std::complex<double> LogComplex::to_complex() const {
    if (log_abs > 700.0)
        throw std::range_error("value exceeds exp(700); use the log form");
    double m = std::exp(log_abs);  // underflows gracefully to 0 near zeros
    return {m * std::cos(arg), m * std::sin(arg)};
}

LogComplex eval_s_log(std::complex<double> z) {
    const double az = std::abs(z);
    if (az < 1e-2) {
        // (z^2-1) z^{-2} sin(pi z^2/2) = (z^2-1)(pi/2) * sinc(pi z^2/2) with
        // sinc(x) = sin(x)/x; |x| < 1.6e-4 here, so three series terms reach
        // machine accuracy.
        std::complex<double> x = kPi * z * z * 0.5;
        std::complex<double> sinc = 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
        std::complex<double> val = (z * z - 1.0) * (kPi / 2.0) * sinc;
        return {std::log(std::abs(val)), std::arg(val)};
    }
    std::complex<double> z2 = z * z;
    LogComplex s = log_sin(kPi * z2 * 0.5);
    std::complex<double> pre = (z2 - 1.0) / z2;
    return {s.log_abs + std::log(std::abs(pre)), s.arg + std::arg(pre)};
}

std::complex<double> eval_s(std::complex<double> z) {
    if (z == std::complex<double>(0.0, 0.0)) return {-kPi / 2.0, 0.0};
    return eval_s_log(z).to_complex();
}

std::vector<std::complex<double>> s_zeros_within(double r) {
    std::vector<std::complex<double>> zs;
    const double r2 = r * r;
    if (1.0 < r2) {
        zs.emplace_back(1.0, 0.0);
        zs.emplace_back(-1.0, 0.0);
    }
    for (long long n = 1; 2.0 * static_cast<double>(n) < r2; ++n) {
        double s = std::sqrt(2.0 * static_cast<double>(n));
        zs.emplace_back(s, 0.0);
        zs.emplace_back(-s, 0.0);
        zs.emplace_back(0.0, s);
        zs.emplace_back(0.0, -s);
    }
    return zs;
}

double s_zero_distance(std::complex<double> z) {
    // The sqrt(2n) shells lie on both axes; the nearest candidates on each
    // axis are the shells bracketing the projected coordinate.
    double best = std::numeric_limits<double>::infinity();
    const double coords[2][2] = {{z.real(), z.imag()}, {z.imag(), z.real()}};
    for (auto& c : coords) {
        double along = std::abs(c[0]), off = c[1];
        long long n0 = std::llround(along * along / 2.0);
        for (long long dn = -1; dn <= 1; ++dn) {
            long long n = std::max<long long>(1, n0 + dn);
            best = std::min(best, std::hypot(along - std::sqrt(2.0 * static_cast<double>(n)), off));
        }
    }
    // The unit-modulus pair sits on the real axis only: z^2 = 1 has the two
    // solutions +-1, and s(+-i) = -2 is not a zero.
    best = std::min(best, std::hypot(std::abs(z.real()) - 1.0, z.imag()));
    return best;
}

namespace detail {

std::complex<double> ml_half_series(std::complex<double> z) {
    // E_{1/2}(z) = sum_m u^m/m!  +  z * sum_m u^m / Gamma(3/2 + m),  u = z^2.
    // Both sub-series run on one recursion each: e_{m+1} = e_m u/(m+1),
    // o_{m+1} = o_m u/(m + 3/2).
    const __float128 one = 1;
    const QComplex u = {static_cast<__float128>(z.real()) * z.real() -
                            static_cast<__float128>(z.imag()) * z.imag(),
                        static_cast<__float128>(2) * z.real() * z.imag()};
    QComplex e = {one, 0};
    QComplex o = {static_cast<__float128>(kTwoOverSqrtPiHi) + kTwoOverSqrtPiLo, 0};
    QComplex even_sum = e, odd_sum = o;
    double peak = 1.0;
    for (int m = 0; m < 400; ++m) {
        e = qscale(qmul(e, u), one / (m + 1));
        o = qscale(qmul(o, u), one / (m + static_cast<__float128>(1.5)));
        even_sum = qadd(even_sum, e);
        odd_sum = qadd(odd_sum, o);
        double t = qmag(e) + qmag(o);
        peak = std::max(peak, t);
        if (m > 4 && t < 1e-45 * peak) break;
    }
    QComplex qz = {static_cast<__float128>(z.real()), static_cast<__float128>(z.imag())};
    QComplex total = qadd(even_sum, qmul(qz, odd_sum));
    return {static_cast<double>(total.re), static_cast<double>(total.im)};
}

namespace {

// Algebraic part of the large-|z| expansion:
// -(1/sqrt(pi)) sum_p (-1)^p (2p-1)!!/(2^p z^{2p+1}), truncated at the
// smallest term.
std::complex<double> ml_half_algebraic(std::complex<double> z) {
    const std::complex<double> zi = 1.0 / z;
    const std::complex<double> zi2 = zi * zi;
    std::complex<double> term = zi * kOneOverSqrtPi;
    std::complex<double> sum = 0.0;
    double prev = std::abs(term);
    for (int p = 0; p < 64; ++p) {
        sum += term;
        std::complex<double> next = term * (-(2.0 * p + 1.0) / 2.0) * zi2;
        double an = std::abs(next);
        if (an >= prev) break;  // asymptotic optimum reached
        term = next;
        prev = an;
    }
    return -sum;
}

}  // namespace

std::complex<double> ml_half_asymptotic(std::complex<double> z) {
    // The exponential term 2 e^{z^2} is kept exactly on Re z >= 0, where the
    // reflection E(z) = 2 e^{z^2} - E(-z) makes it the dominant exact part;
    // on Re z < 0 the function is algebraically small and the term is absent.
    if (z.real() >= 0.0) return 2.0 * std::exp(z * z) + ml_half_algebraic(z);
    return ml_half_algebraic(z);
}

}  // namespace detail

std::complex<double> eval_mittag_leffler_half(std::complex<double> z) {
    const double az = std::abs(z);
    if (!(az <= 20.0))
        throw std::domain_error("eval_mittag_leffler_half: validated for |z| <= 20");
    if (az <= ml_half_switch_radius) return detail::ml_half_series(z);
    return detail::ml_half_asymptotic(z);
}

LogComplex eval_mittag_leffler_half_log(std::complex<double> z) {
    // |E| <= 2 e^{|z|^2} + 1 <= 2 e^{400} on the validated disk, far from
    // double overflow, so the log form is a plain wrapper.
    std::complex<double> v = eval_mittag_leffler_half(z);
    return {std::log(std::abs(v)), std::arg(v)};
}

std::complex<double> mittag_leffler_half_tail(std::complex<double> z) {
    if (std::abs(z) < ml_half_switch_radius)
        throw std::domain_error("mittag_leffler_half_tail: defined for |z| >= switch radius");
    // Computed directly from the algebraic series: subtracting 2 e^{z^2}
    // from the full value would cancel every digit once |e^{z^2}| is large.
    return detail::ml_half_algebraic(z);
}

GrowthRatioReport growth_ratio_scan(const std::vector<double>& r_list, int theta_count,
                                    double epsilon, Exec exec) {
    if (r_list.empty()) throw std::invalid_argument("growth_ratio_scan: empty radius list");
    for (double r : r_list)
        if (!(r >= 2.0 && r <= 30.0))
            throw std::invalid_argument("growth_ratio_scan: radii must lie in [2, 30]");
    if (theta_count < 64) throw std::invalid_argument("growth_ratio_scan: need at least 64 angles");
    if (!(epsilon > 0.0)) throw std::invalid_argument("growth_ratio_scan: epsilon must be positive");

    GrowthRatioReport rep;
    rep.grid.resize(r_list.size() * static_cast<std::size_t>(theta_count));
    const double dtheta = 2.0 * kPi / theta_count;
    for_each_index(rep.grid.size(), exec, [&](std::size_t idx) {
        const double r = r_list[idx / theta_count];
        const double theta = dtheta * static_cast<double>(idx % theta_count);
        GrowthRatioPoint& p = rep.grid[idx];
        p.r = r;
        p.theta = theta;
        p.model_exponent = (kPi / 2.0) * r * r * std::abs(std::sin(2.0 * theta));
        std::complex<double> z = std::polar(r, theta);
        if (s_zero_distance(z) <= epsilon / std::sqrt(r)) {
            p.excluded = true;
            p.log_abs_s = std::numeric_limits<double>::quiet_NaN();
            p.ratio = std::numeric_limits<double>::quiet_NaN();
            return;
        }
        p.log_abs_s = eval_s_log(z).log_abs;
        p.ratio = std::exp(p.log_abs_s - p.model_exponent);
    });
    // Serial reduction in grid order.
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    long long excl = 0;
    for (const GrowthRatioPoint& p : rep.grid) {
        if (p.excluded) {
            ++excl;
            continue;
        }
        lo = std::min(lo, p.ratio);
        hi = std::max(hi, p.ratio);
    }
    if (excl == static_cast<long long>(rep.grid.size()))
        throw std::runtime_error("growth_ratio_scan: every grid point fell in an exclusion disk");
    rep.min_ratio = lo;
    rep.max_ratio = hi;
    rep.excluded_count = excl;
    return rep;
}

}  // namespace gaborlab
