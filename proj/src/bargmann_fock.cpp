#include "gaborlab/bargmann_fock.hpp"

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gaborlab/special_functions.hpp"

namespace gaborlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfWidth = 4.0;      // Gaussian e^{-2 pi u^2} at u=4: e^{-32 pi} ~ 2e-44
constexpr double kExpOverflow = 700.0;  // exp() overflows just above 709
constexpr double kWindowPeak = 1.18920711500272106672;  // 2^{1/4}

// Trapezoid sum of p(u) e^{-2 pi u^2} over [-W, W] with N intervals, where
// p(u) = (tstar + u)^degree.  The integrand decays to ~1e-44 at the cut, so
// the trapezoid rule is spectrally accurate here.
std::complex<double> moment_pass(std::complex<double> tstar, int degree, int n) {
    const double h = 2.0 * kHalfWidth / n;
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j <= n; ++j) {
        const double u = -kHalfWidth + j * h;
        std::complex<double> p{1.0, 0.0};
        for (int d = 0; d < degree; ++d) p *= tstar + u;
        const double w = (j == 0 || j == n) ? 0.5 : 1.0;
        acc += w * p * std::exp(-2.0 * kPi * u * u);
    }
    return acc * h;
}

}  // namespace

std::complex<double> bargmann_transform(const TimeFunctionSpec& f, std::complex<double> z) {
    if (std::abs(z) > 10.0) throw std::domain_error("bargmann_transform: |z| must be <= 10");
    const GaussianExponentForm e = exponent_form(f);

    // Combined integrand: scale * t^deg * exp(-2 pi t^2 + B t + C).  Shift to
    // the stationary point t* = B/(4 pi); the remaining exponent in u = t - t*
    // is -2 pi u^2 and the prefactor exponent is C + B^2/(8 pi).
    const std::complex<double> B = e.beta + 2.0 * kPi * z;
    const std::complex<double> C = e.gamma - 0.5 * kPi * z * z;
    const std::complex<double> tstar = B / (4.0 * kPi);
    const std::complex<double> pref_exp = C + B * B / (8.0 * kPi);
    if (pref_exp.real() > kExpOverflow)
        throw std::range_error("bargmann_transform: prefactor exceeds the double range");
    const std::complex<double> pref = kWindowPeak * e.scale * std::exp(pref_exp);
    const double pmag = std::abs(pref);

    int n = 64;
    std::complex<double> prev = moment_pass(tstar, e.degree, n);
    while (n < 8192) {
        n *= 2;
        const std::complex<double> cur = moment_pass(tstar, e.degree, n);
        if (std::abs(cur - prev) * pmag <= 1e-10 * std::max(1.0, std::abs(cur) * pmag))
            return pref * cur;
        prev = cur;
    }
    throw std::runtime_error("bargmann_transform: quadrature did not converge");
}

namespace detail {

std::complex<double> bargmann_contour_quadrature(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> z, std::complex<double> shift) {
    const auto pass = [&](int n) {
        const double h = 2.0 * kHalfWidth / n;
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j <= n; ++j) {
            const std::complex<double> t = shift + std::complex<double>(-kHalfWidth + j * h, 0.0);
            const std::complex<double> expo = -kPi * t * t + 2.0 * kPi * t * z - 0.5 * kPi * z * z;
            const double w = (j == 0 || j == n) ? 0.5 : 1.0;
            acc += w * f(t) * std::exp(expo);
        }
        return acc * (h * kWindowPeak);
    };
    int n = 64;
    std::complex<double> prev = pass(n);
    while (n < 8192) {
        n *= 2;
        const std::complex<double> cur = pass(n);
        if (std::abs(cur - prev) <= 1e-10 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("bargmann_contour_quadrature: did not converge");
}

}  // namespace detail

namespace {

// One quadrature level for Int_{Ra<|z|<Rb} |F|^2 e^{-pi |z|^2} dm: composite
// Simpson in r (nr intervals, even) times periodic trapezoid in theta (nth
// nodes).  Everything stays in log space until the final exp, so |F|^2 and
// the Gaussian weight never overflow separately.  The radial nodes are
// filled in parallel (each node owns its full angular sum), then combined
// serially, so results are independent of scheduling.
double annulus_pass(const EntireFunctionSpec& F, double Ra, double Rb, int nr, int nth,
                    Exec exec) {
    const double hr = (Rb - Ra) / nr;
    const double ht = 2.0 * kPi / nth;
    std::vector<double> radial(static_cast<std::size_t>(nr) + 1, 0.0);
    std::atomic<bool> overflow{false};
    for_each_index(nr + 1, exec, [&](std::ptrdiff_t i) {
        const double r = Ra + static_cast<double>(i) * hr;
        if (r == 0.0) {
            radial[static_cast<std::size_t>(i)] = 0.0;  // dm = r dr dtheta vanishes
            return;
        }
        double sum = 0.0, comp = 0.0;  // Neumaier
        for (int j = 0; j < nth; ++j) {
            const double theta = j * ht;
            const LogComplex lv =
                entire_eval_log(F, std::polar(r, theta));
            const double expo = 2.0 * lv.log_abs - kPi * r * r;
            if (expo > kExpOverflow) {
                overflow.store(true, std::memory_order_relaxed);
                return;
            }
            const double term = std::exp(expo);
            const double t = sum + term;
            comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
            sum = t;
        }
        radial[static_cast<std::size_t>(i)] = r * (sum + comp) * ht;
    });
    if (overflow.load())
        throw std::range_error("fock norm: weighted integrand exceeds the double range");
    double acc = 0.0, comp = 0.0;
    for (int i = 0; i <= nr; ++i) {
        double w;
        if (i == 0 || i == nr) w = 1.0;
        else w = (i % 2 == 1) ? 4.0 : 2.0;
        const double term = w * radial[static_cast<std::size_t>(i)];
        const double t = acc + term;
        comp += (std::abs(acc) >= std::abs(term)) ? (acc - t) + term : (term - t) + acc;
        acc = t;
    }
    return (acc + comp) * hr / 3.0;
}

int even_at_least(double x, int floor_val) {
    int n = std::max(floor_val, static_cast<int>(std::ceil(x)));
    if (n % 2 != 0) ++n;
    return n;
}

// Refined annulus mass.  Initial radial grids scale with the annulus width
// times the outer radius: the Gaussian weight decays on a scale 1/(2 pi Rb),
// so outer annuli span dozens of decades and need nodes dense on that scale.
// Angular grids scale with Rb^2 (the weighted modulus of order-two functions
// varies on an angular scale ~1/Rb^2 near its ridges).
double annulus_weighted_mass(const EntireFunctionSpec& F, double Ra, double Rb, Exec exec) {
    int nr = even_at_least(12.0 * (Rb - Ra) * std::max(2.0, Rb), 48);
    int nth = even_at_least(8.0 * Rb * Rb, 256);
    double prev = annulus_pass(F, Ra, Rb, nr, nth, exec);
    for (int level = 0; level < 5; ++level) {
        nr *= 2;
        nth *= 2;
        const double cur = annulus_pass(F, Ra, Rb, nr, nth, exec);
        if (std::abs(cur - prev) <= 1e-6 * std::max(cur, DBL_MIN)) return cur;
        prev = cur;
    }
    throw std::runtime_error("fock norm: quadrature did not converge");
}

// Evaluating F once at the outer radius surfaces any domain restriction of
// the function (and of quotient root stencils) deterministically, before any
// parallel region runs; parallel bodies afterwards cannot throw.
void precheck_eval(const EntireFunctionSpec& F, double r) {
    (void)entire_eval_log(F, std::complex<double>(r, 0.0));
}

}  // namespace

double fock_norm_truncated(const EntireFunctionSpec& F, double R, Exec exec) {
    if (!(R > 0.0) || R > 30.0)
        throw std::invalid_argument("fock_norm_truncated: R must lie in (0, 30]");
    precheck_eval(F, R);
    return annulus_weighted_mass(F, 0.0, R, exec);
}

const char* to_string(FockVerdict v) {
    switch (v) {
        case FockVerdict::Converging: return "Converging";
        case FockVerdict::Diverging: return "Diverging";
        default: return "Inconclusive";
    }
}

FockNormLadder fock_membership_probe(const EntireFunctionSpec& F,
                                     const std::vector<double>& R_ladder, Exec exec) {
    if (R_ladder.size() < 4)
        throw std::invalid_argument("fock_membership_probe: need at least four radii");
    double last = 0.0;
    for (double r : R_ladder) {
        if (!(r > last)) throw std::invalid_argument("fock_membership_probe: radii must increase");
        last = r;
    }
    if (R_ladder.back() > 30.0)
        throw std::invalid_argument("fock_membership_probe: radii must be <= 30");
    precheck_eval(F, R_ladder.back());

    FockNormLadder out;
    out.R_ladder = R_ladder;
    double inner = 0.0;
    double total = 0.0;
    for (double r : R_ladder) {
        const double inc = annulus_weighted_mass(F, inner, r, exec);
        out.increments.push_back(inc);
        total += inc;
        out.values.push_back(total);
        inner = r;
    }
    out.last_relative_increment = out.increments.back() / std::max(out.values.back(), DBL_MIN);

    if (out.last_relative_increment < 1e-3) {
        out.verdict = FockVerdict::Converging;
    } else {
        // Shell increments only: increments[0] is the inner disk, whose width
        // differs from the shells', so it says nothing about the tail trend.
        bool nondecreasing = true;
        for (std::size_t k = 2; k < out.increments.size(); ++k)
            if (out.increments[k] < 0.99 * out.increments[k - 1]) nondecreasing = false;
        out.verdict = nondecreasing ? FockVerdict::Diverging : FockVerdict::Inconclusive;
    }
    return out;
}

std::vector<GrowthCheckRow> fock_growth_check(const EntireFunctionSpec& F,
                                              const std::vector<double>& r_list,
                                              int theta_count, Exec exec) {
    if (theta_count < 64) throw std::invalid_argument("fock_growth_check: theta_count must be >= 64");
    if (r_list.empty()) throw std::invalid_argument("fock_growth_check: empty radius list");
    double rmax = 0.0;
    for (double r : r_list) {
        if (!(r > 0.0) || r > 30.0)
            throw std::invalid_argument("fock_growth_check: radii must lie in (0, 30]");
        rmax = std::max(rmax, r);
    }
    precheck_eval(F, rmax);

    const std::size_t nrungs = r_list.size();
    std::vector<double> logs(nrungs * static_cast<std::size_t>(theta_count));
    for_each_index(static_cast<std::ptrdiff_t>(logs.size()), exec, [&](std::ptrdiff_t idx) {
        const std::size_t rung = static_cast<std::size_t>(idx) / theta_count;
        const int j = static_cast<int>(static_cast<std::size_t>(idx) % theta_count);
        const double r = r_list[rung];
        const double theta = 2.0 * kPi * j / theta_count;
        const LogComplex lv = entire_eval_log(F, std::polar(r, theta));
        logs[static_cast<std::size_t>(idx)] = lv.log_abs - 0.5 * kPi * r * r;
    });

    std::vector<GrowthCheckRow> rows(nrungs);
    for (std::size_t rung = 0; rung < nrungs; ++rung) {
        double best = -HUGE_VAL;
        for (int j = 0; j < theta_count; ++j)
            best = std::max(best, logs[rung * theta_count + static_cast<std::size_t>(j)]);
        rows[rung] = GrowthCheckRow{r_list[rung], best, std::exp(best)};
    }
    return rows;
}

}  // namespace gaborlab
