#include "gaborlab/indicator_lab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "gaborlab/special_functions.hpp"

namespace gaborlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kExclusionEps = 0.3;  // same zero-exclusion scale as the growth scan

double circular_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

}  // namespace

IndicatorProfile estimate_indicator(const EntireFunctionSpec& F, int theta_count,
                                    const std::vector<double>& r_ladder, Exec exec) {
    if (theta_count < 64)
        throw std::invalid_argument("estimate_indicator: theta_count must be >= 64");
    if (r_ladder.size() < 2)
        throw std::invalid_argument("estimate_indicator: need at least two ladder rungs");
    double last = 0.0;
    for (double r : r_ladder) {
        if (!(r > last)) throw std::invalid_argument("estimate_indicator: ladder must increase");
        last = r;
    }
    // Surface any domain restriction before the parallel sweep (nudges change
    // the angle only, so the outermost rung bounds every sample modulus).
    (void)entire_eval_log(F, std::complex<double>(r_ladder.back(), 0.0));

    const bool use_exclusion = has_zero_catalog(F);
    const std::size_t first_top = r_ladder.size() / 2;
    const double step = kTwoPi / theta_count;

    IndicatorProfile out;
    out.r_ladder = r_ladder;
    out.thetas.resize(static_cast<std::size_t>(theta_count));
    out.h_values.resize(static_cast<std::size_t>(theta_count));
    out.fit_residuals.resize(static_cast<std::size_t>(theta_count));
    std::atomic<bool> starved{false};

    for_each_index(theta_count, exec, [&](std::ptrdiff_t i) {
        const double theta0 = step * static_cast<double>(i);
        double best = -std::numeric_limits<double>::infinity();
        double low = std::numeric_limits<double>::infinity();
        int survivors = 0;
        for (std::size_t k = first_top; k < r_ladder.size(); ++k) {
            const double r = r_ladder[k];
            const double cutoff = kExclusionEps / std::sqrt(r);
            double t = theta0;
            if (use_exclusion) {
                int tries = 0;
                while (tries < 2 && nearest_zero_distance(F, std::polar(r, t)) <= cutoff) {
                    t += step / 2.0;
                    ++tries;
                }
                if (nearest_zero_distance(F, std::polar(r, t)) <= cutoff) continue;
            }
            const double v = entire_eval_log(F, std::polar(r, t)).log_abs / (r * r);
            best = std::max(best, v);
            low = std::min(low, v);
            ++survivors;
        }
        if (survivors == 0) {
            starved.store(true, std::memory_order_relaxed);
            return;
        }
        out.thetas[static_cast<std::size_t>(i)] = theta0;
        out.h_values[static_cast<std::size_t>(i)] = best;
        out.fit_residuals[static_cast<std::size_t>(i)] = (survivors > 1) ? best - low : 0.0;
    });
    if (starved.load())
        throw std::runtime_error(
            "estimate_indicator: every top rung excluded at some angle; widen the ladder");
    return out;
}

double levin_density(const IndicatorProfile& profile) {
    if (profile.h_values.empty() || profile.h_values.size() != profile.thetas.size())
        throw std::invalid_argument("levin_density: profile has no angular grid");
    double sum = 0.0, comp = 0.0;  // Neumaier
    for (double h : profile.h_values) {
        const double t = sum + h;
        comp += (std::abs(sum) >= std::abs(h)) ? (sum - t) + h : (h - t) + sum;
        sum = t;
    }
    const double step = kTwoPi / static_cast<double>(profile.h_values.size());
    return (sum + comp) * step / (kPi * kPi);
}

JensenReport jensen_check(const EntireFunctionSpec& F, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("jensen_check: r must be positive");
    if (!has_zero_catalog(F))
        throw std::invalid_argument("jensen_check: function has no zero catalog");
    const std::complex<double> F0 = entire_eval(F, {0.0, 0.0});
    if (std::abs(F0) <= 1e-8)
        throw std::invalid_argument("jensen_check: |F(0)| too small to anchor the average");

    JensenReport rep;
    rep.r = r;
    double lhs = 0.0;
    for (const ZeroPoint& zp : zeros_within(F, r + 1e-3)) {
        const double m = std::abs(zp.location);
        if (std::abs(m - r) < 1e-6)
            throw std::runtime_error("jensen_check: a zero lies within 1e-6 of the circle");
        if (m < r) lhs += static_cast<double>(zp.multiplicity) * std::log(r / m);
    }
    rep.lhs = lhs;

    const double log_f0 = std::log(std::abs(F0));
    const auto pass = [&](int n) {
        double sum = 0.0, comp = 0.0;
        for (int j = 0; j < n; ++j) {
            const double term =
                entire_eval_log(F, std::polar(r, kTwoPi * j / n)).log_abs - log_f0;
            const double t = sum + term;
            comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
            sum = t;
        }
        return (sum + comp) / n;
    };
    int n = 512;
    double prev = pass(n);
    while (n < 65536) {
        n *= 2;
        const double cur = pass(n);
        if (std::abs(cur - prev) <= 1e-8 * std::max(1.0, std::abs(cur))) {
            rep.rhs = cur;
            return rep;
        }
        prev = cur;
    }
    throw std::runtime_error("jensen_check: circle average did not converge");
}

DirectionSet::DirectionSet(std::vector<double> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) throw std::invalid_argument("DirectionSet: empty");
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        if (!(angles_[i] >= 0.0) || angles_[i] >= kTwoPi)
            throw std::invalid_argument("DirectionSet: angles must lie in [0, 2 pi)");
        if (i > 0 && !(angles_[i] > angles_[i - 1]))
            throw std::invalid_argument("DirectionSet: angles must strictly increase");
    }
    const double kMaxGap = kPi / 2.0 + 1e-6;  // absorbs angles given to ~7 digits
    for (std::size_t i = 0; i + 1 < angles_.size(); ++i)
        if (angles_[i + 1] - angles_[i] > kMaxGap)
            throw std::invalid_argument("DirectionSet: a gap exceeds pi/2");
    if (angles_.front() + kTwoPi - angles_.back() > kMaxGap)
        throw std::invalid_argument("DirectionSet: the wraparound gap exceeds pi/2");
}

double h_envelope(const DirectionSet& dirs, double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    double delta = std::numeric_limits<double>::infinity();
    for (double a : dirs.angles()) delta = std::min(delta, circular_distance(t, a));
    return 0.5 * kPi * std::cos(2.0 * delta);
}

LevelCheckReport level_inequality_check(const DirectionSet& dirs) {
    // Within the sector between adjacent directions the distance to the
    // nearest direction is |theta - a| up to the midpoint and |b - theta|
    // after it, so H is piecewise-smooth with the only kink at the midpoint.
    // Each half-sector integral is Int_0^{g/2} (pi/2) cos(2 delta) d delta,
    // done by composite Simpson on a smooth integrand.
    const auto half_sector = [](double half_gap) {
        const int n = 256;  // even; keeps each half-sector below 1e-10 error
        const double h = half_gap / n;
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double w = (i == 0 || i == n) ? 1.0 : ((i % 2 == 1) ? 4.0 : 2.0);
            acc += w * 0.5 * kPi * std::cos(2.0 * i * h);
        }
        return acc * h / 3.0;
    };
    const std::vector<double>& a = dirs.angles();
    double integral = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double next = (i + 1 < a.size()) ? a[i + 1] : a.front() + kTwoPi;
        integral += 2.0 * half_sector((next - a[i]) / 2.0);
    }
    LevelCheckReport rep;
    rep.integral = integral;
    rep.passes = integral >= kTwoPi - 1e-6;
    return rep;
}

DirectionSet random_direction_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count_dist(5, 12);
    const int n = count_dist(rng);
    std::uniform_real_distribution<double> gap_dist(0.15, kPi / 2.0);
    std::uniform_real_distribution<double> offset_dist(0.0, kTwoPi);
    std::vector<double> gaps(static_cast<std::size_t>(n));
    bool ok = false;
    for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
        double total = 0.0;
        for (double& g : gaps) {
            g = gap_dist(rng);
            total += g;
        }
        ok = true;
        for (double& g : gaps) {
            g *= kTwoPi / total;
            if (g > kPi / 2.0) ok = false;
        }
    }
    if (!ok) std::fill(gaps.begin(), gaps.end(), kTwoPi / n);  // equal gaps always admissible
    std::vector<double> angles(static_cast<std::size_t>(n));
    double a = offset_dist(rng);
    for (int i = 0; i < n; ++i) {
        a = std::fmod(a, kTwoPi);
        angles[static_cast<std::size_t>(i)] = a;
        a += gaps[static_cast<std::size_t>(i)];
    }
    std::sort(angles.begin(), angles.end());
    return DirectionSet(angles);
}

ConvexityFloorReport convexity_floor_check(const IndicatorProfile& profile) {
    const std::size_t n = profile.h_values.size();
    if (n < 8 || profile.thetas.size() != n)
        throw std::invalid_argument("convexity_floor_check: profile too small");
    const std::vector<double>& h = profile.h_values;
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i)
        s[i] = (h[(i + n - 1) % n] + h[i] + h[(i + 1) % n]) / 3.0;

    // Local maxima of the smoothed profile; plateaus report their leftmost
    // index (strict rise into i, then a strict fall at the next value that
    // differs).  A constant profile yields none.
    std::vector<std::size_t> maxima;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(s[(i + n - 1) % n] < s[i])) continue;
        std::size_t j = (i + 1) % n;
        while (j != i && s[j] == s[i]) j = (j + 1) % n;
        if (j != i && s[j] < s[i]) maxima.push_back(i);
    }

    ConvexityFloorReport rep;
    if (maxima.empty()) return rep;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i : maxima) {
        rep.maxima_thetas.push_back(profile.thetas[i]);
        const double theta0 = profile.thetas[i];
        const double h0 = h[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double d = circular_distance(profile.thetas[j], theta0);
            if (d > kPi / 4.0) continue;
            worst = std::min(worst, h[j] - h0 * std::cos(2.0 * d));
        }
    }
    rep.worst_margin = worst;
    return rep;
}

}  // namespace gaborlab
