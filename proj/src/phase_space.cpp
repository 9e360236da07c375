#include "gaborlab/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace gaborlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Neumaier-compensated accumulator; the inverse-square shells cancel in
// pairs of equal magnitude and opposite sign, and plain summation would leak
// an ulp of the running sum per shell.
struct Compensated {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};
}  // namespace

double PhasePoint::modulus() const { return std::hypot(xi, eta); }

double angle_in_0_2pi(double xi, double eta) {
    double a = std::atan2(eta, xi);  // (-pi, pi], 0 on the positive real axis
    if (a <= 0.0) a += kTwoPi;
    return a;
}

double PhasePoint::angle() const { return angle_in_0_2pi(xi, eta); }

bool strictly_inside(double modulus2, double radius2) {
    // Strict disk membership with "boundary = outside": anything within the
    // relative guard band of the boundary is rejected.
    return modulus2 < radius2 - 1e-12 * std::max(1.0, radius2);
}

PointSetSpec PointSetSpec::axes_theorem1() { return PointSetSpec{}; }

PointSetSpec PointSetSpec::lattice(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("lattice: steps a, b must be positive");
    PointSetSpec s;
    s.kind = PointSetKind::Lattice;
    s.a = a;
    s.b = b;
    return s;
}

PointSetSpec PointSetSpec::lattice_minus_point(double a, double b, PhasePoint omitted) {
    PointSetSpec s = lattice(a, b);
    s.kind = PointSetKind::LatticeMinusPoint;
    s.omitted = omitted;
    return s;
}

PointSetSpec PointSetSpec::explicit_list(std::vector<PhasePoint> pts) {
    PointSetSpec s;
    s.kind = PointSetKind::Explicit;
    s.points = std::move(pts);
    return s;
}

namespace {

void sort_points(std::vector<PhasePoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const PhasePoint& p, const PhasePoint& q) {
        double mp = p.modulus(), mq = q.modulus();
        if (mp != mq) return mp < mq;
        return p.angle() < q.angle();
    });
}

std::vector<PhasePoint> generate_axes(double radius) {
    std::vector<PhasePoint> pts;
    const double r2 = radius * radius;
    if (strictly_inside(1.0, r2)) {
        pts.push_back({-1.0, 0.0});
        pts.push_back({1.0, 0.0});
    }
    for (long long n = 1; strictly_inside(2.0 * static_cast<double>(n), r2); ++n) {
        double s = std::sqrt(2.0 * static_cast<double>(n));
        pts.push_back({s, 0.0});
        pts.push_back({-s, 0.0});
        pts.push_back({0.0, s});
        pts.push_back({0.0, -s});
    }
    return pts;
}

std::vector<PhasePoint> generate_lattice(const PointSetSpec& spec, double radius) {
    std::vector<PhasePoint> pts;
    const double r2 = radius * radius;
    const long long imax = static_cast<long long>(std::ceil(radius / spec.a)) + 1;
    const long long jmax = static_cast<long long>(std::ceil(radius / spec.b)) + 1;
    bool origin_seen = false;
    bool omitted_seen = false;
    for (long long i = -imax; i <= imax; ++i) {
        for (long long j = -jmax; j <= jmax; ++j) {
            double x = static_cast<double>(i) * spec.a;
            double y = static_cast<double>(j) * spec.b;
            if (!strictly_inside(x * x + y * y, r2)) continue;
            if (i == 0 && j == 0) {
                origin_seen = true;
                continue;
            }
            if (spec.kind == PointSetKind::LatticeMinusPoint) {
                double tol = 1e-9 * std::max(1.0, std::hypot(spec.omitted.xi, spec.omitted.eta));
                if (std::abs(x - spec.omitted.xi) <= tol && std::abs(y - spec.omitted.eta) <= tol) {
                    omitted_seen = true;
                    continue;
                }
            }
            pts.push_back({x, y});
        }
    }
    if (origin_seen)
        std::cerr << "notice: lattice origin dropped (inverse squares are undefined there)\n";
    if (spec.kind == PointSetKind::LatticeMinusPoint && !omitted_seen) {
        // Only complain when the omitted node would have been inside the disk:
        // omitting a far-away node from a small section is a no-op, not an error.
        double om2 = spec.omitted.modulus2();
        bool is_node =
            std::abs(spec.omitted.xi / spec.a - std::round(spec.omitted.xi / spec.a)) <= 1e-9 &&
            std::abs(spec.omitted.eta / spec.b - std::round(spec.omitted.eta / spec.b)) <= 1e-9;
        if (strictly_inside(om2, r2) && !is_node)
            throw std::invalid_argument("lattice_minus_point: omitted point is not a lattice node");
    }
    return pts;
}

std::vector<PhasePoint> generate_explicit(const PointSetSpec& spec, double radius) {
    const double r2 = radius * radius;
    for (std::size_t i = 0; i < spec.points.size(); ++i) {
        const PhasePoint& p = spec.points[i];
        if (p.xi == 0.0 && p.eta == 0.0)
            throw std::invalid_argument("explicit point set: the origin is not allowed");
        for (std::size_t j = i + 1; j < spec.points.size(); ++j)
            if (p == spec.points[j])
                throw std::invalid_argument("explicit point set: duplicate point");
    }
    std::vector<PhasePoint> pts;
    for (const PhasePoint& p : spec.points)
        if (strictly_inside(p.modulus2(), r2)) pts.push_back(p);
    return pts;
}

}  // namespace

std::vector<PhasePoint> generate_points(const PointSetSpec& spec, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("generate_points: radius must be positive");
    std::vector<PhasePoint> pts;
    switch (spec.kind) {
        case PointSetKind::AxesTheorem1: pts = generate_axes(radius); break;
        case PointSetKind::Lattice:
        case PointSetKind::LatticeMinusPoint: pts = generate_lattice(spec, radius); break;
        case PointSetKind::Explicit: pts = generate_explicit(spec, radius); break;
    }
    sort_points(pts);
    return pts;
}

SectorCount count_sector(const PointSetSpec& spec, double r, double theta, double vartheta) {
    if (!(r > 0.0)) throw std::invalid_argument("count_sector: radius must be positive");
    if (!(theta >= 0.0) || !(theta < vartheta) || !(vartheta <= kTwoPi))
        throw std::invalid_argument("count_sector: need 0 <= theta < vartheta <= 2pi");
    SectorCount out{r, theta, vartheta, 0};
    for (const PhasePoint& p : generate_points(spec, r)) {
        double a = p.angle();
        if (a > theta && a <= vartheta) ++out.count;
    }
    return out;
}

DensityEstimate angular_density(const PointSetSpec& spec, double theta, double vartheta,
                                const std::vector<double>& r_ladder, Exec exec) {
    if (r_ladder.size() < 3)
        throw std::invalid_argument("angular_density: ladder needs at least three radii");
    for (std::size_t i = 0; i + 1 < r_ladder.size(); ++i)
        if (!(r_ladder[i] < r_ladder[i + 1]))
            throw std::invalid_argument("angular_density: ladder must be strictly increasing");
    DensityEstimate out;
    out.theta = theta;
    out.vartheta = vartheta;
    out.r_ladder = r_ladder;
    out.counts.assign(r_ladder.size(), 0);
    out.values.assign(r_ladder.size(), 0.0);
    // Rungs are independent; assembled in ladder order regardless of who
    // computes them.
    for_each_index(r_ladder.size(), exec, [&](std::size_t i) {
        SectorCount c = count_sector(spec, r_ladder[i], theta, vartheta);
        out.counts[i] = c.count;
        out.values[i] = static_cast<double>(c.count) / (std::numbers::pi * r_ladder[i] * r_ladder[i]);
    });
    out.extrapolated = out.values.back();
    return out;
}

std::complex<double> inverse_square_partial_sum(const PointSetSpec& spec, double r) {
    if (!(r > 0.0))
        throw std::invalid_argument("inverse_square_partial_sum: radius must be positive");
    Compensated re, im;
    for (const PhasePoint& p : generate_points(spec, r)) {
        std::complex<double> w = 1.0 / (p.to_complex() * p.to_complex());
        re.add(w.real());
        im.add(w.imag());
    }
    return {re.value(), im.value()};
}

}  // namespace gaborlab
