#include "gaborlab/gabor_core.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace gaborlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Relative eigenvalue thresholds: below kSingularRel the section counts as
// numerically singular for the biorthogonal solve; kSpanCutoffRel is the
// rank cutoff for distance-to-span computations.
constexpr double kSingularRel = 1e-13;
constexpr double kSpanCutoffRel = 1e-14;

Eigen::MatrixXcd to_eigen(const GramSection& gram) {
    const Eigen::Index n = static_cast<Eigen::Index>(gram.size());
    Eigen::MatrixXcd M(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            M(i, j) = gram.entries[static_cast<std::size_t>(i) * gram.size() + j];
    return M;
}

// B f(z) for the time catalog (f unnormalized): the Gaussian window maps to
// the constant 1; t^k g picks up the complete-the-square polynomial; a
// time-frequency shift maps to a pure exponential.
std::complex<double> transform_closed_form(const TimeFunctionSpec& f, std::complex<double> z) {
    switch (f.kind) {
        case TimeFunctionKind::Gaussian:
            return 1.0;
        case TimeFunctionKind::ShiftedGaussian: {
            std::complex<double> w{f.x, f.y};
            std::complex<double> expo =
                std::complex<double>(0.0, kPi * f.x * f.y) -
                (kPi / 2.0) * (f.x * f.x + f.y * f.y) + kPi * z * w;
            return std::exp(expo);
        }
        case TimeFunctionKind::MonomialGaussian: {
            // sum over even picks 2j of the binomial (u + z/2)^k against the
            // Gaussian moments: C(k,2j) (z/2)^{k-2j} (2j-1)!!/(4 pi)^j
            std::complex<double> sum = 0.0;
            for (int j = 0; 2 * j <= f.k; ++j) {
                double coef = 1.0;
                for (int i = 0; i < 2 * j; ++i)  // C(k, 2j)
                    coef = coef * (f.k - i) / (i + 1.0);
                for (int i = 1; i <= j; ++i) coef *= (2.0 * i - 1.0) / (4.0 * kPi);
                std::complex<double> zp = 1.0;
                for (int i = 0; i < f.k - 2 * j; ++i) zp *= z * 0.5;
                sum += coef * zp;
            }
            return sum;
        }
    }
    throw std::logic_error("transform_closed_form: unhandled kind");
}

}  // namespace

std::complex<double> tf_shift_eval(double x, double y, double t) {
    return time_function_eval(TimeFunctionSpec::shifted_gaussian(x, y), t);
}

std::complex<double> gauss_inner_product(PhasePoint lambda, PhasePoint mu) {
    const double dx = lambda.xi - mu.xi, dy = lambda.eta - mu.eta;
    const double phase = kPi * dy * (lambda.xi + mu.xi);
    const double mag = std::exp(-(kPi / 2.0) * (dx * dx + dy * dy));
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

namespace detail {

std::complex<double> pair_with_shift(const TimeFunctionSpec& f, PhasePoint p) {
    // <f, rho_{(a,b)} g> = e^{-i pi a b} e^{-(pi/2)(a^2+b^2)} (B f)(a - i b)
    const double a = p.xi, b = p.eta;
    std::complex<double> prefactor =
        std::exp(std::complex<double>(-(kPi / 2.0) * (a * a + b * b), -kPi * a * b));
    return prefactor * transform_closed_form(f, {a, -b});
}

}  // namespace detail

GramSection gram_section(const PointSetSpec& spec, double radius, Exec exec) {
    GramSection gram;
    gram.points = generate_points(spec, radius);
    const std::size_t n = gram.points.size();
    if (n == 0) throw std::invalid_argument("gram_section: no points inside the radius");
    if (n > 400)
        throw std::invalid_argument("gram_section: section exceeds the 400-point cap (" +
                                    std::to_string(n) + " points)");
    gram.entries.assign(n * n, {});
    for_each_index(n * n, exec, [&](std::size_t idx) {
        gram.entries[idx] = gauss_inner_product(gram.points[idx / n], gram.points[idx % n]);
    });

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(gram),
                                                       Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo < -1e-10)
        throw std::runtime_error("gram_section: lost positive semidefiniteness (min eigenvalue " +
                                 std::to_string(lo) + ")");
    gram.sigma_min = std::max(0.0, lo);
    gram.sigma_max = hi;
    return gram;
}

BiorthogonalReport biorthogonal_residual(const PointSetSpec& spec, double radius,
                                         double regularization, Exec exec) {
    if (regularization < 0.0)
        throw std::invalid_argument("biorthogonal_residual: regularization must be >= 0");
    GramSection gram = gram_section(spec, radius, exec);
    if (regularization == 0.0 && gram.sigma_min <= kSingularRel * gram.sigma_max)
        throw std::runtime_error(
            "biorthogonal_residual: section is numerically singular (sigma_min/sigma_max = " +
            std::to_string(gram.sigma_min / gram.sigma_max) +
            "); pass a positive regularization");

    Eigen::MatrixXcd M = to_eigen(gram);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    const Eigen::Index n = M.rows();
    Eigen::VectorXd filt(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double w = es.eigenvalues()(i);
        filt(i) = w / (w * w + regularization * regularization);
    }
    Eigen::MatrixXcd C =
        es.eigenvectors() * filt.asDiagonal() * es.eigenvectors().adjoint();
    Eigen::MatrixXcd D = M * C - Eigen::MatrixXcd::Identity(n, n);

    BiorthogonalReport rep;
    rep.points = std::move(gram.points);
    rep.residual_matrix_deviation = D.cwiseAbs().maxCoeff();
    rep.regularization = regularization;
    return rep;
}

std::vector<double> completeness_residual(const TimeFunctionSpec& target,
                                          const PointSetSpec& spec,
                                          const std::vector<double>& radius_ladder,
                                          Exec exec) {
    if (radius_ladder.empty())
        throw std::invalid_argument("completeness_residual: empty radius ladder");
    for (std::size_t i = 1; i < radius_ladder.size(); ++i)
        if (!(radius_ladder[i] > radius_ladder[i - 1]))
            throw std::invalid_argument("completeness_residual: ladder must be increasing");

    const double norm = time_function_norm(target);
    std::vector<double> residuals;
    residuals.reserve(radius_ladder.size());
    for (double radius : radius_ladder) {
        GramSection gram = gram_section(spec, radius, exec);
        const Eigen::Index n = static_cast<Eigen::Index>(gram.size());
        Eigen::VectorXcd d(n);  // d_i = <rho_i g, f/||f||>
        for (Eigen::Index i = 0; i < n; ++i)
            d(i) = std::conj(detail::pair_with_shift(target, gram.points[i])) / norm;

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(gram));
        Eigen::VectorXcd beta = es.eigenvectors().adjoint() * d;
        const double cutoff = kSpanCutoffRel * gram.sigma_max;
        double fit = 0.0;
        Eigen::Index dropped = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (es.eigenvalues()(i) > cutoff)
                fit += std::norm(beta(i)) / es.eigenvalues()(i);
            else
                ++dropped;
        }
        if (dropped > 0)
            std::cerr << "notice: span fit at radius " << radius << " dropped " << dropped
                      << " direction(s) below the eigenvalue cutoff " << cutoff << "\n";
        residuals.push_back(std::sqrt(std::max(0.0, 1.0 - fit)));
    }
    return residuals;
}

}  // namespace gaborlab
