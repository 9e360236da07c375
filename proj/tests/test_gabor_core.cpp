#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gaborlab/gabor_core.hpp"
#include "support.hpp"

using namespace gaborlab;
using testsupport::integrate;
using testsupport::rel_err;

namespace {

constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;

cplx quadrature_inner_product(PhasePoint lambda, PhasePoint mu) {
    return integrate(
        [&](double t) {
            return tf_shift_eval(lambda.xi, lambda.eta, t) *
                   std::conj(tf_shift_eval(mu.xi, mu.eta, t));
        },
        -12.0, 12.0, 1e-12);
}

// Independent distance-to-span oracle: solve the normal equations with a
// long-double LU decomposition (partial pivoting) instead of the library's
// eigendecomposition route, and read off
//   dist^2 = 1 - Re sum_j y_j b_j   with   M y = conj(b),
// where M_ij = <e_i, e_j> and b_i = <target, e_i> for the normalized target.
double lu_distance_to_span(const GramSection& gram, const std::vector<cplx>& b) {
    using lcplx = std::complex<long double>;
    const std::size_t n = gram.size();
    std::vector<lcplx> a(n * n);
    std::vector<lcplx> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = lcplx(gram.entries[i * n + j]);
        y[i] = std::conj(lcplx(b[i]));
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        long double best = std::abs(a[perm[col] * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const long double m = std::abs(a[perm[r] * n + col]);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        std::swap(perm[col], perm[piv]);
        // Rows are never moved physically; the permutation indirection keeps
        // the right-hand side aligned with its matrix row automatically.
        const lcplx diag = a[perm[col] * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const lcplx f = a[perm[r] * n + col] / diag;
            a[perm[r] * n + col] = f;
            for (std::size_t c = col + 1; c < n; ++c) a[perm[r] * n + c] -= f * a[perm[col] * n + c];
            y[perm[r]] -= f * y[perm[col]];
        }
    }
    // Back substitution on the permuted rows.
    std::vector<lcplx> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        lcplx acc = y[perm[ii]];
        for (std::size_t c = ii + 1; c < n; ++c) acc -= a[perm[ii] * n + c] * x[c];
        x[ii] = acc / a[perm[ii] * n + ii];
    }
    long double dot = 0.0L;
    for (std::size_t j = 0; j < n; ++j) dot += (x[j] * lcplx(b[j])).real();
    return std::sqrt(static_cast<double>(std::max(0.0L, 1.0L - dot)));
}

}  // namespace

TEST_SUITE("gabor_core") {

TEST_CASE("shifted-window values match the defining formula") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const double peak = std::pow(2.0, 0.25);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng), y = u(rng), t = 3.0 * u(rng);
        const cplx want = std::exp(cplx(0.0, 2.0 * kPi * y * t)) * peak *
                          std::exp(-kPi * (t - x) * (t - x));
        CHECK(std::abs(tf_shift_eval(x, y, t) - want) <= 1e-14 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("inner product at a frozen pair matches the multiprecision value") {
    const cplx got = gauss_inner_product({0.7, -0.3}, {-0.2, 0.5});
    const cplx want(0.03168177516135297113555113, -0.09750647784258389680641592);
    CHECK(rel_err(got, want) <= 1e-13);
}

TEST_CASE("inner-product invariants: Hermitian symmetry, modulus law, Cauchy-Schwarz") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const PhasePoint l{u(rng), u(rng)}, m{u(rng), u(rng)};
        const cplx a = gauss_inner_product(l, m);
        const cplx b = gauss_inner_product(m, l);
        CHECK(std::abs(a - std::conj(b)) <= 1e-15);
        const double dx = l.xi - m.xi, dy = l.eta - m.eta;
        CHECK(std::abs(std::abs(a) - std::exp(-(kPi / 2.0) * (dx * dx + dy * dy))) <= 1e-15);
        CHECK(std::abs(a) <= 1.0 + 1e-15);  // both windows have unit norm
        CHECK(std::abs(gauss_inner_product(l, l) - cplx(1.0, 0.0)) <= 1e-15);
    }
}

TEST_CASE("closed-form inner products agree with adaptive quadrature") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const PhasePoint l{u(rng), u(rng)}, m{u(rng), u(rng)};
        CHECK(std::abs(gauss_inner_product(l, m) - quadrature_inner_product(l, m)) <= 1e-9);
    }
}

TEST_CASE("cross inner products of every catalog target agree with quadrature") {
    const std::vector<TimeFunctionSpec> targets = {
        TimeFunctionSpec::gaussian(),
        TimeFunctionSpec::shifted_gaussian(0.35, -1.2),
        TimeFunctionSpec::monomial_gaussian(1),
        TimeFunctionSpec::monomial_gaussian(2),
        TimeFunctionSpec::monomial_gaussian(3),
    };
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (const auto& f : targets) {
        for (int i = 0; i < 20; ++i) {
            const PhasePoint p{u(rng), u(rng)};
            const cplx got = detail::pair_with_shift(f, p);
            const cplx want = integrate(
                [&](double t) {
                    return time_function_eval(f, {t, 0.0}) *
                           std::conj(tf_shift_eval(p.xi, p.eta, t));
                },
                -12.0, 12.0, 1e-12);
            CHECK(std::abs(got - want) <= 1e-9);
        }
    }
}

TEST_CASE("Gram sections: frozen spectrum, Hermitian entries, Rayleigh bounds") {
    const auto gram = gram_section(PointSetSpec::axes_theorem1(), 3.0);
    REQUIRE(gram.size() == 18);
    CHECK(std::abs(gram.sigma_min - 0.034884160919220863) <= 1e-12);
    CHECK(std::abs(gram.sigma_max - 2.5388491733269576) <= 1e-12);

    const std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(gram.entries[i * n + i] - cplx(1.0, 0.0)) <= 1e-15);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(std::abs(gram.entries[i * n + j] - std::conj(gram.entries[j * n + i])) <=
                  1e-15);
            CHECK(std::abs(gram.entries[i * n + j] -
                           gauss_inner_product(gram.points[i], gram.points[j])) <= 1e-15);
        }
    }
    // Rayleigh quotients of random vectors stay inside the reported spectrum.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<cplx> v(n);
        for (auto& c : v) c = cplx(u(rng), u(rng));
        cplx num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            den += std::norm(v[i]);
            for (std::size_t j = 0; j < n; ++j)
                num += std::conj(v[i]) * gram.entries[i * n + j] * v[j];
        }
        const double q = num.real() / den;
        CHECK(q >= gram.sigma_min - 1e-9);
        CHECK(q <= gram.sigma_max + 1e-9);
    }
}

TEST_CASE("oversized sections are rejected rather than subsampled") {
    CHECK_THROWS_AS((void)gram_section(PointSetSpec::axes_theorem1(), 30.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)gram_section(PointSetSpec::axes_theorem1(), 0.5),
                    std::invalid_argument);  // empty section
}

TEST_CASE("biorthogonal solve: tiny deviation on a well-conditioned section") {
    const auto rep = biorthogonal_residual(PointSetSpec::axes_theorem1(), 4.0, 0.0);
    CHECK(rep.points.size() == 30);
    CHECK(rep.residual_matrix_deviation <= 1e-10);
    CHECK(rep.regularization == 0.0);
}

TEST_CASE("numerically singular sections demand explicit regularization") {
    const auto spec =
        PointSetSpec::explicit_list({{0.3, 0.0}, {0.3 + 1e-9, 0.0}, {-0.8, 0.4}});
    CHECK_THROWS_AS((void)biorthogonal_residual(spec, 2.0, 0.0), std::runtime_error);
    const auto rep = biorthogonal_residual(spec, 2.0, 1e-4);
    CHECK(rep.regularization == 1e-4);
    CHECK(rep.residual_matrix_deviation > 1e-8);  // the filter trades identity for stability
    CHECK_THROWS_AS((void)biorthogonal_residual(spec, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("distance-to-span ladders: frozen values and nesting monotonicity") {
    const std::vector<double> ladder{1.5, 3.0, 5.0};
    const auto g = completeness_residual(TimeFunctionSpec::gaussian(),
                                         PointSetSpec::axes_theorem1(), ladder);
    REQUIRE(g.size() == 3);
    CHECK(std::abs(g[0] - 0.91967809914933696) <= 1e-9);
    CHECK(std::abs(g[1] - 0.89385446609377572) <= 1e-9);
    CHECK(std::abs(g[2] - 0.87679802387070105) <= 1e-9);
    const auto m = completeness_residual(TimeFunctionSpec::monomial_gaussian(1),
                                         PointSetSpec::axes_theorem1(), ladder);
    REQUIRE(m.size() == 3);
    CHECK(std::abs(m[0] - 0.74437220662946768) <= 1e-9);
    CHECK(std::abs(m[1] - 0.66709284881812092) <= 1e-9);
    CHECK(std::abs(m[2] - 0.61515165621694146) <= 1e-9);
    for (std::size_t i = 1; i < 3; ++i) {
        CHECK(g[i] <= g[i - 1] + 1e-12);
        CHECK(m[i] <= m[i - 1] + 1e-12);
    }
}

TEST_CASE("a target that is itself a ladder member has zero distance to the span") {
    const auto v = completeness_residual(TimeFunctionSpec::shifted_gaussian(1.0, 0.0),
                                         PointSetSpec::axes_theorem1(), {1.5});
    REQUIRE(v.size() == 1);
    CHECK(v[0] <= 1e-6);
}

TEST_CASE("distance to span agrees with an independent long-double LU solve") {
    const auto gram = gram_section(PointSetSpec::axes_theorem1(), 3.0);
    const std::vector<TimeFunctionSpec> targets = {TimeFunctionSpec::gaussian(),
                                                   TimeFunctionSpec::monomial_gaussian(2)};
    for (const auto& f : targets) {
        const double norm = time_function_norm(f);
        std::vector<cplx> b(gram.size());
        for (std::size_t i = 0; i < gram.size(); ++i)
            b[i] = detail::pair_with_shift(f, gram.points[i]) / norm;
        const double oracle = lu_distance_to_span(gram, b);
        const auto got =
            completeness_residual(f, PointSetSpec::axes_theorem1(), {3.0});
        REQUIRE(got.size() == 1);
        CHECK(std::abs(got[0] - oracle) <= 1e-8 * std::max(1.0, oracle));
    }
}

TEST_CASE("ladder validation: empty and non-increasing ladders are rejected") {
    CHECK_THROWS_AS((void)completeness_residual(TimeFunctionSpec::gaussian(),
                                                PointSetSpec::axes_theorem1(), {}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)completeness_residual(TimeFunctionSpec::gaussian(),
                                                PointSetSpec::axes_theorem1(), {3.0, 3.0}),
                    std::invalid_argument);
}

TEST_CASE("serial and parallel Gram machinery agree bitwise") {
    const auto a = gram_section(PointSetSpec::axes_theorem1(), 4.0, Exec::serial);
    const auto b = gram_section(PointSetSpec::axes_theorem1(), 4.0, Exec::parallel);
    CHECK(a.entries == b.entries);
    CHECK(a.sigma_min == b.sigma_min);
    CHECK(a.sigma_max == b.sigma_max);
    const auto ca = completeness_residual(TimeFunctionSpec::gaussian(),
                                          PointSetSpec::axes_theorem1(), {1.5, 3.0}, Exec::serial);
    const auto cb = completeness_residual(
        TimeFunctionSpec::gaussian(), PointSetSpec::axes_theorem1(), {1.5, 3.0}, Exec::parallel);
    CHECK(ca == cb);
}

}  // TEST_SUITE
