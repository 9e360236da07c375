#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gaborlab/bargmann_fock.hpp"
#include "support.hpp"

using namespace gaborlab;
using testsupport::rel_err;

namespace {
constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;
}  // namespace

TEST_SUITE("bargmann_fock") {

TEST_CASE("the window transforms to the constant 1 across the validated disk") {
    for (cplx z : {cplx(0, 0), cplx(2, 0), cplx(0, 5), cplx(3, 4), cplx(-2, 2), cplx(-6, -7),
                   cplx(0.3, -9.5)}) {
        CHECK(std::abs(bargmann_transform(TimeFunctionSpec::gaussian(), z) - cplx(1, 0)) <=
              1e-9);
    }
}

TEST_CASE("t times the window transforms to z/2") {
    for (cplx z : {cplx(0, 0), cplx(1, 1), cplx(-4, 2), cplx(0, 5), cplx(5, 0)}) {
        CHECK(std::abs(bargmann_transform(TimeFunctionSpec::monomial_gaussian(1), z) - z / 2.0) <=
              1e-9);
    }
}

TEST_CASE("shifted windows transform to weighted exponentials") {
    // From completing the square: a time shift x and frequency shift y map to
    //   e^{i pi x y} e^{-(pi/2)(x^2+y^2)} e^{pi (x + i y) z}.
    for (const auto& [x, y] : std::vector<std::pair<double, double>>{
             {0.7, -0.4}, {-1.1, 0.6}, {2.0, 1.5}}) {
        const auto f = TimeFunctionSpec::shifted_gaussian(x, y);
        for (cplx z : {cplx(0.5, 0.2), cplx(-1, 2), cplx(3, -2)}) {
            const cplx want = std::exp(cplx(0.0, kPi * x * y)) *
                              std::exp(-(kPi / 2.0) * (x * x + y * y)) *
                              std::exp(kPi * cplx(x, y) * z);
            CHECK(rel_err(bargmann_transform(f, z), want) <= 1e-10);
        }
    }
}

TEST_CASE("t^4 times the window matches the Gaussian-moment closed form") {
    for (cplx z : {cplx(1.5, -0.5), cplx(0, 3), cplx(-2, -2)}) {
        const cplx w = z / 2.0;
        const cplx want = w * w * w * w + (3.0 / (2.0 * kPi)) * w * w +
                          3.0 / (16.0 * kPi * kPi);
        CHECK(std::abs(bargmann_transform(TimeFunctionSpec::monomial_gaussian(4), z) - want) <=
              1e-9);
    }
}

TEST_CASE("the transform is linear: a combined integrand equals the sum of transforms") {
    const double peak = std::pow(2.0, 0.25);
    const auto combined = [&](cplx t) {
        return peak * std::exp(-kPi * t * t) * (1.0 + t);  // window + t * window
    };
    const cplx z(2.0, 1.0);
    const cplx got = detail::bargmann_contour_quadrature(combined, z, z / 2.0);
    CHECK(std::abs(got - (1.0 + z / 2.0)) <= 1e-9);
}

TEST_CASE("the contour shift is a free parameter: off-saddle lines give the same integral") {
    const double peak = std::pow(2.0, 0.25);
    const auto window = [&](cplx t) { return peak * std::exp(-kPi * t * t); };
    const cplx z(1.0, 3.0);
    const cplx on_saddle = detail::bargmann_contour_quadrature(window, z, z / 2.0);
    const cplx off_saddle = detail::bargmann_contour_quadrature(window, z, z / 2.0 + 0.3);
    CHECK(std::abs(on_saddle - off_saddle) <= 1e-8);
    CHECK(std::abs(on_saddle - cplx(1.0, 0.0)) <= 1e-9);
}

TEST_CASE("transform arguments outside the validated disk are rejected") {
    CHECK_THROWS_AS((void)bargmann_transform(TimeFunctionSpec::gaussian(), {8.0, 8.0}),
                    std::domain_error);
}

TEST_CASE("truncated weighted norms match closed forms for 1 and z") {
    for (double R : {1.0, 2.0, 6.0}) {
        const double got_one = fock_norm_truncated(EntireFunctionSpec::one(), R);
        const double want_one = 1.0 - std::exp(-kPi * R * R);
        CHECK(std::abs(got_one - want_one) <= 2e-6 * want_one);
        const double got_z = fock_norm_truncated(EntireFunctionSpec::monomial(1), R);
        const double want_z = (1.0 - std::exp(-kPi * R * R) * (1.0 + kPi * R * R)) / kPi;
        CHECK(std::abs(got_z - want_z) <= 2e-6 * want_z);
    }
}

TEST_CASE("truncated norms grow with the truncation radius") {
    double prev = 0.0;
    for (double R : {2.0, 4.0, 6.0}) {
        const double v = fock_norm_truncated(EntireFunctionSpec::s_function(), R);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("norm evaluation range checks: radius cap, overflow, and domain prechecks") {
    CHECK_THROWS_AS((void)fock_norm_truncated(EntireFunctionSpec::one(), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)fock_norm_truncated(EntireFunctionSpec::one(), 31.0),
                    std::invalid_argument);
    // |e^{pi z^2}|^2 e^{-pi |z|^2} tops e^700 inside R = 16.
    CHECK_THROWS_AS(
        (void)fock_norm_truncated(EntireFunctionSpec::exp_quadratic({kPi, 0.0}), 16.0),
        std::range_error);
    // The scaled Mittag-Leffler member is only validated to |z| = 20.
    CHECK_THROWS_AS(
        (void)fock_norm_truncated(EntireFunctionSpec::mittag_leffler_half(1.0), 25.0),
        std::domain_error);
}

TEST_CASE("membership ladders: the constant function converges immediately") {
    const auto lad = fock_membership_probe(EntireFunctionSpec::one(), {4.0, 6.0, 8.0, 10.0});
    CHECK(lad.verdict == FockVerdict::Converging);
    CHECK(lad.last_relative_increment <= 1e-10);
    REQUIRE(lad.values.size() == 4);
    for (std::size_t i = 1; i < 4; ++i) CHECK(lad.values[i] >= lad.values[i - 1]);
    CHECK(std::abs(lad.values.back() - 1.0) <= 1e-5);
    CHECK(lad.increments[0] == lad.values[0]);
}

TEST_CASE("membership ladders: s grows too fast and its shell increments stay flat") {
    const auto lad =
        fock_membership_probe(EntireFunctionSpec::s_function(), {4.0, 6.0, 8.0, 10.0});
    CHECK(lad.verdict == FockVerdict::Diverging);
    REQUIRE(lad.increments.size() == 4);
    CHECK(std::abs(lad.increments[1] - 1.419173) <= 2e-3);
    CHECK(std::abs(lad.increments[2] - 1.416022) <= 2e-3);
    CHECK(std::abs(lad.increments[3] - 1.415143) <= 2e-3);
}

TEST_CASE("membership ladders: the remove-one-zero quotient at a short ladder is inconclusive") {
    const auto q = EntireFunctionSpec::quotient_by_linear(EntireFunctionSpec::s_function(), 1.0);
    const auto lad = fock_membership_probe(q, {4.0, 6.0, 8.0, 10.0});
    CHECK(lad.verdict == FockVerdict::Inconclusive);
    CHECK(std::abs(lad.last_relative_increment - 4.542625e-3) <= 2e-5);
    REQUIRE(lad.values.size() == 4);
    CHECK(std::abs(lad.values[0] - 3.83330567) <= 1e-4);
    CHECK(std::abs(lad.values[1] - 3.89493167) <= 1e-4);
    CHECK(std::abs(lad.values[2] - 3.92505107) <= 1e-4);
    CHECK(std::abs(lad.values[3] - 3.94296246) <= 1e-4);
}

TEST_CASE("membership ladders: the quotient converges once the ladder reaches far enough") {
    const auto q = EntireFunctionSpec::quotient_by_linear(EntireFunctionSpec::s_function(), 1.0);
    const auto lad = fock_membership_probe(q, {14.0, 16.0, 18.0, 20.0});
    CHECK(lad.verdict == FockVerdict::Converging);
    CHECK(lad.last_relative_increment < 1e-3);
    CHECK(lad.last_relative_increment > 5e-4);  // barely under: the decay is slow
}

TEST_CASE("membership ladder validation") {
    const auto one = EntireFunctionSpec::one();
    CHECK_THROWS_AS((void)fock_membership_probe(one, {4.0, 6.0, 8.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)fock_membership_probe(one, {4.0, 6.0, 6.0, 8.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)fock_membership_probe(one, {4.0, 6.0, 8.0, 31.0}),
                    std::invalid_argument);
}

TEST_CASE("weighted growth maxima: exact for 1, flat for s, decaying for the quotient") {
    const auto rows = fock_growth_check(EntireFunctionSpec::one(), {1.0, 2.0, 3.0}, 64);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(std::abs(row.log_max_weighted + (kPi / 2.0) * row.r * row.r) <= 1e-12);
        CHECK(std::abs(row.max_weighted - std::exp(-(kPi / 2.0) * row.r * row.r)) <= 1e-12);
    }
    // s: the weighted maximum hugs e^{-log 2} along the diagonals at every
    // radius -- no decay, as expected for a function outside the space.
    const auto rs =
        fock_growth_check(EntireFunctionSpec::s_function(), {6.0, 10.0, 14.0}, 64);
    CHECK(std::abs(rs[0].log_max_weighted - -0.69276152685783643) <= 1e-9);
    CHECK(std::abs(rs[1].log_max_weighted - -0.69309718305976276) <= 1e-9);
    CHECK(std::abs(rs[2].log_max_weighted - -0.69313416531912253) <= 1e-9);
    // The quotient sheds a factor |z - 1|: its weighted maximum decays.
    const auto q = EntireFunctionSpec::quotient_by_linear(EntireFunctionSpec::s_function(), 1.0);
    const auto rq = fock_growth_check(q, {6.0, 10.0, 14.0}, 64);
    CHECK(std::abs(rq[0].log_max_weighted - -2.3679717253443258) <= 1e-9);
    CHECK(std::abs(rq[1].log_max_weighted - -2.9252337029797388) <= 1e-9);
    CHECK(std::abs(rq[2].log_max_weighted - -3.2817765346413239) <= 1e-9);
    CHECK(rq[0].log_max_weighted > rq[1].log_max_weighted);
    CHECK(rq[1].log_max_weighted > rq[2].log_max_weighted);

    CHECK_THROWS_AS((void)fock_growth_check(EntireFunctionSpec::one(), {1.0}, 32),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)fock_growth_check(EntireFunctionSpec::one(), {}, 64),
                    std::invalid_argument);
}

TEST_CASE("serial and parallel weighted-norm machinery agree bitwise") {
    const double a = fock_norm_truncated(EntireFunctionSpec::s_function(), 5.0, Exec::serial);
    const double b = fock_norm_truncated(EntireFunctionSpec::s_function(), 5.0, Exec::parallel);
    CHECK(a == b);
    const auto ga =
        fock_growth_check(EntireFunctionSpec::s_function(), {4.0, 8.0}, 128, Exec::serial);
    const auto gb =
        fock_growth_check(EntireFunctionSpec::s_function(), {4.0, 8.0}, 128, Exec::parallel);
    REQUIRE(ga.size() == gb.size());
    for (std::size_t i = 0; i < ga.size(); ++i) {
        CHECK(ga[i].log_max_weighted == gb[i].log_max_weighted);
        CHECK(ga[i].max_weighted == gb[i].max_weighted);
    }
}

}  // TEST_SUITE
