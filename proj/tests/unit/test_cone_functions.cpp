#include <doctest.h>

#include <cmath>
#include <random>

#include "conelab/cone_functions.hpp"
#include "conelab/quadrature.hpp"

using namespace conelab;

namespace {

const AlgebraDescriptor R1 = AlgebraDescriptor::rank_one();
const AlgebraDescriptor S2 = AlgebraDescriptor::sym2();

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma_cone closed form") {
    CHECK(gamma_cone(ExponentVector({1.0}), R1) == doctest::Approx(1.0));
    CHECK(gamma_cone(ExponentVector({4.0}), R1) == doctest::Approx(6.0));
    const double want = std::sqrt(2 * M_PI) * std::tgamma(3.0) * std::tgamma(1.5);
    CHECK(rel(gamma_cone(ExponentVector({3.0, 2.0}), S2), want) < 1e-14);

    try {
        gamma_cone(ExponentVector({2.0, 0.5}), S2);
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(gamma_cone(ExponentVector({0.0}), R1), PoleError);
}

TEST_CASE("gamma_cone against the cone integral") {
    const ExponentVector s({3.0, 2.0});
    const auto r = integrate_omega(
        [&](const JordanElement& x) {
            return std::exp(-jtrace(x).real()) * power_function(x, s) * std::pow(jdet(x).real(), -1.5);
        },
        S2, GridProfile::named("default"));
    CHECK(rel(r.real(), gamma_cone(s, S2)) < 1e-5);
}

TEST_CASE("laplace_power") {
    const ExponentVector s({3.0, 2.0});
    CHECK(rel(laplace_power(s, JordanElement::unit(S2)), gamma_cone(s, S2)) < 1e-14);
    CHECK(rel(laplace_power(ExponentVector({2.0}), JordanElement::real(R1, {3.0})), 1.0 / 9.0) < 1e-14);

    std::mt19937_64 rng(5);
    const auto y = random_cone(S2, rng);
    const auto r = integrate_omega(
        [&](const JordanElement& x) {
            return std::exp(-trace_form(x, y).real()) * power_function(x, s) *
                   std::pow(jdet(x).real(), -1.5);
        },
        S2, GridProfile::named("default"));
    CHECK(rel(r.real(), laplace_power(s, y)) < 1e-5);
    CHECK_THROWS_AS(laplace_power(s, JordanElement::real(S2, {-1, 1, 0})), DomainError);
}

TEST_CASE("discrete series range") {
    CHECK(discrete_series_threshold(R1) == 1.0);
    CHECK(discrete_series_threshold(S2) == 2.0);
    CHECK(in_discrete_series(ExponentVector({1.1}), R1));
    CHECK_FALSE(in_discrete_series(ExponentVector({1.0}), R1));
    CHECK_FALSE(in_discrete_series(ExponentVector({5.0, 2.0}), S2));
}

TEST_CASE("gamma_tilde_scalar") {
    CHECK(gamma_tilde_scalar(ExponentVector({3.0}), R1) == doctest::Approx(0.25));
    const auto r = integrate_1d([](double u) { return std::exp(-2 * u) * u; }, 0.0, INFINITY,
                                GridProfile::named("default"));
    CHECK(rel(r.real(), gamma_tilde_scalar(ExponentVector({3.0}), R1)) < 1e-10);
    CHECK_THROWS_AS(gamma_tilde_scalar(ExponentVector({1.0}), R1), DivergenceError);
}

TEST_CASE("bessel series") {
    for (double m : {2.0, 3.0, 3.5}) {
        CHECK(bessel_rank1(m, 0.0) == doctest::Approx(1.0 / std::tgamma(m)));
        CHECK(bessel_coefficient(m, 1) / bessel_coefficient(m, 0) == doctest::Approx(-1.0 / m));
        for (int k = 0; k < 6; ++k)
            CHECK(bessel_coefficient(m, k + 1) / bessel_coefficient(m, k) ==
                  doctest::Approx(-1.0 / ((k + 1) * (k + m))));
        // S(u)/Gamma(m) = u^{-(m-1)/2} J_{m-1}(2 sqrt u)
        for (double u : {0.5, 3.0, 10.0, 40.0}) {
            const double want = std::pow(u, -(m - 1) / 2) * std::cyl_bessel_j(m - 1, 2 * std::sqrt(u));
            CHECK(std::abs(bessel_rank1(m, u) - want) < 1e-12);
        }
    }
    const auto v = bessel_series(2.0, 10.0);
    CHECK(v.terms > 0);
    CHECK(v.tail_estimate >= 0.0);
    CHECK(std::abs(bessel_phase(2.0) - cplx(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(bessel_phase(1.0) - cplx(0.0, -1.0)) < 1e-15);
}

TEST_CASE("bessel series truncation") {
    BesselSeriesConfig cfg;
    cfg.max_terms = 3;
    CHECK_THROWS_AS(bessel_series(2.0, 10.0, cfg), PrecisionError);
}
