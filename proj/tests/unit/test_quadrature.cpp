#include <doctest.h>

#include <cmath>

#include "conelab/quadrature.hpp"

using namespace conelab;

namespace {

const AlgebraDescriptor R1 = AlgebraDescriptor::rank_one();
const AlgebraDescriptor S2 = AlgebraDescriptor::sym2();

}  // namespace

TEST_CASE("half-line integrals") {
    const auto p = GridProfile::named("default");
    CHECK(std::abs(integrate_1d([](double u) { return std::exp(-u); }, 0, INFINITY, p).real() - 1.0) < 1e-10);
    CHECK(integrate_1d([](double u) { return std::exp(-2 * u) * u; }, 0, INFINITY, p).real() ==
          doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("G/N norm integrand on the line") {
    const int n = 2;
    const double v = 2.0;
    const auto r = integrate_1d(
        [&](double t) { return std::exp(-2 * n * t + v * (1 - std::exp(-2 * t)) + 2 * t); }, -INFINITY,
        INFINITY, GridProfile::named("strict"));
    const double closed = std::exp(v) / 2 * std::tgamma(n - 1) * std::pow(v, 1 - n);
    CHECK(std::abs(r.real() / closed - 1) < 1e-8);
}

TEST_CASE("complex integrand") {
    const auto r = integrate_1d_complex([](double x) { return std::exp(cplx(-x, x)); }, 0, INFINITY,
                                        GridProfile::named("default"));
    CHECK(std::abs(r.value - cplx(0.5, 0.5)) < 1e-10);
}

TEST_CASE("cone integrals") {
    const auto p = GridProfile::named("default");
    CHECK(integrate_omega([](const JordanElement& x) { return std::exp(-2 * x[0].real()); }, R1, p).real() ==
          doctest::Approx(0.5));
    CHECK(integrate_omega([](const JordanElement&) { return 0.0; }, S2, p).real() == 0.0);

    // rotation-invariant shortcut agrees with the full parameterization
    auto f = [](const JordanElement& x) { return std::exp(-jtrace(x).real()) * jdet(x).real(); };
    const double full = integrate_omega(f, S2, p).real();
    const double sym = integrate_omega(f, S2, p, OmegaSymmetry::RotationInvariant).real();
    CHECK(sym == doctest::Approx(full).epsilon(1e-8));
}

TEST_CASE("Fourier integrals") {
    const auto p = GridProfile::named("default");
    // int_0^inf e^{-x} cos(2x) dx = 1/5, sine: 2/5
    CHECK(integrate_fourier([](double x) { return std::exp(-x); }, 2.0, FourierWeight::Cosine, p, 1.0).real() ==
          doctest::Approx(0.2).epsilon(1e-9));
    CHECK(integrate_fourier([](double x) { return std::exp(-x); }, 2.0, FourierWeight::Sine, p, 1.0).real() ==
          doctest::Approx(0.4).epsilon(1e-9));
    // int_R e^{-x^2} e^{-i x} dx = sqrt(pi) e^{-1/4}
    const auto g = integrate_fourier_line([](double x) { return cplx(std::exp(-x * x)); }, 1.0, p, 1.0);
    CHECK(std::abs(g.value - std::sqrt(M_PI) * std::exp(-0.25)) < 1e-9);
}

TEST_CASE("profiles") {
    for (const auto& name : GridProfile::names()) CHECK_NOTHROW(GridProfile::named(name).validate());
    CHECK_THROWS(GridProfile::named("nope"));
    const auto nested = GridProfile::named("default").nested(1);
    CHECK(nested.rel_tol == doctest::Approx(GridProfile::named("default").rel_tol / 10));

    const auto parsed = parse_profiles(
        "# comment\n[mine]\nrel_tol = 1e-6\nsubdivisions = 10, 20, 30\ndepth = 4\n");
    REQUIRE(parsed.count("mine") == 1);
    const auto& m = parsed.at("mine");
    CHECK(m.rel_tol == 1e-6);
    CHECK(m.subdivisions[2] == 30);
    CHECK(m.depth == 4);
    CHECK_THROWS(parse_profiles("[x]\nrel_tol = -1\n"));
    CHECK_THROWS(parse_profiles("[x]\nbogus = 1\n"));
}

TEST_CASE("tail monitor") {
    CHECK_FALSE(monitor_tail({1.0, 0.5, 0.25, 0.125}).divergent);
    CHECK(monitor_tail({1.0, 1.0, 1.0, 1.0}).divergent);
}
