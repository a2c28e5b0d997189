#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "conelab/jordan.hpp"

using namespace conelab;

namespace {

const AlgebraDescriptor R1 = AlgebraDescriptor::rank_one();
const AlgebraDescriptor S2 = AlgebraDescriptor::sym2();

double max_dev(const JordanElement& a, const JordanElement& b) {
    double d = 0.0;
    for (int i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

JordanElement sym(double a, double b, double c) { return JordanElement::real(S2, {a, c, b}); }

}  // namespace

TEST_CASE("descriptor constants") {
    CHECK(R1.n() == 1);
    CHECK(R1.r() == 1);
    CHECK(R1.d() == 0);
    CHECK(S2.n() == 3);
    CHECK(S2.r() == 2);
    CHECK(S2.d() == 1);
    for (const auto& a : {R1, S2}) CHECK(a.n() == a.r() + a.r() * (a.r() - 1) * a.d() / 2);
    CHECK(AlgebraDescriptor::parse("sym2") == S2);
    CHECK_THROWS_AS(AlgebraDescriptor::parse("sym3"), DomainError);
}

TEST_CASE("jmul") {
    std::mt19937_64 rng(1);
    for (const auto& a : {R1, S2}) {
        const auto x = random_real(a, rng);
        CHECK(max_dev(jmul(JordanElement::unit(a), x), x) < 1e-15);
    }
    CHECK(jmul(JordanElement::real(R1, {2}), JordanElement::real(R1, {3}))[0].real() == 6.0);

    // symmetrized matrix product
    Eigen::Matrix2d X, Y;
    X << 1, 1, 1, 0;
    Y << 0, 1, 1, 0;
    const Eigen::Matrix2d want = (X * Y + Y * X) / 2;
    const auto got = jmul(JordanElement::from_matrix(X), JordanElement::from_matrix(Y)).to_real_matrix();
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(jmul(JordanElement::unit(R1), JordanElement::unit(S2)), DescriptorMismatch);
}

TEST_CASE("trace and determinant") {
    CHECK(jtrace(JordanElement::unit(R1)).real() == 1.0);
    CHECK(jtrace(JordanElement::unit(S2)).real() == 2.0);
    CHECK(jdet(JordanElement::unit(S2)).real() == doctest::Approx(1.0));
    CHECK(jdet(sym(2, 3, 5)).real() == doctest::Approx(2 * 5 - 9));

    // (x|y) counts the off-diagonal twice
    CHECK(trace_form(sym(1, 2, 3), sym(4, 5, 6)).real() == doctest::Approx(4 + 18 + 20));
}

TEST_CASE("jinv") {
    CHECK(max_dev(jinv(JordanElement::unit(S2)), JordanElement::unit(S2)) < 1e-15);
    CHECK(jinv(JordanElement::real(R1, {4}))[0].real() == doctest::Approx(0.25));
    const auto d = jinv(sym(2, 0, 5));
    CHECK(d[0].real() == doctest::Approx(0.5));
    CHECK(d[1].real() == doctest::Approx(0.2));
    CHECK(std::abs(d[2]) < 1e-15);

    try {
        jinv(sym(1, 1, 1));
        FAIL("expected NonInvertible");
    } catch (const NonInvertible& e) {
        CHECK(e.abs_det() < 1e-14);
    }
}

TEST_CASE("quadratic representation") {
    for (const auto& a : {R1, S2}) {
        const auto id = JordanOperator::identity(a);
        CHECK((quad_rep(JordanElement::unit(a)).matrix - id.matrix).cwiseAbs().maxCoeff() < 1e-15);
    }
    std::mt19937_64 rng(2);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto x = random_real(S2, rng);
        const auto y = random_real(S2, rng);
        CHECK(max_dev(quad_rep(x).apply(JordanElement::unit(S2)), jmul(x, x)) < 1e-12);
        const Eigen::Matrix2d X = x.to_real_matrix(), Y = y.to_real_matrix();
        const auto sandwich = JordanElement::from_matrix(Eigen::Matrix2d(X * Y * X));
        worst = std::max(worst, max_dev(quad_rep(x).apply(y), sandwich));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("box operator") {
    for (const auto& a : {R1, S2}) {
        const auto e = JordanElement::unit(a);
        CHECK((box_op(e, e).matrix - JordanOperator::identity(a).matrix).cwiseAbs().maxCoeff() < 1e-15);
    }
    const auto b = box_op(JordanElement::real(R1, {2}), JordanElement::real(R1, {3}));
    CHECK(b.matrix(0, 0).real() == doctest::Approx(6.0));
}

TEST_CASE("spectral decomposition") {
    const auto e = spectral_decompose(JordanElement::unit(S2));
    CHECK(e.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0));

    const auto d = spectral_decompose(sym(3, 0, 1));
    CHECK(d.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(d.frame[0][0].real() == doctest::Approx(1.0));
    CHECK(d.frame[1][1].real() == doctest::Approx(1.0));

    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const auto x = random_real(S2, rng);
        const auto s = spectral_decompose(x);
        CHECK(s.eigenvalues[0] >= s.eigenvalues[1]);
        CHECK(max_dev(spectral_reconstruct(s), x) < 1e-12);
        CHECK(max_dev(jmul(s.frame[0], s.frame[0]), s.frame[0]) < 1e-12);
        CHECK(max_dev(jmul(s.frame[0], s.frame[1]), JordanElement::zero(S2)) < 1e-12);
    }
}

TEST_CASE("cone and tube membership") {
    CHECK(cone_contains(JordanElement::unit(S2)));
    CHECK_FALSE(cone_contains(JordanElement::real(R1, {-1})));
    CHECK_FALSE(cone_contains(sym(1, 2, 1)));
    const auto ie = JordanElement::unit(S2).as_complex() * cplx(0, 1);
    CHECK(tube_contains(ie));
    CHECK_FALSE(tube_contains(JordanElement::unit(S2).as_complex()));
}

TEST_CASE("power function") {
    const ExponentVector m({3.0, 1.5});
    CHECK(power_function(JordanElement::unit(S2), m) == doctest::Approx(1.0));
    CHECK(power_function(sym(2, 0, 5), m) == doctest::Approx(std::pow(2, 3.0) * std::pow(5, 1.5)));
    // Delta_m(x) = x11^{m1 - m2} det(x)^{m2}
    const auto x = sym(2, 0.5, 1);
    CHECK(power_function(x, m) == doctest::Approx(std::pow(2, 1.5) * std::pow(1.75, 1.5)));
    CHECK_THROWS_AS(power_function(sym(-1, 0, 1), m), DomainError);
    CHECK_THROWS(ExponentVector({1.0, 2.0}));
}

TEST_CASE("holomorphic determinant power") {
    const auto ie = JordanElement::unit(R1).as_complex() * cplx(0, 1);
    CHECK(std::abs(holo_det_power(ie, 0.0) - 1.0) < 1e-15);
    const double s = 2.5;
    const cplx want = std::exp(-s * std::log(cplx(0, 1)));
    CHECK(std::abs(holo_det_power(ie, s) - want) < 1e-14);
    CHECK_THROWS_AS(holo_det_power(JordanElement::unit(R1).as_complex(), 1.0), DomainError);
}

TEST_CASE("fundamental identity") {
    std::mt19937_64 rng(4);
    for (const auto& a : {R1, S2}) {
        for (int k = 0; k < 200; ++k) {
            const auto x = random_real(a, rng);
            const auto y = random_real(a, rng);
            const auto lhs = quad_rep(quad_rep(x).apply(y)).matrix;
            const auto rhs = (quad_rep(x) * quad_rep(y) * quad_rep(x)).matrix;
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + rhs.cwiseAbs().maxCoeff()));
            const cplx dl = jdet(quad_rep(x).apply(y));
            const cplx dr = jdet(x) * jdet(x) * jdet(y);
            CHECK(std::abs(dl - dr) <= 1e-10 * (1.0 + std::abs(dr)));
        }
    }
}
