#include <doctest.h>

#include <cmath>
#include <random>

#include "conelab/cone_functions.hpp"
#include "conelab/holo_models.hpp"

using namespace conelab;

namespace {

const AlgebraDescriptor R1 = AlgebraDescriptor::rank_one();
const AlgebraDescriptor S2 = AlgebraDescriptor::sym2();
const cplx I(0.0, 1.0);

JordanElement ie(const AlgebraDescriptor& a) { return JordanElement::unit(a).as_complex() * I; }
JordanElement z1(cplx z) { return JordanElement::complex(R1, {z}); }

double max_dev(const JordanElement& a, const JordanElement& b) {
    double d = 0.0;
    for (int i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

ModelFunction tube_probe(double m) {
    return ModelFunction{Model::Tube, ExponentVector::uniform(1, m),
                         [](const JordanElement& z) { return std::exp(I * z[0]) / (z[0] + 2.0 * I); },
                         "probe"};
}

}  // namespace

TEST_CASE("reproducing kernel") {
    for (const auto& a : {R1, S2}) {
        const cplx k = reproducing_kernel(ie(a), ie(a), 2.0, 1.0);
        CHECK(std::abs(k - std::pow(2.0, -a.r() * 2.0)) < 1e-14);
    }
    // rank 1: (-i(z - conj w))^{-m}
    const cplx k = reproducing_kernel(z1(I), z1(2.0 * I), 2.0, 1.0);
    CHECK(std::abs(k - std::pow(-I * (I + 2.0 * I), -2.0)) < 1e-14);
    CHECK(std::abs(k - 1.0 / 9.0) < 1e-14);
    CHECK_THROWS_AS(reproducing_kernel(z1(1.0), z1(I), 2.0, 1.0), DomainError);
}

TEST_CASE("tube action") {
    const auto F = tube_probe(2.0);
    const auto u = JordanElement::real(R1, {0.7});
    const auto z = z1(cplx(0.3, 1.1));
    CHECK(std::abs(act_tube(GroupGenerator::translation(u), F)(z) - F(z - u.as_complex())) < 1e-15);
    CHECK(std::abs(act_tube(GroupGenerator::translation(JordanElement::zero(R1)), F)(z) - F(z)) < 1e-15);

    const auto j = GroupGenerator::inversion(R1);
    for (cplx w : {cplx(0.3, 1.1), cplx(-2.0, 0.4), cplx(0.0, 3.0)}) {
        const cplx twice = act_tube(j, act_tube(j, F))(z1(w));
        CHECK(std::abs(twice - F(z1(w))) < 1e-12);
    }
}

TEST_CASE("cone L2 action") {
    const double m = 3.0;
    const auto f = lowest_ktype_coneL2(R1, m);
    const auto x = JordanElement::real(R1, {1.3});
    const auto u = JordanElement::real(R1, {0.4});
    const cplx want = std::exp(-I * trace_form(x, u)) * f(x);
    CHECK(std::abs(act_coneL2(GroupGenerator::translation(u), f)(x) - want) < 1e-15);
    const auto id = LeviElement::from_matrix(R1, Eigen::Matrix2d::Identity());
    CHECK(std::abs(act_coneL2(GroupGenerator::levi(id), f)(x) - f(x)) < 1e-15);
    CHECK_THROWS_AS(act_coneL2(GroupGenerator::inversion(S2), lowest_ktype_coneL2(S2, 3.0)),
                    UnsupportedOperation);
}

TEST_CASE("Laplace transform of the lowest K-type") {
    const double m = 3.0;
    const auto f = lowest_ktype_coneL2(R1, m);
    const auto z = z1(cplx(0.5, 1.5));
    const cplx got = laplace_transform(f, z).value;
    const cplx want = std::pow(2 * M_PI, -0.5) * gamma_cone(ExponentVector({m}), R1) *
                      right_det_power(JordanElement::unit(R1).as_complex() - I * z, m);
    CHECK(std::abs(got - want) < 1e-7 * std::abs(want));

    const ModelFunction F{Model::Tube, f.m,
                          [m](const JordanElement& w) {
                              return std::pow(2 * M_PI, -0.5) * std::tgamma(m) *
                                     right_det_power(JordanElement::unit(R1).as_complex() - I * w, m);
                          },
                          "L f_xi"};
    CHECK(std::abs(laplace_on_functions(f)(z) - F(z)) < 1e-7 * std::abs(F(z)));
    const cplx back = inverse_laplace(F, 1.0, 1.0).value;
    CHECK(std::abs(back - f(JordanElement::real(R1, {1.0}))) < 1e-5 * std::abs(f(JordanElement::real(R1, {1.0}))));
}

TEST_CASE("Cayley transform") {
    for (const auto& a : {R1, S2}) {
        CHECK(max_dev(cayley(ie(a)), JordanElement::zero(a, ScalarField::Complex)) < 1e-15);
        CHECK(max_dev(cayley_inv(JordanElement::zero(a, ScalarField::Complex)), ie(a)) < 1e-15);
        std::mt19937_64 rng(9);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const auto z = random_tube(a, rng);
            CHECK(disk_contains(cayley(z)));
            worst = std::max(worst, max_dev(cayley_inv(cayley(z)), z) / (1.0 + z.norm()));
        }
        CHECK(worst < 1e-12);
    }
    CHECK_THROWS_AS(cayley_inv(JordanElement::real(R1, {1.0})), DomainError);
    CHECK_THROWS_AS(h_factor(JordanElement::complex(R1, {I})), DomainError);
}

TEST_CASE("Cayley transform on functions") {
    const double m = 2.0;
    const auto F = tube_probe(m);
    const auto f = cayley_on_functions(F);
    const auto zero = JordanElement::zero(R1, ScalarField::Complex);
    CHECK(std::abs(f(zero) - F(ie(R1))) < 1e-15);
    const auto back = cayley_inverse_on_functions(f);
    const auto z = z1(cplx(-0.4, 0.8));
    CHECK(std::abs(back(z) - F(z)) < 1e-12);
    CHECK_THROWS_AS(disk_action_j(F), DomainError);
}

TEST_CASE("Bergman operator") {
    for (const auto& a : {R1, S2}) {
        const auto zero = JordanElement::zero(a, ScalarField::Complex);
        CHECK(h_factor(zero) == doctest::Approx(1.0));
    }
    // rank 1: B(w, conj w) = (1 - |w|^2)^2
    const cplx w(0.3, 0.4);
    const auto b = bergman(z1(w), z1(std::conj(w)));
    CHECK(std::abs(b.matrix(0, 0) - std::pow(1 - std::norm(w), 2)) < 1e-15);
}
