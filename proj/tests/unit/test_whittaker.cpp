#include <doctest.h>

#include <cmath>
#include <random>

#include "conelab/cone_functions.hpp"
#include "conelab/whittaker.hpp"

using namespace conelab;

namespace {

const AlgebraDescriptor R1 = AlgebraDescriptor::rank_one();
const AlgebraDescriptor S2 = AlgebraDescriptor::sym2();
const cplx I(0.0, 1.0);

double crel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

JordanElement disk_point(const AlgebraDescriptor& a, std::mt19937_64& rng) {
    return cayley(random_tube(a, rng));
}

}  // namespace

TEST_CASE("N vector in the cone model") {
    for (const auto& a : {R1, S2}) {
        const auto f = lowest_ktype_coneL2(a, 3.0);
        const auto e = JordanElement::unit(a);
        const WhittakerVector W(Model::ConeL2, Side::N, e);
        CHECK(std::abs(eval_whittaker_coneL2_N(W, f) - std::exp(-double(a.r()))) < 1e-15);

        // covariance under n_u is exact
        std::mt19937_64 rng(11);
        const WhittakerVector W2(Model::ConeL2, Side::N, e * 1.5, cplx(0.3, -0.8));
        for (int k = 0; k < 100; ++k) {
            const auto u = random_real(a, rng);
            const cplx moved = eval_whittaker_coneL2_N(W2, act_coneL2(GroupGenerator::translation(u), f));
            const cplx want = std::exp(-I * trace_form(u, e * 1.5).real()) * eval_whittaker_coneL2_N(W2, f);
            CHECK(crel(moved, want) < 1e-14);
        }
    }
}

TEST_CASE("W kills functions vanishing at v") {
    const auto v = JordanElement::real(R1, {1.2});
    const auto u = JordanElement::real(R1, {0.7});
    const auto f = lowest_ktype_coneL2(R1, 3.0);
    const ModelFunction g{Model::ConeL2, f.m,
                          [&](const JordanElement& x) {
                              return (std::exp(-I * trace_form(u, x).real()) -
                                      std::exp(-I * trace_form(u, v).real())) * f(x);
                          },
                          "difference"};
    CHECK(std::abs(eval_whittaker_coneL2_N(WhittakerVector(Model::ConeL2, Side::N, v), g)) < 1e-16);
}

TEST_CASE("N-bar vector in the cone model") {
    const double m = 3.0;
    const auto v = JordanElement::unit(R1);
    const auto f = lowest_ktype_coneL2(R1, m);
    const auto p = GridProfile::named("fast");
    const cplx one = eval_whittaker_coneL2_Nbar(WhittakerVector(Model::ConeL2, Side::Nbar, v), f, p).value;
    const cplx two = eval_whittaker_coneL2_Nbar(WhittakerVector(Model::ConeL2, Side::Nbar, v, 2.0), f, p).value;
    CHECK(crel(two, 2.0 * one) < 1e-14);
    CHECK(crel(one, act_coneL2(GroupGenerator::inversion(R1), f, p)(v)) < 1e-4);
    CHECK(crel(one, bessel_phase(m) * f(v)) < 1e-6);

    const ModelFunction zero{Model::ConeL2, f.m, [](const JordanElement&) { return cplx(0.0); }, "0"};
    CHECK(std::abs(eval_whittaker_coneL2_Nbar(WhittakerVector(Model::ConeL2, Side::Nbar, v), zero, p).value) == 0.0);
    CHECK_THROWS_AS(eval_whittaker_coneL2_Nbar(WhittakerVector(Model::ConeL2, Side::Nbar, JordanElement::unit(S2)),
                                               lowest_ktype_coneL2(S2, 3.0), p),
                    UnsupportedOperation);
}

TEST_CASE("tube profiles") {
    const auto v = JordanElement::unit(S2);
    const auto vp = JordanElement::real(S2, {2.0, 0.5, 0.3});
    const WhittakerVector W(Model::Tube, Side::N, v, cplx(0.0, 2.0));
    const cplx got = eval_whittaker_tube(W, vp.as_complex() * I, 3.0);
    CHECK(crel(got, std::exp(-trace_form(vp, v)) * cplx(0.0, 2.0)) < 1e-14);

    const auto ie = JordanElement::unit(R1).as_complex() * I;
    const WhittakerVector Wb(Model::Tube, Side::Nbar, JordanElement::unit(R1));
    CHECK(crel(eval_whittaker_tube(Wb, ie, 2.0), std::exp(-1.0) * holo_det_power(ie, -2.0)) < 1e-14);
    CHECK_THROWS_AS(eval_whittaker_tube(W, JordanElement::unit(S2).as_complex(), 3.0), DomainError);
}

TEST_CASE("disk profiles") {
    const double m = 3.0;
    for (const auto& a : {R1, S2}) {
        const auto v = JordanElement::unit(a);
        const WhittakerVector Wd(Model::Disk, Side::N, v, cplx(0.5, 0.5));
        const WhittakerVector Wt(Model::Tube, Side::N, v, cplx(0.5, 0.5));
        const auto zero = JordanElement::zero(a, ScalarField::Complex);
        CHECK(crel(eval_whittaker_disk(Wd, zero, m), std::exp(-double(a.r())) * cplx(0.5, 0.5)) < 1e-14);

        std::mt19937_64 rng(13);
        const WhittakerVector Wdb(Model::Disk, Side::Nbar, v);
        const WhittakerVector Wtb(Model::Tube, Side::Nbar, v);
        cplx first_bar = 0.0;
        for (int k = 0; k < 20; ++k) {
            const auto w = disk_point(a, rng);
            const auto z = cayley_inv(w);
            const cplx via_tube = eval_whittaker_tube(Wt, z, m) * std::conj(cayley_factor(w, m));
            CHECK(crel(eval_whittaker_disk(Wd, w, m), via_tube) < 1e-10);
            CHECK(crel(eval_whittaker_disk_alt(Wd, w, m), eval_whittaker_disk(Wd, w, m) * std::exp(-double(a.r()))) <
                  1e-12);

            // the N-bar side differs from the tube profile by one unimodular constant
            const cplx ratio = eval_whittaker_disk(Wdb, w, m) /
                               (eval_whittaker_tube(Wtb, z, m) * std::conj(cayley_factor(w, m)));
            if (k == 0) first_bar = ratio;
            CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-10);
            CHECK(std::abs(ratio - first_bar) < 1e-10);
        }
        CHECK_THROWS_AS(eval_whittaker_disk(Wd, JordanElement::unit(a).as_complex(), m), DomainError);
    }
}

TEST_CASE("tube and disk pairings against point evaluation") {
    const double m = 3.0;
    const auto v = JordanElement::unit(R1);
    const auto f = lowest_ktype_coneL2(R1, m);
    const ModelFunction F{Model::Tube, ExponentVector::uniform(1, m),
                          [m](const JordanElement& z) {
                              return std::tgamma(m) / std::sqrt(2 * M_PI) *
                                     right_det_power(JordanElement::unit(R1).as_complex() - I * z, m);
                          },
                          "L f_xi"};
    const auto p = GridProfile::named("fast");
    const cplx tube = pair_whittaker_tube_rank1(WhittakerVector(Model::Tube, Side::N, v), F, p).value;
    const double want = std::sqrt(2 * M_PI) * gamma_tilde_scalar(ExponentVector({m}), R1) * f(v).real();
    CHECK(std::abs(std::abs(tube) / want - 1.0) < 1e-3);
    const cplx disk =
        pair_whittaker_disk_rank1(WhittakerVector(Model::Disk, Side::N, v), cayley_on_functions(F), p).value;
    CHECK(std::abs(std::abs(4.0 * disk) / std::abs(tube) - 1.0) < 1e-3);
}

TEST_CASE("matrix coefficient of the lowest K-type") {
    for (const auto& a : {R1, S2}) {
        const auto e = JordanElement::unit(a);
        const auto m = ExponentVector::uniform(a.r(), 3.0);
        CHECK(matrix_coeff_lowest_ktype(m, e, 1.0, e) == doctest::Approx(std::exp(-2.0 * a.r())));
        CHECK(matrix_coeff_lowest_ktype(m, e, 2.0, e) == doctest::Approx(4 * std::exp(-2.0 * a.r())));
    }
    const auto m = ExponentVector({3.0});
    const auto e = JordanElement::unit(R1);
    const auto r = integrate_omega(
        [&](const JordanElement& x) { return matrix_coeff_lowest_ktype(m, e, 1.0, x) / (x[0].real() * x[0].real()); },
        R1, GridProfile::named("default"));
    CHECK(std::abs(r.real() / gamma_tilde_scalar(m, R1) - 1.0) < 1e-5);
    CHECK_THROWS_AS(matrix_coeff_lowest_ktype(ExponentVector({0.9}), e, 1.0, e), DivergenceError);
}

TEST_CASE("square-integrability threshold") {
    const auto p = GridProfile::named("default");
    CHECK_FALSE(matrix_coeff_tail(ExponentVector({1.1}), R1, p).divergent);
    CHECK(matrix_coeff_tail(ExponentVector({0.9}), R1, p).divergent);
}
