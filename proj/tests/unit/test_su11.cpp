#include <doctest.h>

#include <cmath>
#include <random>

#include "conelab/su11.hpp"

using namespace conelab;

namespace {

const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("group elements") {
    CHECK(SL2Element::identity().in_su11());
    CHECK(SL2Element::a_t(0.7).in_su11());
    CHECK(SL2Element::n_x(0.4).in_su11());
    CHECK(SL2Element::k_theta(1.3).in_su11());
    CHECK_FALSE(SL2Element::p_plus(0.5).in_su11());
    CHECK_THROWS_AS(SL2Element::make(1, 1, 1, 1), DomainError);
    const auto g = SL2Element::a_t(0.3) * SL2Element::n_x(-0.8);
    CHECK((g * g.inverse()).distance(SL2Element::identity()) < 1e-14);
}

TEST_CASE("P+ K_C N_C factorization") {
    const auto id = pkn_decompose(SL2Element::identity());
    CHECK(std::abs(id.p_plus) == 0.0);
    CHECK(std::abs(id.gamma - 1.0) == 0.0);
    CHECK(std::abs(id.s) == 0.0);

    std::mt19937_64 rng(17);
    double worst = 0.0, worst_minus = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto g = random_su11(rng);
        worst = std::max(worst, pkn_decompose(g).reassemble().distance(g));
        worst_minus = std::max(worst_minus, pkn_minus_decompose(g).reassemble().distance(g));
    }
    CHECK(worst < 1e-12);
    CHECK(worst_minus < 1e-12);

    // g = a_t: k_C = diag(e^{-t}, e^t), n_C = n_{i(e^{-2t}-1)/2}
    for (double t : {-1.5, 0.2, 2.0}) {
        const auto f = pkn_decompose(SL2Element::a_t(t));
        CHECK(std::abs(f.gamma - std::exp(-t)) < 1e-13);
        CHECK(std::abs(f.s - I * (std::exp(-2 * t) - 1.0) / 2.0) < 1e-13);
    }
    CHECK_THROWS_AS(pkn_decompose(SL2Element::make(0, 1, -1, 1)), NotInDenseCell);
}

TEST_CASE("contraction semigroup") {
    std::mt19937_64 rng(19);
    for (int k = 0; k < 10; ++k) {
        const auto v = in_contraction_semigroup(random_su11(rng));
        CHECK(v.member);
        CHECK(std::abs(v.margin) < 1e-9);
    }
    const auto strict = in_contraction_semigroup(SL2Element::diag(0.8));
    CHECK(strict.member);
    CHECK(strict.margin > 0.1);
    CHECK_FALSE(in_contraction_semigroup(SL2Element::p_plus(2.0)).member);
}

TEST_CASE("lowest K-type F_n") {
    CHECK(std::abs(f_n(SL2Element::identity(), 3, 1.0) - 1.0) < 1e-15);
    CHECK(std::abs(lkt_T(SL2Element::identity(), 3, 1.0) - 1.0) < 1e-15);
    for (double t : {-2.0, -0.3, 0.5, 1.7}) {
        const int n = 2;
        const double v = 1.3;
        const double want = std::exp(-2 * n * t + v * (1 - std::exp(-2 * t)));
        const auto g = SL2Element::k_theta(0.9) * SL2Element::a_t(t) * SL2Element::n_x(0.4);
        CHECK(std::norm(f_n(g, n, v)) == doctest::Approx(want).epsilon(1e-12));
        CHECK(std::norm(f_n_at(SL2Element::k_theta(0.9), t, n, v)) == doctest::Approx(want).epsilon(1e-12));
        CHECK(std::abs(lkt_T(g, n, v) - f_n(g, n, v)) < 1e-12 * std::abs(f_n(g, n, v)));
    }
}

TEST_CASE("G/N norm of F_n") {
    const auto p = GridProfile::named("default");
    for (auto [n, v] : std::vector<std::pair<int, double>>{{2, 2.0}, {2, 1.0}, {3, 1.0}, {4, 0.5}}) {
        const auto r = gn_norm_fn(n, v, p);
        CHECK_FALSE(r.divergent);
        CHECK(std::abs(r.result.real() / gn_norm_closed(n, v) - 1.0) < 1e-8);
    }
    CHECK(gn_norm_closed(2, 2.0) == doctest::Approx(std::exp(2.0) / 4));
    CHECK(gn_norm_fn(1, 1.0, p).divergent);
    CHECK(gn_norm_fn(2, -1.0, p).divergent);
}

TEST_CASE("kernel covariance") {
    const auto k = psi_kernel_covariance(2, 1.0, 100);
    CHECK(k.samples == 100);
    CHECK(k.right_n_deviation < 1e-8);
    CHECK(k.cocycle_deviation < 1e-8);
    CHECK(k.identity_reduction_deviation < 1e-8);
    CHECK(disk_representative(cplx(0.3, 0.2)).in_su11());
}

TEST_CASE("Hardy boundary values") {
    const auto h = hardy_boundary(2, 1.0, {1.5, 1.2, 1.05, 1.01}, GridProfile::named("fast"));
    REQUIRE(h.size() == 4);
    for (size_t i = 1; i < h.size(); ++i) CHECK(h[i].relative_sq_discrepancy < h[i - 1].relative_sq_discrepancy);
    CHECK(h.back().relative_sq_discrepancy < 1e-3);
    for (const auto& pt : h) CHECK(pt.norm_ratio < 1.0);
}
