#pragma once

#include <random>

namespace conelab {

template <class Rng>
JordanElement random_real(const AlgebraDescriptor& alg, Rng& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> c(alg.n());
    for (auto& x : c) x = u(rng);
    return JordanElement::real(alg, c);
}

// A^T A + small multiple of e, so eigenvalues are bounded away from 0.
template <class Rng>
JordanElement random_cone(const AlgebraDescriptor& alg, Rng& rng) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::uniform_real_distribution<double> pos(0.2, 2.5);
    if (alg.family() == Family::RankOneReal) return JordanElement::real(alg, {pos(rng)});
    Eigen::Matrix2d a;
    a << u(rng), u(rng), u(rng), u(rng);
    Eigen::Matrix2d x = a.transpose() * a + 0.25 * Eigen::Matrix2d::Identity();
    return JordanElement::from_matrix(x);
}

template <class Rng>
JordanElement random_tube(const AlgebraDescriptor& alg, Rng& rng) {
    JordanElement re = random_real(alg, rng);
    JordanElement im = random_cone(alg, rng);
    return re.as_complex() + im.as_complex() * cplx(0.0, 1.0);
}

}  // namespace conelab
