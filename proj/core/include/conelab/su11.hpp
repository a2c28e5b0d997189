#pragma once

// SL(2,C) arithmetic for G = SU(1,1): the P+ K_C N_C factorization, the
// contraction semigroup, the lowest K-type F_n of L^2(G/N, psi_v), the kernel
// Psi and the Hardy boundary values along diag(rho, 1/rho).

#include <vector>

#include "conelab/quadrature.hpp"

namespace conelab {

struct SL2Element {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    // Throws DomainError unless ad - bc = 1 within tol.
    static SL2Element make(cplx a, cplx b, cplx c, cplx d, double tol = 1e-12);
    static SL2Element identity() { return {}; }
    static SL2Element a_t(double t);
    static SL2Element n_x(cplx x);     // [[1+ix, -ix], [ix, 1-ix]]
    static SL2Element k_theta(cplx theta);  // diag(e^{i theta/2}, e^{-i theta/2})
    static SL2Element k_gamma(cplx gamma);  // diag(gamma, 1/gamma)
    static SL2Element p_plus(cplx z);
    static SL2Element p_minus(cplx w);
    static SL2Element diag(cplx rho);  // diag(rho, 1/rho)

    SL2Element operator*(const SL2Element& o) const;
    SL2Element inverse() const;
    cplx det() const { return a * d - b * c; }
    cplx mobius(cplx z) const;  // (az + b)/(cz + d)
    bool in_su11(double tol = 1e-10) const;
    double distance(const SL2Element& o) const;  // max-entry norm
};

template <class Rng>
SL2Element random_su11(Rng& rng);

struct PKNFactorization {
    cplx p_plus;  // z of p+_z, or w of p-_w when minus is set
    cplx gamma;   // e^{i theta/2}
    cplx s;       // s of n_s
    bool minus = false;

    SL2Element reassemble() const;
};

PKNFactorization pkn_decompose(const SL2Element& g, double tol = 1e-12);
// g = p-_w k n_s~ with e^{i theta/2} = a + b and s~ = ib/(a+b).
PKNFactorization pkn_minus_decompose(const SL2Element& g, double tol = 1e-12);

struct SemigroupVerdict {
    bool member;
    double margin;  // 1 - max |g . e^{i phi}| over the samples
};
SemigroupVerdict in_contraction_semigroup(const SL2Element& g, int boundary_samples = 720);

// psi_v(n_s) = e^{-ivs}, chi_n(k_theta) = e^{-in theta/2} = gamma^{-n}.
cplx psi_v(cplx s, double v);
cplx chi_n(cplx gamma, int n);

// F_n(g) = psi_v(n_C(g)^{-1}) chi_n(k_C(g)^{-1}) = e^{v c/(c+d)} (c+d)^{-n}.
cplx f_n(const SL2Element& g, int n, double v);
// F_n(m a_t) without forming the entries of a_t.
cplx f_n_at(const SL2Element& m, double t, int n, double v);
// Same value assembled from the cocycle j(h, z) = (cz + d)^{-n} and pi_c(k) = j(k^{-1}, 0).
cplx lkt_T(const SL2Element& g, int n, double v);
cplx j_cocycle(const SL2Element& h, cplx z, int n);

struct GnNorm {
    IntegralResult result;
    double closed_form = 0.0;  // (e^v/2) Gamma(n-1) v^{1-n}, NaN outside n > 1, v > 0
    TailReport tail;
    bool divergent = false;
};
// (1/4pi) int_0^{4pi} int |F_n(k_theta a_t)|^2 e^{2t} dt dtheta.
GnNorm gn_norm_fn(int n, double v, const GridProfile& p = GridProfile::named("default"));
double gn_norm_closed(int n, double v);

// Psi(a, z) built from the P- K_C N_C factorization of b_z^{-1} a, with
// b_z = (1 - |z|^2)^{-1/2} [[1, z], [conj z, 1]].
cplx psi_kernel(const SL2Element& a, cplx z, int n, double v);
SL2Element disk_representative(cplx z);

struct KernelCovariance {
    double right_n_deviation = 0.0;
    double cocycle_deviation = 0.0;
    double identity_reduction_deviation = 0.0;
    int samples = 0;
};
KernelCovariance psi_kernel_covariance(int n, double v, int samples, unsigned seed = 7);

struct HardyPoint {
    double rho;
    double relative_sq_discrepancy;  // ||F_s - F||^2 / ||F||^2
    double relative_discrepancy;     // its square root
    double norm_ratio;               // ||F_s|| / ||F||
};
// (F_n)_s(g) = F_n(s^{-1} g) with s = diag(rho, 1/rho); norms along eq. G/N measure.
std::vector<HardyPoint> hardy_boundary(int n, double v, const std::vector<double>& rhos,
                                       const GridProfile& p = GridProfile::named("default"));

// int_{G/N} F(h1^{-1} g) conj F(h2^{-1} g) with the (theta, t) measure.
IntegralResult gn_inner_translates(const SL2Element& h1, const SL2Element& h2, int n, double v,
                                   const GridProfile& p = GridProfile::named("default"));

}  // namespace conelab

#include <random>

namespace conelab {

template <class Rng>
SL2Element random_su11(Rng& rng) {
    std::uniform_real_distribution<double> ang(-M_PI, M_PI), tt(-1.5, 1.5);
    const double th1 = ang(rng), t = tt(rng), th2 = ang(rng);
    return SL2Element::k_theta(th1) * SL2Element::a_t(t) * SL2Element::k_theta(th2);
}

}  // namespace conelab
