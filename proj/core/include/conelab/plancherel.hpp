#pragma once

// Formal dimension of the holomorphic discrete series in L^2(G/N, psi).

#include <string>
#include <vector>

#include "conelab/whittaker.hpp"

namespace conelab {

// 2^{n - 2 sum m} Gamma_Omega(m) Gamma_Omega(m - n/r).
double lkt_norm_closed(const ExponentVector& m, const AlgebraDescriptor& alg);
// Gamma~ int_Omega Delta_m(x) e^{-2 tr x} Delta(x)^{-n/r} dx.
IntegralResult lkt_norm_quadrature(const ExponentVector& m, const AlgebraDescriptor& alg,
                                   const GridProfile& p = GridProfile::named("default"));

// <W_{e,eta}, W_{e,eta'}> = Gamma~ eta conj(eta').
cplx whittaker_inner(cplx eta, cplx eta_prime, const ExponentVector& m, const AlgebraDescriptor& alg);

// 4^{sum m} dim(pi) / (Gamma_Omega(m) Gamma_Omega(m - n/r)) with dim(pi) = 1.
double formal_dimension_shape(const ExponentVector& m, const AlgebraDescriptor& alg);

struct FormalDimensionRecord {
    std::string algebra;
    ExponentVector m{std::vector<double>{1.0}};
    std::vector<double> v;
    double numeric_d = 0.0;
    double closed_form_shape = 0.0;
    double fitted_constant = 0.0;     // numeric_d / shape
    double reciprocal_constant = 0.0;  // numeric_d * shape
    double lkt_norm = 0.0;
    double whittaker_norm = 0.0;
    double gn_integral = 0.0;
    double gn_error = 0.0;
    double jacobian = 1.0;
    std::string profile;
    long evaluations = 0;
};

FormalDimensionRecord formal_dimension_numeric(const ExponentVector& m, const JordanElement& v,
                                               const GridProfile& p = GridProfile::named("default"));
// Rank 1 through SU(1,1): ||f_xi||^2 <W,W> / (e^{-2v} gn_norm_fn(m, 2v)).
double formal_dimension_su11(int m, double v, const GridProfile& p = GridProfile::named("default"));

struct ShapeFit {
    double direct_mean = 0.0, direct_spread = 0.0;
    double reciprocal_mean = 0.0, reciprocal_spread = 0.0;
    bool direct_stable = false, reciprocal_stable = false;
    std::string verdict;  // "direct", "reciprocal" or "unstable"
};
// Spread = (max - min)/mean; stable below tol.
ShapeFit fit_formal_dimension_shape(const std::vector<FormalDimensionRecord>& records,
                                    double tol = 1e-3);

struct OrthogonalityPair {
    std::string label;
    cplx gn_integral;
    cplx l2_inner;
    cplx ratio;
};

struct OrthogonalityCheck {
    std::vector<OrthogonalityPair> pairs;
    cplx diagonal_ratio;
    double spread = 0.0;  // max |ratio_k - ratio_0| / |ratio_0|
};

// Rank 1, integer m: G/N integrals of N- and L-translates of F_m against L^2(Omega)
// inner products of the matching translates of f_xi.
OrthogonalityCheck orthogonality_factorization(int m, double v,
                                               const GridProfile& p = GridProfile::named("default"));

}  // namespace conelab
