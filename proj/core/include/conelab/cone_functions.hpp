#pragma once

// Gamma and Bessel functions of the symmetric cone.

#include "conelab/jordan.hpp"

namespace conelab {

struct BesselSeriesConfig {
    int max_terms = 600;
    double tail_tolerance = 1e-17;  // relative to the largest term
    void validate() const;
};

struct BesselSeriesValue {
    double value = 0.0;
    double tail_estimate = 0.0;      // size of the first omitted term
    double rounding_estimate = 0.0;  // largest term times long double epsilon
    int terms = 0;
};

// Gamma_Omega(s) = (2 pi)^{(n-r)/2} prod_j Gamma(s_j - (j-1) d/2).
double gamma_cone(const ExponentVector& s, const AlgebraDescriptor& alg);

// int_Omega e^{-(x|y)} Delta_s(x) Delta(x)^{-n/r} dx = Gamma_Omega(s) Delta_s(y^{-1}).
double laplace_power(const ExponentVector& s, const JordanElement& y);

// Holomorphic discrete series range m_r > 2n/r - 1.
bool in_discrete_series(const ExponentVector& m, const AlgebraDescriptor& alg);
double discrete_series_threshold(const AlgebraDescriptor& alg);

// int_Omega e^{-2 tr u} Delta_m(u) Delta(u)^{-2n/r} du = 2^{n - sum m} Gamma_Omega(m - n/r).
double gamma_tilde_scalar(const ExponentVector& m, const AlgebraDescriptor& alg);

// Rank-one Bessel series S(u) = sum_k s_k u^k with s_0 = 1 and
// s_{k+1}/s_k = -1/((k+1)(k+m)). Summed in long double.
BesselSeriesValue bessel_series(double m, double u, const BesselSeriesConfig& cfg = {});

// Above this argument the series cancels badly in long double and bessel_rank1
// switches to u^{-(m-1)/2} J_{m-1}(2 sqrt u), which it equals.
inline constexpr double kBesselSeriesLimit = 50.0;

// S(u)/Gamma(m). The full kernel is bessel_phase(m) * bessel_rank1(m, u).
double bessel_rank1(double m, double u, const BesselSeriesConfig& cfg = {});
// Unimodular factor (-i)^m of the series normalization.
cplx bessel_phase(double m);
cplx bessel_kernel(double m, double u, const BesselSeriesConfig& cfg = {});
// k-th Taylor coefficient of bessel_rank1.
double bessel_coefficient(double m, int k);

}  // namespace conelab
