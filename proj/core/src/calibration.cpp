#include "conelab/calibration.hpp"

#include <cmath>
#include <limits>

#include "conelab/cone_functions.hpp"
#include "conelab/quadrature.hpp"
#include "conelab/su11.hpp"

namespace conelab {

double omega_measure_factor() {
    static const double value = [] {
        const AlgebraDescriptor alg = AlgebraDescriptor::sym2();
        const double raw =
            integrate_omega_spectral_raw([](const JordanElement& x) { return std::exp(-jtrace(x).real()); },
                                         alg, GridProfile::named("strict"),
                                         OmegaSymmetry::RotationInvariant)
                .real();
        return gamma_cone(ExponentVector({1.5, 1.5}), alg) / raw;
    }();
    return value;
}

double gn_measure_constant() {
    static const double value = [] {
        const GridProfile p = GridProfile::named("strict");
        const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
        // m = 2, v = e: |iota|^2 = x^2 e^{-2x}, and F_2 with v_su = 2 carries |eta|^2 = e^{2}
        const double omega_side =
            integrate_omega([](const JordanElement& x) {
                const double u = x[0].real();
                return std::exp(-2.0 * u);  // x^2 e^{-2x} x^{-2}
            }, alg, p).real();
        const double su_side = std::exp(-2.0) * gn_norm_fn(2, 2.0, p).result.real();
        return su_side / omega_side;
    }();
    return value;
}

cplx bessel_normalization(double m) {
    const cplx z(0.0, 2.0);
    const GridProfile p = GridProfile::named("strict");
    const double gm = std::tgamma(m);
    // int e^{izu} u^{m-1} S(u) du with S(0) = 1
    const cplx transform =
        integrate_1d_complex(
            [&](double u) {
                if (u == 0.0) return cplx(0.0);
                return std::exp(cplx(0.0, 1.0) * z * u) * std::pow(u, m - 1.0) *
                       bessel_series(m, u).value;
            },
            0.0, std::numeric_limits<double>::infinity(), p)
            .value;
    const cplx target = std::exp(cplx(0.0, -1.0) / z) *
                        holo_det_power(JordanElement::complex(AlgebraDescriptor::rank_one(), {z}), m);
    return target / transform * gm;
}

std::vector<CalibrationEntry> calibration_table() {
    return {
        {"omega_measure_factor", omega_measure_factor(), std::sqrt(2.0),
         "int_Omega e^{-tr x} dx on Sym(2) vs Gamma_Omega(3/2,3/2)"},
        {"gn_measure_constant", gn_measure_constant(), 0.5,
         "rank 1, m = 2, v = e against the SU(1,1) G/N norm of F_2 at v = 2"},
        {"bessel_c0_gamma_m2_re", bessel_normalization(2.0).real(), -1.0,
         "defining Laplace identity at z = 2i, m = 2"},
        {"bessel_c0_gamma_m2_im", bessel_normalization(2.0).imag(), 0.0,
         "defining Laplace identity at z = 2i, m = 2"},
    };
}

}  // namespace conelab
