#pragma once

// Measure normalizations fixed numerically once per process and archived in
// reports. Each constant is computed with the "strict" profile on first use.

#include <string>

#include "conelab/jordan.hpp"

namespace conelab {

inline constexpr const char* kConstantsSchema = "conelab-constants/1";

// Ratio closed-form / raw spectral integral of e^{-tr x} on Sym(2) (analytic sqrt 2).
double omega_measure_factor();
// G/N measure of the reduced Omega integral relative to (1/4pi) int dtheta int e^{2t} dt,
// fixed at rank 1, m = 2, v = e (analytic 1/2).
double gn_measure_constant();
// c_0 Gamma(m) from the defining Laplace identity of the rank-one Bessel series at z = 2i
// (analytic (-i)^m).
cplx bessel_normalization(double m);

struct CalibrationEntry {
    std::string name;
    double value;
    double analytic;
    std::string anchor;
};

std::vector<CalibrationEntry> calibration_table();

}  // namespace conelab
