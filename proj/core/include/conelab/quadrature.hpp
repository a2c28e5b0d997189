#pragma once

// Deterministic adaptive quadrature (GSL QUADPACK) on intervals, on the
// cone Omega and on the reduced G/N integral.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "conelab/jordan.hpp"

namespace conelab {

struct GridProfile {
    std::string name = "default";
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    // GSL workspace size (max subintervals) per nesting level.
    std::array<int, 3> subdivisions{1000, 1000, 1000};
    // Number of windows examined by divergence tail monitors.
    int depth = 8;

    void validate() const;
    // Tolerances for the k-th nested level: 10^-k times the outer ones.
    GridProfile nested(int level) const;

    static GridProfile named(const std::string& name);
    static std::vector<std::string> names();
};

// Parse "[name]" sections of "key = value" lines; '#' starts a comment.
// Keys: rel_tol, abs_tol, subdivisions (one value or three comma-separated), depth.
std::map<std::string, GridProfile> parse_profiles(const std::string& text);
std::map<std::string, GridProfile> load_profiles(const std::string& path);

struct IntegralResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;

    double real() const { return value.real(); }
};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;
using ConeFn = std::function<double(const JordanElement&)>;
using ConeComplexFn = std::function<cplx(const JordanElement&)>;

// a may be -inf and b may be +inf.
IntegralResult integrate_1d(const RealFn& f, double a, double b, const GridProfile& p,
                            int level = 0);
IntegralResult integrate_1d_complex(const ComplexFn& f, double a, double b, const GridProfile& p,
                                    int level = 0);

enum class OmegaSymmetry { None, RotationInvariant };

// Lebesgue measure of the trace-form inner product. Rank 2 uses
// x = R(phi) diag(b + c, b) R(phi)^T with b, c > 0 and phi in [0, pi).
IntegralResult integrate_omega(const ConeFn& f, const AlgebraDescriptor& alg, const GridProfile& p,
                               OmegaSymmetry sym = OmegaSymmetry::None);
IntegralResult integrate_omega_complex(const ConeComplexFn& f, const AlgebraDescriptor& alg,
                                       const GridProfile& p,
                                       OmegaSymmetry sym = OmegaSymmetry::None);
// Same parameterization with Jacobian (lambda1 - lambda2) and no normalizing factor.
IntegralResult integrate_omega_spectral_raw(const ConeFn& f, const AlgebraDescriptor& alg,
                                            const GridProfile& p,
                                            OmegaSymmetry sym = OmegaSymmetry::None);
// Rank 2 only: x11, x22 > 0, |x12| < sqrt(x11 x22), trace-form measure.
IntegralResult integrate_omega_box(const ConeFn& f, const GridProfile& p);

// c_gn * int_Omega phi(x) Delta(x)^{-2n/r} dx, phi being |iota|^2 written in x = l.e.
IntegralResult integrate_gn_lowest_ktype(const ConeFn& phi, const AlgebraDescriptor& alg,
                                         const GridProfile& p,
                                         OmegaSymmetry sym = OmegaSymmetry::RotationInvariant);

enum class FourierWeight { Cosine, Sine };
// int_0^inf f(x) cos(omega x) dx or the sine analogue. scale sets the absolute
// tolerance rel_tol * scale.
IntegralResult integrate_fourier(const RealFn& f, double omega, FourierWeight w,
                                 const GridProfile& p, double scale);
// int_R g(x) e^{-i omega x} dx for omega > 0 by four half-line QAWF calls.
IntegralResult integrate_fourier_line(const ComplexFn& g, double omega, const GridProfile& p,
                                      double scale);

// Window increments of a truncated integral; divergent when they stop shrinking.
struct TailReport {
    std::vector<double> increments;
    std::vector<double> ratios;
    bool divergent = false;
};
TailReport monitor_tail(const std::vector<double>& increments);

}  // namespace conelab
