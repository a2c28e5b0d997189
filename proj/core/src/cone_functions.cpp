#include "conelab/cone_functions.hpp"

#include <cmath>
#include <limits>

namespace conelab {

void BesselSeriesConfig::validate() const {
    if (max_terms < 1) throw DomainError("bessel: max_terms must be >= 1");
    if (!(tail_tolerance > 0.0)) throw DomainError("bessel: tail_tolerance must be > 0");
}

double gamma_cone(const ExponentVector& s, const AlgebraDescriptor& alg) {
    if (s.size() != alg.r())
        throw DescriptorMismatch("gamma_cone: exponent length " + std::to_string(s.size()) +
                                 " vs rank " + std::to_string(alg.r()));
    double out = std::pow(2.0 * M_PI, 0.5 * (alg.n() - alg.r()));
    for (int j = 0; j < alg.r(); ++j) {
        const double arg = s[j] - 0.5 * j * alg.d();
        if (arg <= 0.0) throw PoleError("gamma_cone: argument " + std::to_string(arg) + " <= 0", j + 1);
        out *= std::tgamma(arg);
    }
    return out;
}

double laplace_power(const ExponentVector& s, const JordanElement& y) {
    const double g = gamma_cone(s, y.algebra());
    if (!cone_contains(y)) throw DomainError("laplace_power: y outside the cone");
    return g * power_function(jinv(y).re(), s);
}

double discrete_series_threshold(const AlgebraDescriptor& alg) {
    return 2.0 * alg.n_over_r() - 1.0;
}

bool in_discrete_series(const ExponentVector& m, const AlgebraDescriptor& alg) {
    return m.size() == alg.r() && m.omega() > discrete_series_threshold(alg);
}

double gamma_tilde_scalar(const ExponentVector& m, const AlgebraDescriptor& alg) {
    if (m.size() != alg.r()) throw DescriptorMismatch("gamma_tilde_scalar: exponent length vs rank");
    if (!m.is_uniform()) throw DomainError("gamma_tilde_scalar: scalar case needs uniform m");
    if (!in_discrete_series(m, alg))
        throw DivergenceError("gamma_tilde_scalar: m_r = " + std::to_string(m.omega()) +
                              " is not above 2n/r - 1 = " +
                              std::to_string(discrete_series_threshold(alg)));
    return std::pow(2.0, alg.n() - m.sum()) * gamma_cone(m.shifted(alg.n_over_r()), alg);
}

BesselSeriesValue bessel_series(double m, double u, const BesselSeriesConfig& cfg) {
    cfg.validate();
    if (!(m > 1.0)) throw DomainError("bessel: m must be > 1");
    if (u < 0.0) throw DomainError("bessel: u must be >= 0");
    long double term = 1.0L, sum = 1.0L, biggest = 1.0L;
    const long double lu = u;
    BesselSeriesValue out;
    int k = 0;
    for (; k < cfg.max_terms; ++k) {
        term *= -lu / ((k + 1.0L) * (k + (long double)m));
        const long double a = fabsl(term);
        if (a > biggest) biggest = a;
        // terms decrease once k + 1 > u/(k+m); stop when the next one is negligible
        if (a <= cfg.tail_tolerance * biggest && (k + 1.0L) * (k + m) > lu) {
            out.tail_estimate = double(a);
            break;
        }
        sum += term;
    }
    out.terms = k + 1;
    out.value = double(sum);
    out.rounding_estimate = double(biggest * std::numeric_limits<long double>::epsilon());
    if (k == cfg.max_terms)
        throw PrecisionError("bessel: series not converged in max_terms", double(fabsl(term)));
    return out;
}

double bessel_rank1(double m, double u, const BesselSeriesConfig& cfg) {
    if (u > kBesselSeriesLimit && m > 1.0)
        return std::pow(u, -0.5 * (m - 1.0)) * std::cyl_bessel_j(m - 1.0, 2.0 * std::sqrt(u));
    return bessel_series(m, u, cfg).value / std::tgamma(m);
}

cplx bessel_phase(double m) { return std::polar(1.0, -0.5 * M_PI * m); }

cplx bessel_kernel(double m, double u, const BesselSeriesConfig& cfg) {
    return bessel_phase(m) * bessel_rank1(m, u, cfg);
}

double bessel_coefficient(double m, int k) {
    double c = 1.0 / std::tgamma(m);
    for (int j = 0; j < k; ++j) c *= -1.0 / ((j + 1.0) * (j + m));
    return c;
}

}  // namespace conelab
