#include "conelab/whittaker.hpp"

#include <cmath>
#include <limits>

namespace conelab {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

void require_model(const WhittakerVector& W, Model m, Side s, const char* op) {
    if (W.model != m || W.side != s)
        throw DomainError(std::string(op) + ": Whittaker vector has the wrong model or side");
}

}  // namespace

WhittakerVector::WhittakerVector(Model model, Side side, const JordanElement& v, cplx eta)
    : model(model), side(side), v(v), eta(eta) {
    if (!cone_contains(v)) throw DomainError("Whittaker vector: v must lie in the cone");
}

cplx eval_whittaker_coneL2_N(const WhittakerVector& W, const ModelFunction& f) {
    require_model(W, Model::ConeL2, Side::N, "eval_whittaker_coneL2_N");
    return W.eta * f(W.v);
}

IntegralResult eval_whittaker_coneL2_Nbar(const WhittakerVector& W, const ModelFunction& f,
                                          const GridProfile& p) {
    require_model(W, Model::ConeL2, Side::Nbar, "eval_whittaker_coneL2_Nbar");
    if (W.v.algebra().family() != Family::RankOneReal)
        throw UnsupportedOperation("the N-bar Whittaker vector needs the rank-one Bessel kernel");
    if (!f.m.is_uniform()) throw DomainError("scalar weight expected");
    const double m = f.m.omega();
    const double v = W.v[0].real();
    const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
    // kernel J(u, v) = c_0 S(uv) u^m, measure u^{-1} du
    IntegralResult r = integrate_1d_complex(
        [&](double u) {
            if (u == 0.0) return cplx(0.0);
            const cplx fu = f(JordanElement::real(alg, {u}));
            if (fu == cplx(0.0)) return cplx(0.0);
            return bessel_kernel(m, u * v) * std::pow(u, m - 1.0) * fu;
        },
        0.0, kInf, p);
    r.value *= W.eta;
    r.error_estimate *= std::abs(W.eta);
    return r;
}

cplx eval_whittaker_tube(const WhittakerVector& W, const JordanElement& z, double m) {
    if (W.model != Model::Tube) throw DomainError("eval_whittaker_tube: tube vector expected");
    if (!tube_contains(z)) throw DomainError("eval_whittaker_tube: point outside the tube domain");
    const JordanElement zb = z.conj();
    const JordanElement v = W.v.as_complex();
    if (W.side == Side::N) return std::exp(cplx(0.0, -1.0) * trace_form(zb, v)) * W.eta;
    return std::exp(cplx(0.0, 1.0) * trace_form(jinv(zb), v)) * W.eta *
           std::conj(pi_tube(z, m));
}

cplx eval_whittaker_disk(const WhittakerVector& W, const JordanElement& w, double m) {
    if (W.model != Model::Disk) throw DomainError("eval_whittaker_disk: disk vector expected");
    if (!disk_contains(w)) throw DomainError("eval_whittaker_disk: point outside the bounded domain");
    const JordanElement e = JordanElement::unit(w.algebra()).as_complex();
    const JordanElement wb = w.conj();
    const JordanElement v = W.v.as_complex();
    if (W.side == Side::N) {
        const JordanElement a = jmul(e + wb, jinv(e - wb));
        return std::exp(-trace_form(a, v)) * W.eta * std::conj(cayley_factor(w, m));
    }
    const JordanElement a = jmul(e - wb, jinv(e + wb));
    return std::exp(-trace_form(a, v)) * W.eta * std::conj(cayley_factor(-w, m));
}

cplx eval_whittaker_disk_alt(const WhittakerVector& W, const JordanElement& w, double m) {
    if (W.model != Model::Disk || W.side != Side::N)
        throw DomainError("eval_whittaker_disk_alt: N-side disk vector expected");
    if (!disk_contains(w)) throw DomainError("eval_whittaker_disk_alt: point outside the bounded domain");
    const JordanElement e = JordanElement::unit(w.algebra()).as_complex();
    const JordanElement v = W.v.as_complex();
    return std::exp(-2.0 * trace_form(jinv(e - w.conj()), v)) * W.eta *
           std::conj(cayley_factor(w, m));
}

IntegralResult pair_whittaker_tube_rank1(const WhittakerVector& W, const ModelFunction& F,
                                         const GridProfile& p) {
    if (F.model != Model::Tube) throw DomainError("pair_whittaker_tube_rank1: tube function expected");
    if (F.m.size() != 1) throw UnsupportedOperation("tube pairing is evaluated at rank 1 only");
    const double m = F.m.omega();
    const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
    IntegralResult r;
    if (W.side == Side::N) {
        // W is e^{-ixv} e^{-yv} eta: a Fourier integral in x
        const double v = W.v[0].real();
        IntegralResult outer = integrate_1d_complex(
            [&](double y) {
                auto at = [&](double x) { return F(JordanElement::complex(alg, {cplx(x, y)})); };
                const double scale = std::abs(at(0.0));
                if (scale == 0.0) return cplx(0.0);
                IntegralResult inner = integrate_fourier_line(at, v, p.nested(1), scale);
                r.evaluations += inner.evaluations;
                return inner.value * std::exp(-y * v) * std::pow(y, m - 2.0);
            },
            0.0, kInf, p, 0);
        r.value = outer.value * W.eta;
        r.error_estimate = outer.error_estimate * std::abs(W.eta);
        return r;
    }
    auto part = [&](bool imag) {
        IntegralResult outer = integrate_1d(
            [&](double y) {
                IntegralResult inner = integrate_1d(
                    [&](double x) {
                        const JordanElement z = JordanElement::complex(alg, {cplx(x, y)});
                        const cplx val = F(z) * eval_whittaker_tube(W, z, m);
                        return imag ? val.imag() : val.real();
                    },
                    -kInf, kInf, p, 1);
                r.evaluations += inner.evaluations;
                return inner.real() * std::pow(y, m - 2.0);
            },
            0.0, kInf, p, 0);
        r.error_estimate += outer.error_estimate;
        return outer.real();
    };
    const double re = part(false);
    r.value = cplx(re, part(true));
    return r;
}

IntegralResult pair_whittaker_disk_rank1(const WhittakerVector& W, const ModelFunction& f,
                                         const GridProfile& p) {
    if (f.model != Model::Disk) throw DomainError("pair_whittaker_disk_rank1: disk function expected");
    if (f.m.size() != 1) throw UnsupportedOperation("disk pairing is evaluated at rank 1 only");
    const double m = f.m.omega();
    const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
    IntegralResult r;
    auto part = [&](bool imag) {
        IntegralResult outer = integrate_1d(
            [&](double rho) {
                IntegralResult inner = integrate_1d(
                    [&](double th) {
                        const JordanElement w = JordanElement::complex(alg, {std::polar(rho, th)});
                        const cplx val = f(w) * eval_whittaker_disk(W, w, m);
                        return imag ? val.imag() : val.real();
                    },
                    -M_PI, M_PI, p, 1);
                r.evaluations += inner.evaluations;
                return inner.real() * rho * std::pow(1.0 - rho * rho, m - 2.0);
            },
            0.0, 1.0, p, 0);
        r.error_estimate += outer.error_estimate;
        return outer.real();
    };
    const double re = part(false);
    r.value = cplx(re, part(true));
    return r;
}

double matrix_coeff_lowest_ktype(const ExponentVector& m, const JordanElement& v, cplx eta,
                                 const JordanElement& x) {
    const AlgebraDescriptor& alg = v.algebra();
    if (!in_discrete_series(m, alg))
        throw DivergenceError("matrix coefficient is not square integrable for m_r = " +
                              std::to_string(m.omega()));
    if (!cone_contains(v)) throw DomainError("matrix coefficient: v must lie in the cone");
    return std::norm(eta) * power_function(x, m) * std::exp(-2.0 * trace_form(x, v).real());
}

double matrix_coeff_jacobian(const ExponentVector& m, const JordanElement& v) {
    const AlgebraDescriptor& alg = v.algebra();
    if (!m.is_uniform()) throw DomainError("matrix_coeff_jacobian: uniform m expected");
    return std::pow(jdet(v).real(), alg.n_over_r() - m.omega());
}

TailReport matrix_coeff_tail(const ExponentVector& m, const AlgebraDescriptor& alg,
                             const GridProfile& p) {
    if (!m.is_uniform()) throw DomainError("matrix_coeff_tail: uniform m expected");
    const double s = m.omega() - 2.0 * alg.n_over_r();
    std::vector<double> inc;
    for (int k = 0; k < p.depth; ++k) {
        const double hi = std::pow(10.0, -k), lo = std::pow(10.0, -k - 1);
        if (alg.family() == Family::RankOneReal) {
            inc.push_back(integrate_1d([&](double x) { return std::pow(x, s) * std::exp(-2.0 * x); },
                                       lo, hi, p)
                              .real());
        } else {
            // rotation-invariant integrand in spectral coordinates b = lambda2, c = lambda1 - lambda2
            inc.push_back(integrate_1d(
                              [&](double b) {
                                  return integrate_1d(
                                             [&](double c) {
                                                 const double l1 = b + c;
                                                 return c * std::pow(l1 * b, s) *
                                                        std::exp(-2.0 * (l1 + b));
                                             },
                                             0.0, kInf, p, 1)
                                      .real();
                              },
                              lo, hi, p)
                              .real());
        }
    }
    return monitor_tail(inc);
}

}  // namespace conelab
