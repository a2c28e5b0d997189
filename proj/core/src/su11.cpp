#include "conelab/su11.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace conelab {

namespace {

const cplx I(0.0, 1.0);
const double kInf = std::numeric_limits<double>::infinity();
// beyond this |t| the integrands of convergent G/N integrals are below 1e-300
const double kTMax = 345.0;

double rel_dev(cplx x, cplx ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

// (1/4pi) int_0^{4pi} dtheta int dt f(k_theta, t) e^{2t}, f evaluated on k_theta a_t
IntegralResult gn_integrate(const std::function<double(const SL2Element&, double)>& f,
                            const GridProfile& p) {
    IntegralResult r;
    IntegralResult outer = integrate_1d(
        [&](double th) {
            const SL2Element k = SL2Element::k_theta(th);
            IntegralResult inner = integrate_1d(
                [&](double t) {
                    if (std::abs(t) > kTMax) return 0.0;
                    const double v = f(k, t);
                    return v == 0.0 ? 0.0 : v * std::exp(2.0 * t);
                },
                -kInf, kInf, p, 1);
            r.evaluations += inner.evaluations;
            return inner.real();
        },
        0.0, 4.0 * M_PI, p, 0);
    r.value = outer.value / (4.0 * M_PI);
    r.error_estimate = outer.error_estimate / (4.0 * M_PI);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- SL(2,C)

SL2Element SL2Element::make(cplx a, cplx b, cplx c, cplx d, double tol) {
    SL2Element g{a, b, c, d};
    if (std::abs(g.det() - 1.0) > tol)
        throw DomainError("SL2 element must have unit determinant (|det - 1| = " +
                          std::to_string(std::abs(g.det() - 1.0)) + ")");
    return g;
}

SL2Element SL2Element::a_t(double t) {
    return {std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t)};
}

SL2Element SL2Element::n_x(cplx x) { return {1.0 + I * x, -I * x, I * x, 1.0 - I * x}; }

SL2Element SL2Element::k_theta(cplx theta) { return k_gamma(std::exp(I * theta * 0.5)); }

SL2Element SL2Element::k_gamma(cplx gamma) { return {gamma, 0.0, 0.0, 1.0 / gamma}; }

SL2Element SL2Element::p_plus(cplx z) { return {1.0, z, 0.0, 1.0}; }

SL2Element SL2Element::p_minus(cplx w) { return {1.0, 0.0, w, 1.0}; }

SL2Element SL2Element::diag(cplx rho) { return {rho, 0.0, 0.0, 1.0 / rho}; }

SL2Element SL2Element::operator*(const SL2Element& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

SL2Element SL2Element::inverse() const {
    const cplx dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
}

cplx SL2Element::mobius(cplx z) const { return (a * z + b) / (c * z + d); }

bool SL2Element::in_su11(double tol) const {
    return std::abs(std::norm(a) - std::norm(c) - 1.0) < tol &&
           std::abs(std::conj(a) * b - std::conj(c) * d) < tol &&
           std::abs(std::norm(d) - std::norm(b) - 1.0) < tol && std::abs(det() - 1.0) < tol;
}

double SL2Element::distance(const SL2Element& o) const {
    return std::max({std::abs(a - o.a), std::abs(b - o.b), std::abs(c - o.c), std::abs(d - o.d)});
}

// ---------------------------------------------------------------- factorizations

SL2Element PKNFactorization::reassemble() const {
    const SL2Element p = minus ? SL2Element::p_minus(p_plus) : SL2Element::p_plus(p_plus);
    return p * SL2Element::k_gamma(gamma) * SL2Element::n_x(s);
}

PKNFactorization pkn_decompose(const SL2Element& g, double tol) {
    const cplx q = g.c + g.d;
    if (std::abs(q) <= tol)
        throw NotInDenseCell("pkn_decompose: c + d = 0, element outside P+ K_C N_C", std::abs(q));
    return {(g.a + g.b) / q - 1.0 / (q * q), 1.0 / q, -I * g.c / q, false};
}

PKNFactorization pkn_minus_decompose(const SL2Element& g, double tol) {
    const cplx q = g.a + g.b;
    if (std::abs(q) <= tol)
        throw NotInDenseCell("pkn_minus_decompose: a + b = 0, element outside P- K_C N_C",
                             std::abs(q));
    return {(g.c + g.d - 1.0 / q) / q, q, I * g.b / q, true};
}

SemigroupVerdict in_contraction_semigroup(const SL2Element& g, int boundary_samples) {
    if (boundary_samples < 3) throw DomainError("in_contraction_semigroup: need >= 3 samples");
    double worst = 0.0;
    for (int k = 0; k < boundary_samples; ++k) {
        const cplx z = std::polar(1.0, 2.0 * M_PI * k / boundary_samples);
        const cplx den = g.c * z + g.d;
        const double mod = std::abs(den) == 0.0 ? kInf : std::abs(g.mobius(z));
        worst = std::max(worst, mod);
    }
    const bool interior = std::abs(g.d) > 0.0 && std::abs(g.b / g.d) < 1.0;
    return {interior && worst <= 1.0 + 1e-12, 1.0 - worst};
}

// ---------------------------------------------------------------- F_n

cplx psi_v(cplx s, double v) { return std::exp(-I * v * s); }

cplx chi_n(cplx gamma, int n) { return std::pow(gamma, -n); }

cplx j_cocycle(const SL2Element& h, cplx z, int n) { return std::pow(h.c * z + h.d, -n); }

cplx f_n(const SL2Element& g, int n, double v) {
    const PKNFactorization f = pkn_decompose(g, 0.0);
    return psi_v(-f.s, v) * chi_n(1.0 / f.gamma, n);
}

cplx lkt_T(const SL2Element& g, int n, double v) {
    const PKNFactorization f = pkn_decompose(g, 0.0);
    const SL2Element k = SL2Element::k_gamma(f.gamma);
    // pi_c(k^{-1}) = j(k, 0)
    return psi_v(-f.s, v) * j_cocycle(k, 0.0, n);
}

cplx f_n_at(const SL2Element& m, double t, int n, double v) {
    const cplx sum = m.c + m.d;
    if (sum == 0.0) throw NotInDenseCell("f_n_at: c + d = 0", 0.0);
    // row two of m a_t is ((c+d)e^t + (c-d)e^{-t}, (c+d)e^t - (c-d)e^{-t})/2
    const cplx ratio = 0.5 + 0.5 * (m.c - m.d) / sum * std::exp(-2.0 * t);
    return std::exp(v * ratio - double(n) * (std::log(sum) + t));
}

double gn_norm_closed(int n, double v) {
    if (n <= 1 || v <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return 0.5 * std::exp(v) * std::tgamma(n - 1.0) * std::pow(v, 1.0 - n);
}

GnNorm gn_norm_fn(int n, double v, const GridProfile& p) {
    GnNorm out;
    out.closed_form = gn_norm_closed(n, v);
    // |F_n(k a_t)|^2 does not depend on theta, so the theta average is 1
    auto integrand = [&](double t) {
        if (std::abs(t) > kTMax) return 0.0;
        const double m2 = std::norm(f_n_at(SL2Element::identity(), t, n, v));
        return m2 == 0.0 ? 0.0 : m2 * std::exp(2.0 * t);
    };
    std::vector<double> up, down;
    for (int k = 0; k < p.depth; ++k) {
        auto window = [&](double a, double b) {
            try {
                return integrate_1d(integrand, a, b, p).real();
            } catch (const PrecisionError&) {
                return kInf;
            }
        };
        up.push_back(window(k, k + 1.0));
        down.push_back(window(-k - 1.0, -double(k)));
    }
    const TailReport tu = monitor_tail(up), td = monitor_tail(down);
    out.tail = tu.divergent ? tu : td;
    out.divergent = tu.divergent || td.divergent;
    if (out.divergent) {
        double partial = 0.0;
        for (double x : up) partial += x;
        for (double x : down) partial += x;
        out.result.value = partial;
        out.result.error_estimate = kInf;
        return out;
    }
    out.tail = tu;
    out.result = integrate_1d(integrand, -kInf, kInf, p);
    return out;
}

// ---------------------------------------------------------------- Psi

SL2Element disk_representative(cplx z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("disk_representative: |z| must be < 1");
    const double s = 1.0 / std::sqrt(1.0 - std::norm(z));
    return {s, s * z, s * std::conj(z), s};
}

cplx psi_kernel(const SL2Element& a, cplx z, int n, double v) {
    const SL2Element b = disk_representative(z);
    const PKNFactorization f = pkn_minus_decompose(b.inverse() * a, 0.0);
    // pi_c(k~) = j(k~^{-1}, 0) = gamma^{-n}
    return psi_v(f.s, v) / j_cocycle(b, 0.0, n) * std::pow(f.gamma, -n);
}

KernelCovariance psi_kernel_covariance(int n, double v, int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-2.0, 2.0), rad(0.0, 0.8), ang(-M_PI, M_PI);
    KernelCovariance out;
    out.samples = samples;
    for (int k = 0; k < samples; ++k) {
        const SL2Element a = random_su11(rng);
        const SL2Element g = random_su11(rng);
        const cplx z = std::polar(rad(rng), ang(rng));
        const double x = ux(rng);
        const cplx base = psi_kernel(a, z, n, v);
        out.right_n_deviation = std::max(
            out.right_n_deviation,
            rel_dev(psi_kernel(a * SL2Element::n_x(x), z, n, v), psi_v(x, v) * base));
        const SL2Element gi = g.inverse();
        const cplx rhs = j_cocycle(gi, z, n) * psi_kernel(a, gi.mobius(z), n, v);
        out.cocycle_deviation = std::max(out.cocycle_deviation, rel_dev(psi_kernel(g * a, z, n, v), rhs));
        const PKNFactorization f = pkn_minus_decompose(a);
        const cplx phi = psi_v(f.s, v) * std::pow(f.gamma, -n);
        out.identity_reduction_deviation =
            std::max(out.identity_reduction_deviation, rel_dev(psi_kernel(a, 0.0, n, v), phi));
    }
    return out;
}

// ---------------------------------------------------------------- Hardy boundary values

std::vector<HardyPoint> hardy_boundary(int n, double v, const std::vector<double>& rhos,
                                       const GridProfile& p) {
    if (n <= 1 || v <= 0.0) throw DivergenceError("hardy_boundary needs n > 1 and v > 0");
    const double base =
        gn_integrate([&](const SL2Element& k, double t) { return std::norm(f_n_at(k, t, n, v)); }, p)
            .real();
    std::vector<HardyPoint> out;
    for (double rho : rhos) {
        const SL2Element si = SL2Element::diag(1.0 / rho);
        const double diff = gn_integrate(
                                [&](const SL2Element& k, double t) {
                                    return std::norm(f_n_at(si * k, t, n, v) - f_n_at(k, t, n, v));
                                },
                                p)
                                .real();
        const double norm_s =
            gn_integrate([&](const SL2Element& k, double t) { return std::norm(f_n_at(si * k, t, n, v)); },
                         p)
                .real();
        out.push_back({rho, diff / base, std::sqrt(diff / base), std::sqrt(norm_s / base)});
    }
    return out;
}

IntegralResult gn_inner_translates(const SL2Element& h1, const SL2Element& h2, int n, double v,
                                   const GridProfile& p) {
    const SL2Element i1 = h1.inverse(), i2 = h2.inverse();
    auto prod = [&](const SL2Element& k, double t) {
        return f_n_at(i1 * k, t, n, v) * std::conj(f_n_at(i2 * k, t, n, v));
    };
    IntegralResult re =
        gn_integrate([&](const SL2Element& k, double t) { return prod(k, t).real(); }, p);
    IntegralResult im =
        gn_integrate([&](const SL2Element& k, double t) { return prod(k, t).imag(); }, p);
    IntegralResult r;
    r.value = cplx(re.real(), im.real());
    r.error_estimate = std::hypot(re.error_estimate, im.error_estimate);
    r.evaluations = re.evaluations + im.evaluations;
    return r;
}

}  // namespace conelab
