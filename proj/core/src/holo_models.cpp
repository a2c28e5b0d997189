#include "conelab/holo_models.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

namespace conelab {

namespace {

const cplx I(0.0, 1.0);
const double kInf = std::numeric_limits<double>::infinity();

JordanElement ie(const AlgebraDescriptor& alg) {
    return JordanElement::unit(alg).as_complex() * I;
}

double weight_of(const ModelFunction& f) {
    if (!f.m.is_uniform()) throw DomainError("holomorphic models are implemented for uniform m");
    return f.m.omega();
}

void require_model(const ModelFunction& f, Model m, const char* op) {
    if (f.model != m)
        throw DomainError(std::string(op) + ": expected a " + to_string(m) + " function, got " +
                          to_string(f.model));
}

}  // namespace

std::string to_string(Model m) {
    switch (m) {
        case Model::Tube: return "tube";
        case Model::Disk: return "disk";
        case Model::ConeL2: return "coneL2";
    }
    return "?";
}

// ---------------------------------------------------------------- L elements

LeviElement LeviElement::from_matrix(const AlgebraDescriptor& alg, const Eigen::Matrix2d& a) {
    LeviElement l{alg, a};
    if (l.abs_det() < 1e-300) throw NonInvertible("Levi element must be invertible", l.abs_det());
    return l;
}

LeviElement LeviElement::dilation(const AlgebraDescriptor& alg, double t) {
    if (!(t > 0.0)) throw DomainError("dilation factor must be positive");
    return from_matrix(alg, std::sqrt(t) * Eigen::Matrix2d::Identity());
}

LeviElement LeviElement::quadratic(const JordanElement& x) {
    if (!cone_contains(x)) throw DomainError("quadratic: element outside the cone");
    Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
    if (x.algebra().family() == Family::RankOneReal)
        a(0, 0) = x[0].real();
    else
        a = x.to_real_matrix();
    return from_matrix(x.algebra(), a);
}

JordanElement LeviElement::apply(const JordanElement& x) const {
    if (x.algebra() != algebra) throw DescriptorMismatch("Levi element applied across algebras");
    if (algebra.family() == Family::RankOneReal) return x * (a(0, 0) * a(0, 0));
    Eigen::Matrix2cd xm;
    xm << x[0], x[2], x[2], x[1];
    const Eigen::Matrix2cd ac = a.cast<cplx>();
    return JordanElement::from_matrix(Eigen::Matrix2cd(ac * xm * ac.transpose()), x.field());
}

LeviElement LeviElement::adjoint() const {
    return algebra.family() == Family::RankOneReal ? *this : LeviElement{algebra, a.transpose()};
}

LeviElement LeviElement::inverse() const {
    if (algebra.family() == Family::RankOneReal) {
        LeviElement out(*this);
        out.a(0, 0) = 1.0 / a(0, 0);
        return out;
    }
    return LeviElement{algebra, a.inverse()};
}

double LeviElement::abs_det() const {
    return algebra.family() == Family::RankOneReal ? std::abs(a(0, 0)) : std::abs(a.determinant());
}

double LeviElement::character(double m) const { return std::pow(abs_det(), -m); }

// ---------------------------------------------------------------- generators

GroupGenerator GroupGenerator::translation(const JordanElement& u) {
    for (int i = 0; i < u.size(); ++i)
        if (u[i].imag() != 0.0) throw DomainError("translation vector must be real");
    return GroupGenerator{Kind::Translation, u.algebra(), u.re(),
                          LeviElement{u.algebra(), Eigen::Matrix2d::Identity()}};
}

GroupGenerator GroupGenerator::levi(const LeviElement& l) {
    return GroupGenerator{Kind::Levi, l.algebra, JordanElement::zero(l.algebra), l};
}

GroupGenerator GroupGenerator::inversion(const AlgebraDescriptor& alg) {
    return GroupGenerator{Kind::Inversion, alg, JordanElement::zero(alg),
                          LeviElement{alg, Eigen::Matrix2d::Identity()}};
}

JordanElement GroupGenerator::act(const JordanElement& z) const {
    switch (kind) {
        case Kind::Translation: return z + u;
        case Kind::Levi: return l.apply(z);
        case Kind::Inversion: return -jinv(z);
    }
    return z;
}

std::string GroupGenerator::to_string() const {
    std::ostringstream os;
    os.precision(6);
    switch (kind) {
        case Kind::Translation: {
            os << "n_u(";
            const auto c = u.real_coords();
            for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
            os << ")";
            break;
        }
        case Kind::Levi: os << "l(|det A|=" << l.abs_det() << ")"; break;
        case Kind::Inversion: os << "j"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------- tube model

cplx pi_tube(const JordanElement& z, double m) { return holo_det_power(z, m); }

cplx reproducing_kernel(const JordanElement& z, const JordanElement& w, double m, double c_pi) {
    if (!tube_contains(z) || !tube_contains(w))
        throw DomainError("reproducing_kernel: point outside the tube domain");
    return c_pi * right_det_power((z - w.conj()) * cplx(0.0, -1.0), m);
}

ModelFunction act_tube(const GroupGenerator& g, const ModelFunction& F) {
    require_model(F, Model::Tube, "act_tube");
    const double m = weight_of(F);
    ModelFunction out{Model::Tube, F.m, nullptr, g.to_string() + " . " + F.provenance};
    switch (g.kind) {
        case GroupGenerator::Kind::Translation: {
            const JordanElement u = g.u;
            out.eval = [F, u](const JordanElement& z) { return F(z - u); };
            break;
        }
        case GroupGenerator::Kind::Levi: {
            const LeviElement inv = g.l.inverse();
            const double c = g.l.character(m);
            out.eval = [F, inv, c](const JordanElement& z) { return c * F(inv.apply(z)); };
            break;
        }
        case GroupGenerator::Kind::Inversion:
            out.eval = [F, m](const JordanElement& z) { return pi_tube(z, m) * F(-jinv(z)); };
            break;
    }
    return out;
}

ModelFunction lowest_ktype_tube(const AlgebraDescriptor& alg, double m) {
    const JordanElement shift = ie(alg);
    return ModelFunction{Model::Tube, ExponentVector::uniform(alg.r(), m),
                         [shift, m](const JordanElement& z) {
                             if (!tube_contains(z)) throw DomainError("point outside the tube");
                             return right_det_power((z + shift) * cplx(0.0, -0.5), m);
                         },
                         "Delta((z+ie)/2i)^-m"};
}

// ---------------------------------------------------------------- L^2(Omega)

ModelFunction lowest_ktype_coneL2(const AlgebraDescriptor& alg, double m) {
    return ModelFunction{Model::ConeL2, ExponentVector::uniform(alg.r(), m),
                         [](const JordanElement& x) { return cplx(std::exp(-jtrace(x).real())); },
                         "f_xi = e^{-tr u}"};
}

ModelFunction act_coneL2(const GroupGenerator& g, const ModelFunction& f, const GridProfile& p) {
    require_model(f, Model::ConeL2, "act_coneL2");
    const double m = weight_of(f);
    ModelFunction out{Model::ConeL2, f.m, nullptr, g.to_string() + " . " + f.provenance};
    switch (g.kind) {
        case GroupGenerator::Kind::Translation: {
            const JordanElement u = g.u;
            out.eval = [f, u](const JordanElement& x) {
                return std::exp(cplx(0.0, -trace_form(x, u).real())) * f(x);
            };
            break;
        }
        case GroupGenerator::Kind::Levi: {
            const LeviElement adj = g.l.adjoint();
            const double c = 1.0 / adj.character(m);
            out.eval = [f, adj, c](const JordanElement& x) { return c * f(adj.apply(x)); };
            break;
        }
        case GroupGenerator::Kind::Inversion: {
            if (f.m.size() != 1)
                throw UnsupportedOperation("R(j) needs the Bessel kernel, available at rank 1 only");
            const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
            out.eval = [f, m, p, alg](const JordanElement& x) {
                const double xv = x[0].real();
                return integrate_1d_complex(
                           [&](double u) {
                               if (u == 0.0) return cplx(0.0);
                               return bessel_kernel(m, u * xv) * std::pow(u, m - 1.0) *
                                      f(JordanElement::real(alg, {u}));
                           },
                           0.0, kInf, p)
                    .value;
            };
            break;
        }
    }
    return out;
}

IntegralResult laplace_transform(const ModelFunction& f, const JordanElement& z,
                                 const GridProfile& p) {
    require_model(f, Model::ConeL2, "laplace_transform");
    if (!tube_contains(z)) throw DomainError("laplace_transform: z outside the tube domain");
    const double m = weight_of(f);
    const AlgebraDescriptor& alg = z.algebra();
    const double s = m - alg.n_over_r();
    IntegralResult r = integrate_omega_complex(
        [&](const JordanElement& u) {
            const cplx phase = std::exp(cplx(0.0, 1.0) * trace_form(z, u.as_complex()));
            return phase * std::pow(jdet(u).real(), s) * f(u);
        },
        alg, p);
    const double c = std::pow(2.0 * M_PI, -0.5 * alg.n());
    r.value *= c;
    r.error_estimate *= c;
    return r;
}

ModelFunction laplace_on_functions(const ModelFunction& f, const GridProfile& p) {
    return ModelFunction{Model::Tube, f.m,
                         [f, p](const JordanElement& z) { return laplace_transform(f, z, p).value; },
                         "L(" + f.provenance + ")"};
}

IntegralResult inverse_laplace(const ModelFunction& F, double u, double y, const GridProfile& p) {
    require_model(F, Model::Tube, "inverse_laplace");
    if (F.m.size() != 1) throw UnsupportedOperation("inverse_laplace is implemented at rank 1 only");
    if (!(u > 0.0) || !(y > 0.0)) throw DomainError("inverse_laplace: need u > 0 and y > 0");
    const double m = weight_of(F);
    const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
    auto at = [&](double x) { return F(JordanElement::complex(alg, {cplx(x, y)})); };
    const double scale = std::abs(at(0.0));
    IntegralResult fr = integrate_fourier_line(at, u, p, scale);
    const double pref = std::exp(y * u) * std::pow(u, 1.0 - m) / std::sqrt(2.0 * M_PI);
    IntegralResult r;
    r.value = pref * fr.value;
    r.error_estimate = pref * fr.error_estimate;
    r.evaluations = fr.evaluations;
    return r;
}

IntegralResult coneL2_inner(const ModelFunction& f, const ModelFunction& g, const GridProfile& p,
                            OmegaSymmetry sym) {
    require_model(f, Model::ConeL2, "coneL2_inner");
    require_model(g, Model::ConeL2, "coneL2_inner");
    const double m = weight_of(f);
    const AlgebraDescriptor alg =
        f.m.size() == 1 ? AlgebraDescriptor::rank_one() : AlgebraDescriptor::sym2();
    const double gt = gamma_tilde_scalar(f.m, alg);
    const double s = m - alg.n_over_r();
    IntegralResult r = integrate_omega_complex(
        [&](const JordanElement& x) { return std::pow(jdet(x).real(), s) * f(x) * std::conj(g(x)); },
        alg, p, sym);
    r.value *= gt;
    r.error_estimate *= gt;
    return r;
}

IntegralResult tube_inner_rank1(const ModelFunction& F, const ModelFunction& G,
                                const GridProfile& p) {
    require_model(F, Model::Tube, "tube_inner_rank1");
    require_model(G, Model::Tube, "tube_inner_rank1");
    if (F.m.size() != 1) throw UnsupportedOperation("tube-side norms are evaluated at rank 1 only");
    const double m = weight_of(F);
    const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
    IntegralResult r;
    auto part = [&](bool imag) {
        double err = 0.0;
        IntegralResult outer = integrate_1d(
            [&](double y) {
                IntegralResult inner = integrate_1d(
                    [&](double x) {
                        const JordanElement z = JordanElement::complex(alg, {cplx(x, y)});
                        const cplx v = F(z) * std::conj(G(z));
                        return imag ? v.imag() : v.real();
                    },
                    -kInf, kInf, p, 1);
                r.evaluations += inner.evaluations;
                return inner.real() * std::pow(y, m - 2.0);
            },
            0.0, kInf, p, 0);
        err = outer.error_estimate;
        r.error_estimate += err;
        return outer.real();
    };
    const double re = part(false);
    const double im = part(true);
    r.value = cplx(re, im);
    return r;
}

// ---------------------------------------------------------------- bounded domain

bool disk_contains(const JordanElement& w, double tol) {
    if (w.algebra().family() == Family::RankOneReal) return std::abs(w[0]) < 1.0 - tol;
    Eigen::Matrix2cd wm;
    wm << w[0], w[2], w[2], w[1];
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(wm);
    return svd.singularValues()(0) < 1.0 - tol;
}

JordanElement cayley(const JordanElement& z) {
    if (!tube_contains(z)) throw DomainError("cayley: point outside the tube domain");
    const JordanElement s = ie(z.algebra());
    return jmul(z - s, jinv(z + s));
}

JordanElement cayley_inv(const JordanElement& w) {
    if (!disk_contains(w)) throw DomainError("cayley_inv: point outside the bounded domain");
    const JordanElement e = JordanElement::unit(w.algebra()).as_complex();
    return jmul(e + w, jinv(e - w)) * I;
}

JordanOperator bergman(const JordanElement& z, const JordanElement& w) {
    const JordanOperator id = JordanOperator::identity(z.algebra());
    return id - box_op(z, w).scaled(2.0) + quad_rep(z) * quad_rep(w);
}

double h_factor(const JordanElement& w) {
    if (!disk_contains(w)) throw DomainError("h_factor: point outside the bounded domain");
    const AlgebraDescriptor& alg = w.algebra();
    const double det = bergman(w, w.conj()).determinant().real();
    return std::pow(det, double(alg.r()) / (2.0 * alg.n()));
}

cplx cayley_factor(const JordanElement& w, double m) {
    return right_det_power(JordanElement::unit(w.algebra()).as_complex() - w, m);
}

cplx pi_minus_identity(const AlgebraDescriptor& alg, double m) { return pi_tube(ie(alg), m); }

ModelFunction cayley_on_functions(const ModelFunction& F) {
    require_model(F, Model::Tube, "cayley_on_functions");
    const double m = weight_of(F);
    return ModelFunction{Model::Disk, F.m,
                         [F, m](const JordanElement& w) {
                             return cayley_factor(w, m) * F(cayley_inv(w));
                         },
                         "gamma(" + F.provenance + ")"};
}

ModelFunction cayley_inverse_on_functions(const ModelFunction& f) {
    require_model(f, Model::Disk, "cayley_inverse_on_functions");
    const double m = weight_of(f);
    return ModelFunction{Model::Tube, f.m,
                         [f, m](const JordanElement& z) {
                             const JordanElement s = ie(z.algebra());
                             return right_det_power((z + s) * cplx(0.0, -0.5), m) * f(cayley(z));
                         },
                         "gamma^-1(" + f.provenance + ")"};
}

ModelFunction disk_action_j(const ModelFunction& f) {
    require_model(f, Model::Disk, "disk_action_j");
    const double m = weight_of(f);
    return ModelFunction{Model::Disk, f.m,
                         [f, m](const JordanElement& w) {
                             return pi_minus_identity(w.algebra(), m) * f(-w);
                         },
                         "D(j) . " + f.provenance};
}

}  // namespace conelab
