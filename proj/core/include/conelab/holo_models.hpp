#pragma once

// Scalar holomorphic discrete series in the tube, bounded-domain and L^2(Omega)
// realizations, with the generators n_u, l in L, j and the Laplace and Cayley
// intertwiners.

#include <functional>
#include <string>

#include <Eigen/Core>

#include "conelab/cone_functions.hpp"
#include "conelab/quadrature.hpp"

namespace conelab {

enum class Model { Tube, Disk, ConeL2 };
std::string to_string(Model m);

struct ModelFunction {
    Model model;
    ExponentVector m;
    std::function<cplx(const JordanElement&)> eval;
    std::string provenance;

    cplx operator()(const JordanElement& z) const { return eval(z); }
    double weight() const { return m.omega(); }
};

// Linear map x -> A x A^T of V (rank 1: x -> A^2 x). Maps Omega onto Omega.
struct LeviElement {
    AlgebraDescriptor algebra;
    Eigen::Matrix2d a = Eigen::Matrix2d::Identity();  // rank 1 uses a(0,0)

    static LeviElement from_matrix(const AlgebraDescriptor& alg, const Eigen::Matrix2d& a);
    static LeviElement dilation(const AlgebraDescriptor& alg, double t);  // x -> t x
    static LeviElement quadratic(const JordanElement& x);                 // P(x), x in Omega

    JordanElement apply(const JordanElement& x) const;
    LeviElement adjoint() const;  // with respect to the trace form
    LeviElement inverse() const;
    double abs_det() const;       // |det A|
    // pi(g) = |det A|^{-m}, so that pi(P(x)) = Delta(x)^{-m}.
    double character(double m) const;
};

struct GroupGenerator {
    enum class Kind { Translation, Levi, Inversion };
    Kind kind;
    AlgebraDescriptor algebra;
    JordanElement u;  // translation vector
    LeviElement l;

    static GroupGenerator translation(const JordanElement& u);
    static GroupGenerator levi(const LeviElement& l);
    static GroupGenerator inversion(const AlgebraDescriptor& alg);

    // Geometric action on the tube: z + u, l z, -z^{-1}.
    JordanElement act(const JordanElement& z) const;
    std::string to_string() const;
};

// pi(z) = Delta(z)^{-m} on the tube.
cplx pi_tube(const JordanElement& z, double m);

cplx reproducing_kernel(const JordanElement& z, const JordanElement& w, double m,
                        double c_pi = 1.0);

ModelFunction act_tube(const GroupGenerator& g, const ModelFunction& F);
ModelFunction act_coneL2(const GroupGenerator& g, const ModelFunction& f,
                         const GridProfile& p = GridProfile::named("default"));

// f_xi(u) = e^{-tr u}, the lowest K-type of L^2(Omega).
ModelFunction lowest_ktype_coneL2(const AlgebraDescriptor& alg, double m);
// Delta((z + ie)/(2i))^{-m}, the lowest K-type of the tube model.
ModelFunction lowest_ktype_tube(const AlgebraDescriptor& alg, double m);

// (2 pi)^{-n/2} int_Omega e^{i(z|u)} Delta_m(u) f(u) Delta(u)^{-n/r} du.
IntegralResult laplace_transform(const ModelFunction& f, const JordanElement& z,
                                 const GridProfile& p = GridProfile::named("default"));
// Rank 1 only: recovers f(u) from F on the horizontal line Im z = y.
IntegralResult inverse_laplace(const ModelFunction& F, double u, double y,
                               const GridProfile& p = GridProfile::named("default"));
ModelFunction laplace_on_functions(const ModelFunction& f,
                                   const GridProfile& p = GridProfile::named("default"));

// L^2(Omega) norm Gamma~ int Delta_m |f|^2 Delta^{-n/r} (scalar case).
IntegralResult coneL2_inner(const ModelFunction& f, const ModelFunction& g,
                            const GridProfile& p = GridProfile::named("default"),
                            OmegaSymmetry sym = OmegaSymmetry::None);
// Rank 1 only: int_{T} F conj(G) y^{m-2} dx dy.
IntegralResult tube_inner_rank1(const ModelFunction& F, const ModelFunction& G,
                                const GridProfile& p = GridProfile::named("default"));

bool disk_contains(const JordanElement& w, double tol = 0.0);
JordanElement cayley(const JordanElement& z);      // (z - ie)(z + ie)^{-1}
JordanElement cayley_inv(const JordanElement& w);  // i(e + w)(e - w)^{-1}
JordanOperator bergman(const JordanElement& z, const JordanElement& w);
double h_factor(const JordanElement& w);  // h(w)^{-2n/r} = det B(w, conj w)^{-1}

// pi(e - w), positive at w = 0.
cplx cayley_factor(const JordanElement& w, double m);
// pi(-I) = Delta(ie)^{-m}.
cplx pi_minus_identity(const AlgebraDescriptor& alg, double m);

ModelFunction cayley_on_functions(const ModelFunction& F);
ModelFunction cayley_inverse_on_functions(const ModelFunction& f);
// D(j) f(w) = pi(-I) f(-w).
ModelFunction disk_action_j(const ModelFunction& f);

}  // namespace conelab
