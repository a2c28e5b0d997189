#pragma once

// Whittaker vectors for the character psi_v(n_u) = e^{-i(u|v)} and its conjugate
// in the three models, and the matrix coefficients of the lowest K-type.

#include "conelab/holo_models.hpp"

namespace conelab {

enum class Side { N, Nbar };

struct WhittakerVector {
    Model model;
    Side side;
    JordanElement v;
    cplx eta{1.0, 0.0};

    WhittakerVector(Model model, Side side, const JordanElement& v, cplx eta = 1.0);
};

// W(f) = eta f(v).
cplx eval_whittaker_coneL2_N(const WhittakerVector& W, const ModelFunction& f);
// eta int_Omega J(u, v) f(u) Delta(u)^{-n/r} du, rank 1 only.
IntegralResult eval_whittaker_coneL2_Nbar(const WhittakerVector& W, const ModelFunction& f,
                                          const GridProfile& p = GridProfile::named("default"));

// Antiholomorphic profiles: e^{-i(conj z|v)} eta and e^{i(conj z^{-1}|v)} eta pi(conj z),
// with pi(conj z) := conj(pi(z)).
cplx eval_whittaker_tube(const WhittakerVector& W, const JordanElement& z, double m);
// e^{-((e+w*)(e-w*)^{-1}|v)} eta pi(e - w*) and e^{-((e-w*)(e+w*)^{-1}|v)} eta pi(e + w*).
cplx eval_whittaker_disk(const WhittakerVector& W, const JordanElement& w, double m);
// e^{-2((e - w*)^{-1}|v)} eta pi(e - w*); equals the N-side disk profile times e^{-(e|v)}.
cplx eval_whittaker_disk_alt(const WhittakerVector& W, const JordanElement& w, double m);

// Tube pairing int_T F(z) conj(W(z)) Delta(y)^{m - 2n/r} dz at rank 1.
IntegralResult pair_whittaker_tube_rank1(const WhittakerVector& W, const ModelFunction& F,
                                         const GridProfile& p = GridProfile::named("default"));

// Disk pairing int_D f(w) W(w) (1 - |w|^2)^{m-2} dw at rank 1; four times it is the
// tube pairing of the Cayley preimage.
IntegralResult pair_whittaker_disk_rank1(const WhittakerVector& W, const ModelFunction& f,
                                         const GridProfile& p = GridProfile::named("default"));

// |iota(f_xi (x) W_{v,eta})|^2 at x = l.e: |eta|^2 Delta_m(x) e^{-2(x|v)}.
double matrix_coeff_lowest_ktype(const ExponentVector& m, const JordanElement& v, cplx eta,
                                 const JordanElement& x);
// Substituting x -> P(v^{-1/2}) x turns the v-integral into the v = e one times this factor.
double matrix_coeff_jacobian(const ExponentVector& m, const JordanElement& v);

// Truncated integrals of |iota|^2 Delta^{-2n/r} over shells lambda_min in [10^{-k-1}, 10^{-k}].
// Used on both sides of the square-integrability threshold.
TailReport matrix_coeff_tail(const ExponentVector& m, const AlgebraDescriptor& alg,
                             const GridProfile& p = GridProfile::named("default"));

}  // namespace conelab
