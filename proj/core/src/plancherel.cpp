#include "conelab/plancherel.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>

#include "conelab/su11.hpp"

namespace conelab {

double lkt_norm_closed(const ExponentVector& m, const AlgebraDescriptor& alg) {
    if (!in_discrete_series(m, alg))
        throw DivergenceError("lowest K-type norm diverges for m_r = " + std::to_string(m.omega()));
    return std::pow(2.0, alg.n() - 2.0 * m.sum()) * gamma_cone(m, alg) *
           gamma_cone(m.shifted(alg.n_over_r()), alg);
}

IntegralResult lkt_norm_quadrature(const ExponentVector& m, const AlgebraDescriptor& alg,
                                   const GridProfile& p) {
    const double gt = gamma_tilde_scalar(m, alg);
    const double s = -alg.n_over_r();
    IntegralResult r = integrate_omega(
        [&](const JordanElement& x) {
            return power_function(x, m) * std::exp(-2.0 * jtrace(x).real()) *
                   std::pow(jdet(x).real(), s);
        },
        alg, p, m.is_uniform() ? OmegaSymmetry::RotationInvariant : OmegaSymmetry::None);
    r.value *= gt;
    r.error_estimate *= gt;
    return r;
}

cplx whittaker_inner(cplx eta, cplx eta_prime, const ExponentVector& m, const AlgebraDescriptor& alg) {
    return gamma_tilde_scalar(m, alg) * eta * std::conj(eta_prime);
}

double formal_dimension_shape(const ExponentVector& m, const AlgebraDescriptor& alg) {
    return std::pow(4.0, m.sum()) / (gamma_cone(m, alg) * gamma_cone(m.shifted(alg.n_over_r()), alg));
}

FormalDimensionRecord formal_dimension_numeric(const ExponentVector& m, const JordanElement& v,
                                               const GridProfile& p) {
    const AlgebraDescriptor& alg = v.algebra();
    FormalDimensionRecord rec;
    rec.algebra = alg.name();
    rec.m = m;
    rec.v = v.real_coords();
    rec.profile = p.name;
    rec.lkt_norm = lkt_norm_closed(m, alg);
    rec.jacobian = matrix_coeff_jacobian(m, v);
    rec.whittaker_norm = whittaker_inner(1.0, 1.0, m, alg).real() * rec.jacobian;
    const bool scalar_v = [&] {
        const auto c = v.real_coords();
        return alg.family() == Family::RankOneReal || (c[0] == c[1] && c[2] == 0.0);
    }();
    IntegralResult gn = integrate_gn_lowest_ktype(
        [&](const JordanElement& x) { return matrix_coeff_lowest_ktype(m, v, 1.0, x); }, alg, p,
        scalar_v && m.is_uniform() ? OmegaSymmetry::RotationInvariant : OmegaSymmetry::None);
    rec.gn_integral = gn.real();
    rec.gn_error = gn.error_estimate;
    rec.evaluations = gn.evaluations;
    rec.numeric_d = rec.lkt_norm * rec.whittaker_norm / rec.gn_integral;
    rec.closed_form_shape = formal_dimension_shape(m, alg);
    rec.fitted_constant = rec.numeric_d / rec.closed_form_shape;
    rec.reciprocal_constant = rec.numeric_d * rec.closed_form_shape;
    return rec;
}

double formal_dimension_su11(int m, double v, const GridProfile& p) {
    const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
    const ExponentVector mm = ExponentVector::uniform(1, m);
    const JordanElement vj = JordanElement::real(alg, {v});
    const GnNorm g = gn_norm_fn(m, 2.0 * v, p);
    if (g.divergent) throw DivergenceError("formal_dimension_su11: G/N norm diverges");
    const double gn = std::exp(-2.0 * v) * g.result.real();
    return lkt_norm_closed(mm, alg) * whittaker_inner(1.0, 1.0, mm, alg).real() *
           matrix_coeff_jacobian(mm, vj) / gn;
}

namespace {

void spread_of(const std::vector<double>& xs, double& mean, double& spread) {
    mean = 0.0;
    for (double x : xs) mean += x;
    mean /= double(xs.size());
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    spread = (*hi - *lo) / std::abs(mean);
}

}  // namespace

ShapeFit fit_formal_dimension_shape(const std::vector<FormalDimensionRecord>& records, double tol) {
    if (records.empty()) throw DomainError("fit_formal_dimension_shape: no records");
    std::vector<double> direct, recip;
    for (const auto& r : records) {
        direct.push_back(r.fitted_constant);
        recip.push_back(r.reciprocal_constant);
    }
    ShapeFit f;
    spread_of(direct, f.direct_mean, f.direct_spread);
    spread_of(recip, f.reciprocal_mean, f.reciprocal_spread);
    f.direct_stable = f.direct_spread < tol;
    f.reciprocal_stable = f.reciprocal_spread < tol;
    f.verdict = f.direct_stable ? "direct" : (f.reciprocal_stable ? "reciprocal" : "unstable");
    return f;
}

OrthogonalityCheck orthogonality_factorization(int m, double v, const GridProfile& p) {
    const AlgebraDescriptor alg = AlgebraDescriptor::rank_one();
    if (!in_discrete_series(ExponentVector::uniform(1, m), alg))
        throw DivergenceError("orthogonality check needs m > 1");
    struct Gen {
        std::string label;
        GroupGenerator jordan;
        SL2Element su;
    };
    auto label = [](const char* kind, double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s(%g)", kind, x);
        return std::string(buf);
    };
    auto trans = [&](double u) {
        return Gen{label("n", u),
                   GroupGenerator::translation(JordanElement::real(alg, {u})), SL2Element::n_x(u / 2)};
    };
    auto dil = [&](double t) {
        return Gen{label("l", t),
                   GroupGenerator::levi(LeviElement::dilation(alg, t)),
                   SL2Element::a_t(0.5 * std::log(t))};
    };
    const Gen id = trans(0.0);
    const std::vector<std::pair<Gen, Gen>> pairs = {
        {id, id},
        {trans(0.3), id},
        {dil(1.2), id},
        {trans(0.3), dil(1.2)},
        {trans(-0.5), trans(0.4)},
        {dil(0.7), dil(1.5)},
    };
    const ModelFunction f = lowest_ktype_coneL2(alg, m);
    OrthogonalityCheck out;
    for (const auto& [g1, g2] : pairs) {
        OrthogonalityPair pr;
        pr.label = g1.label + "," + g2.label;
        pr.gn_integral = gn_inner_translates(g1.su, g2.su, m, 2.0 * v, p).value;
        pr.l2_inner = coneL2_inner(act_coneL2(g1.jordan, f, p), act_coneL2(g2.jordan, f, p), p).value;
        pr.ratio = pr.gn_integral / pr.l2_inner;
        out.pairs.push_back(pr);
    }
    out.diagonal_ratio = out.pairs.front().ratio;
    for (const auto& pr : out.pairs)
        out.spread = std::max(out.spread, std::abs(pr.ratio - out.diagonal_ratio) / std::abs(out.diagonal_ratio));
    return out;
}

}  // namespace conelab
