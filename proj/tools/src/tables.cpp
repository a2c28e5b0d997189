#include "conelab/tools/tables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conelab::tools {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> sorted_range(const TableConfig& c, std::vector<double> dflt) {
    std::vector<double> r = c.range ? *c.range : dflt;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

AlgebraDescriptor algebra_or(const TableConfig& c, const AlgebraDescriptor& dflt) {
    return c.algebra.empty() ? dflt : AlgebraDescriptor::parse(c.algebra);
}

double rel_err(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

void gamma_cone_table(const TableConfig& c, Table& t) {
    const AlgebraDescriptor alg = algebra_or(c, AlgebraDescriptor::sym2());
    t.algebra = alg.name();
    const double s2 = c.m.empty() ? 1.0 : c.m.front();
    t.columns = alg.r() == 1 ? std::vector<std::string>{"s", "closed_form", "quadrature", "quadrature_error", "rel_err"}
                             : std::vector<std::string>{"s1", "s2", "closed_form", "quadrature", "quadrature_error", "rel_err"};
    for (double s1 : sorted_range(c, {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0})) {
        const ExponentVector s = alg.r() == 1 ? ExponentVector({s1}) : ExponentVector({s1, s2});
        const double closed = gamma_cone(s, alg);
        const IntegralResult q = integrate_omega(
            [&](const JordanElement& x) {
                return std::exp(-jtrace(x).real()) * power_function(x, s) *
                       std::pow(jdet(x).real(), -alg.n_over_r());
            },
            alg, c.profile);
        std::vector<double> row = {s1};
        if (alg.r() == 2) row.push_back(s2);
        row.insert(row.end(), {closed, q.real(), q.error_estimate, rel_err(q.real(), closed)});
        t.rows.push_back(row);
    }
}

void gamma_tilde_table(const TableConfig& c, Table& t) {
    const AlgebraDescriptor alg = algebra_or(c, AlgebraDescriptor::rank_one());
    t.algebra = alg.name();
    t.columns = {"m", "gamma_tilde", "quadrature", "rel_err"};
    for (double m : sorted_range(c, {2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0})) {
        const ExponentVector mm = ExponentVector::uniform(alg.r(), m);
        if (!in_discrete_series(mm, alg))
            throw DomainError("gamma_tilde table: m outside the discrete series");
        const double closed = gamma_tilde_scalar(mm, alg);
        const double s = m - 2.0 * alg.n_over_r();
        const IntegralResult q = integrate_omega(
            [&](const JordanElement& x) {
                return std::exp(-2.0 * jtrace(x).real()) * std::pow(jdet(x).real(), s);
            },
            alg, c.profile, OmegaSymmetry::RotationInvariant);
        t.rows.push_back({m, closed, q.real(), rel_err(q.real(), closed)});
    }
}

void lkt_norm_table(const TableConfig& c, Table& t) {
    const AlgebraDescriptor alg = algebra_or(c, AlgebraDescriptor::rank_one());
    t.algebra = alg.name();
    t.columns = {"m", "closed_form", "quadrature", "rel_err"};
    const std::vector<double> dflt =
        alg.r() == 1 ? std::vector<double>{2.5, 3.0, 4.0, 5.0, 6.0} : std::vector<double>{3.5, 4.0, 5.0};
    for (double m : sorted_range(c, dflt)) {
        const ExponentVector mm = ExponentVector::uniform(alg.r(), m);
        if (!in_discrete_series(mm, alg)) throw DomainError("lkt_norm table: m outside the discrete series");
        const double closed = lkt_norm_closed(mm, alg);
        const IntegralResult q = lkt_norm_quadrature(mm, alg, c.profile);
        t.rows.push_back({m, closed, q.real(), rel_err(q.real(), closed)});
    }
}

void formal_dim_table(const TableConfig& c, Table& t) {
    const AlgebraDescriptor alg = algebra_or(c, AlgebraDescriptor::rank_one());
    if (alg.family() != Family::RankOneReal) throw DomainError("formal_dim table is rank 1 only");
    t.algebra = alg.name();
    t.columns = {"m", "numeric_d", "closed_form_shape", "fitted_constant", "reciprocal_constant", "su11_d"};
    const double v = c.m.empty() ? 1.0 : c.m.front();
    const JordanElement vj = JordanElement::real(alg, {v});
    for (double m : sorted_range(c, {3.0, 4.0, 5.0})) {
        const ExponentVector mm = ExponentVector::uniform(1, m);
        if (!in_discrete_series(mm, alg)) throw DomainError("formal_dim table: m outside the discrete series");
        const FormalDimensionRecord r = formal_dimension_numeric(mm, vj, c.profile);
        const double su = m == std::floor(m) ? formal_dimension_su11(int(m), v, c.profile) : kNaN;
        t.rows.push_back({m, r.numeric_d, r.closed_form_shape, r.fitted_constant, r.reciprocal_constant, su});
    }
}

void bessel_table(const TableConfig& c, Table& t) {
    t.algebra = "rank1";
    const double m = c.m.empty() ? 2.0 : c.m.front();
    if (!(m > 1.0)) throw DomainError("bessel table: m > 1 required");
    t.columns = {"m", "u", "value", "tail_estimate", "rounding_estimate", "terms", "j_bessel_oracle", "rel_err"};
    std::vector<double> dflt;
    for (int k = 0; k <= 20; ++k) dflt.push_back(0.5 * k);
    for (double u : sorted_range(c, dflt)) {
        if (u < 0.0) throw DomainError("bessel table: u >= 0 required");
        const BesselSeriesValue s = bessel_series(m, u);
        const double value = s.value / std::tgamma(m);
        const double oracle =
            u == 0.0 ? 1.0 / std::tgamma(m)
                     : std::pow(u, -0.5 * (m - 1.0)) * std::cyl_bessel_j(m - 1.0, 2.0 * std::sqrt(u));
        t.rows.push_back({m, u, value, s.tail_estimate, s.rounding_estimate, double(s.terms), oracle,
                          std::abs(value - oracle) / std::max(std::abs(oracle), 1e-300)});
    }
}

}  // namespace

std::vector<std::string> table_kinds() { return {"gamma_cone", "gamma_tilde", "lkt_norm", "formal_dim", "bessel"}; }

Table emit_table(const TableConfig& config) {
    try {
        config.profile.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    Table t;
    t.kind = config.kind;
    t.profile = config.profile.name;
    if (config.kind == "gamma_cone") gamma_cone_table(config, t);
    else if (config.kind == "gamma_tilde") gamma_tilde_table(config, t);
    else if (config.kind == "lkt_norm") lkt_norm_table(config, t);
    else if (config.kind == "formal_dim") formal_dim_table(config, t);
    else if (config.kind == "bessel") bessel_table(config, t);
    else throw UsageError("unknown table kind '" + config.kind + "'");
    return t;
}

}  // namespace conelab::tools
