#include "conelab/quadrature.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "conelab/calibration.hpp"

namespace conelab {

// ---------------------------------------------------------------- profiles

void GridProfile::validate() const {
    if (!(rel_tol > 0.0) && !(abs_tol > 0.0))
        throw DomainError("profile " + name + ": need a positive tolerance");
    if (rel_tol < 0.0 || abs_tol < 0.0) throw DomainError("profile " + name + ": negative tolerance");
    for (int s : subdivisions)
        if (s < 1) throw DomainError("profile " + name + ": subdivisions must be positive");
    if (depth < 2) throw DomainError("profile " + name + ": depth must be >= 2");
}

GridProfile GridProfile::nested(int level) const {
    GridProfile p(*this);
    const double f = std::pow(0.1, level);
    p.rel_tol = std::max(rel_tol * f, 1e-14);
    p.abs_tol = abs_tol * f;
    return p;
}

GridProfile GridProfile::named(const std::string& name) {
    GridProfile p;
    p.name = name;
    if (name == "fast") {
        p.rel_tol = 1e-7;
        p.subdivisions = {200, 200, 200};
        p.depth = 6;
    } else if (name == "default") {
        p.rel_tol = 1e-9;
        p.subdivisions = {1000, 1000, 1000};
        p.depth = 8;
    } else if (name == "strict") {
        p.rel_tol = 1e-11;
        p.subdivisions = {4000, 4000, 4000};
        p.depth = 10;
    } else {
        throw DomainError("unknown profile '" + name + "' (fast, default, strict)");
    }
    return p;
}

std::vector<std::string> GridProfile::names() { return {"fast", "default", "strict"}; }

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& where) {
    try {
        size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw DomainError(where + ": not a number: '" + v + "'");
    }
}

}  // namespace

std::map<std::string, GridProfile> parse_profiles(const std::string& text) {
    std::map<std::string, GridProfile> out;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "profile config line " + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']') throw DomainError(where + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) throw DomainError(where + ": empty section name");
            GridProfile base;
            try {
                base = GridProfile::named(section);
            } catch (const DomainError&) {
                base.name = section;
            }
            out[section] = base;
            continue;
        }
        if (section.empty()) throw DomainError(where + ": key outside a [section]");
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        GridProfile& p = out[section];
        if (key == "rel_tol") {
            p.rel_tol = parse_double(val, where);
        } else if (key == "abs_tol") {
            p.abs_tol = parse_double(val, where);
        } else if (key == "depth") {
            p.depth = int(parse_double(val, where));
        } else if (key == "subdivisions") {
            std::vector<int> counts;
            std::istringstream vs(val);
            std::string item;
            while (std::getline(vs, item, ',')) counts.push_back(int(parse_double(trim(item), where)));
            if (counts.size() == 1) counts.assign(3, counts[0]);
            if (counts.size() != 3) throw DomainError(where + ": subdivisions needs 1 or 3 values");
            for (int k = 0; k < 3; ++k) p.subdivisions[k] = counts[k];
        } else {
            throw DomainError(where + ": unknown key '" + key + "'");
        }
    }
    for (auto& [name, p] : out) p.validate();
    return out;
}

std::map<std::string, GridProfile> load_profiles(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open profile config " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_profiles(ss.str());
}

// ---------------------------------------------------------------- 1-D engine

namespace {

struct GslInit {
    GslInit() { gsl_set_error_handler_off(); }
};
const GslInit gsl_init;

struct Workspace {
    explicit Workspace(size_t n) : w(gsl_integration_workspace_alloc(n)) {}
    ~Workspace() { gsl_integration_workspace_free(w); }
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;
    gsl_integration_workspace* w;
};

struct Thunk {
    const RealFn* f;
    long* count;
};

double thunk_call(double x, void* params) {
    auto* t = static_cast<Thunk*>(params);
    ++*t->count;
    return (*t->f)(x);
}

double integrate_real(const RealFn& f, double a, double b, const GridProfile& p, int level,
                      double& err, long& evals) {
    if (a == b) {
        err = 0.0;
        return 0.0;
    }
    if (a > b) return -integrate_real(f, b, a, p, level, err, evals);
    const GridProfile q = p.nested(level);
    const size_t limit = size_t(p.subdivisions[std::min(level, 2)]);
    Workspace ws(limit);
    Thunk t{&f, &evals};
    gsl_function g{&thunk_call, &t};
    double result = 0.0;
    int status;
    const bool lo_inf = std::isinf(a), hi_inf = std::isinf(b);
    if (lo_inf && hi_inf) {
        status = gsl_integration_qagi(&g, q.abs_tol, q.rel_tol, limit, ws.w, &result, &err);
    } else if (hi_inf) {
        status = gsl_integration_qagiu(&g, a, q.abs_tol, q.rel_tol, limit, ws.w, &result, &err);
    } else if (lo_inf) {
        status = gsl_integration_qagil(&g, b, q.abs_tol, q.rel_tol, limit, ws.w, &result, &err);
    } else {
        status = gsl_integration_qags(&g, a, b, q.abs_tol, q.rel_tol, limit, ws.w, &result, &err);
    }
    if (!std::isfinite(result)) throw PrecisionError("quadrature produced a non-finite value", err);
    if (status != GSL_SUCCESS) {
        const double target = std::max(q.abs_tol, q.rel_tol * std::abs(result));
        // roundoff-limited results close to the target are kept
        const double floor = status == GSL_EROUND ? std::max(1e-5 * std::abs(result), 1e-12) : 0.0;
        const bool acceptable =
            (status == GSL_EROUND || status == GSL_ESING || status == GSL_EMAXITER) &&
            err <= std::max({1e3 * target, floor, 1e-13});
        if (!acceptable)
            throw PrecisionError(std::string("quadrature: ") + gsl_strerror(status), err);
    }
    return result;
}

}  // namespace

IntegralResult integrate_1d(const RealFn& f, double a, double b, const GridProfile& p, int level) {
    IntegralResult r;
    double err = 0.0;
    r.value = integrate_real(f, a, b, p, level, err, r.evaluations);
    r.error_estimate = err;
    return r;
}

IntegralResult integrate_1d_complex(const ComplexFn& f, double a, double b, const GridProfile& p,
                                    int level) {
    IntegralResult r;
    double e1 = 0.0, e2 = 0.0;
    const double re = integrate_real([&](double x) { return f(x).real(); }, a, b, p, level, e1,
                                     r.evaluations);
    const double im = integrate_real([&](double x) { return f(x).imag(); }, a, b, p, level, e2,
                                     r.evaluations);
    r.value = cplx(re, im);
    r.error_estimate = std::hypot(e1, e2);
    return r;
}

// ---------------------------------------------------------------- Omega

namespace {

const double kInf = std::numeric_limits<double>::infinity();

JordanElement spectral_point(double phi, double lam1, double lam2) {
    const double c = std::cos(phi), s = std::sin(phi);
    Eigen::Matrix2d x;
    x(0, 0) = lam1 * c * c + lam2 * s * s;
    x(1, 1) = lam1 * s * s + lam2 * c * c;
    x(0, 1) = x(1, 0) = (lam1 - lam2) * c * s;
    return JordanElement::from_matrix(x);
}

IntegralResult omega_raw(const ConeFn& f, const AlgebraDescriptor& alg, const GridProfile& p,
                         OmegaSymmetry sym) {
    IntegralResult r;
    if (alg.family() == Family::RankOneReal) {
        double err = 0.0;
        r.value = integrate_real([&](double u) { return f(JordanElement::real(alg, {u})); }, 0.0,
                                 kInf, p, 0, err, r.evaluations);
        r.error_estimate = err;
        return r;
    }
    const int base = sym == OmegaSymmetry::RotationInvariant ? 0 : 1;
    double err_total = 0.0;
    auto in_phi = [&](double phi) {
        double err_b = 0.0;
        const double v = integrate_real(
            [&](double b) {
                double err_c = 0.0;
                return integrate_real(
                    [&](double c) { return c * f(spectral_point(phi, b + c, b)); }, 0.0, kInf, p,
                    base + 1, err_c, r.evaluations);
            },
            0.0, kInf, p, base, err_b, r.evaluations);
        if (base == 0) err_total = err_b;
        return v;
    };
    if (sym == OmegaSymmetry::RotationInvariant) {
        r.value = M_PI * in_phi(0.0);
        r.error_estimate = M_PI * err_total;
    } else {
        double err = 0.0;
        r.value = integrate_real(in_phi, 0.0, M_PI, p, 0, err, r.evaluations);
        r.error_estimate = err;
    }
    return r;
}

}  // namespace

IntegralResult integrate_omega_spectral_raw(const ConeFn& f, const AlgebraDescriptor& alg,
                                            const GridProfile& p, OmegaSymmetry sym) {
    return omega_raw(f, alg, p, sym);
}

IntegralResult integrate_omega(const ConeFn& f, const AlgebraDescriptor& alg, const GridProfile& p,
                               OmegaSymmetry sym) {
    IntegralResult r = omega_raw(f, alg, p, sym);
    if (alg.family() == Family::SymMatrices2) {
        const double k = omega_measure_factor();
        r.value *= k;
        r.error_estimate *= k;
    }
    return r;
}

IntegralResult integrate_omega_complex(const ConeComplexFn& f, const AlgebraDescriptor& alg,
                                       const GridProfile& p, OmegaSymmetry sym) {
    IntegralResult re = integrate_omega([&](const JordanElement& x) { return f(x).real(); }, alg, p, sym);
    IntegralResult im = integrate_omega([&](const JordanElement& x) { return f(x).imag(); }, alg, p, sym);
    IntegralResult r;
    r.value = cplx(re.real(), im.real());
    r.error_estimate = std::hypot(re.error_estimate, im.error_estimate);
    r.evaluations = re.evaluations + im.evaluations;
    return r;
}

IntegralResult integrate_omega_box(const ConeFn& f, const GridProfile& p) {
    const AlgebraDescriptor alg = AlgebraDescriptor::sym2();
    IntegralResult r;
    double err = 0.0;
    r.value = integrate_real(
        [&](double a) {
            double e1 = 0.0;
            return integrate_real(
                [&](double c) {
                    const double h = std::sqrt(a * c);
                    double e2 = 0.0;
                    return integrate_real(
                        [&](double b) { return f(JordanElement::real(alg, {a, c, b})); }, -h, h,
                        p, 2, e2, r.evaluations);
                },
                0.0, kInf, p, 1, e1, r.evaluations);
        },
        0.0, kInf, p, 0, err, r.evaluations);
    // the off-diagonal coordinate has trace-form length sqrt 2
    r.value *= std::sqrt(2.0);
    r.error_estimate = err * std::sqrt(2.0);
    return r;
}

IntegralResult integrate_gn_lowest_ktype(const ConeFn& phi, const AlgebraDescriptor& alg,
                                         const GridProfile& p, OmegaSymmetry sym) {
    const double s = -2.0 * alg.n_over_r();
    IntegralResult r = integrate_omega(
        [&](const JordanElement& x) {
            const double v = phi(x);
            return v == 0.0 ? 0.0 : v * std::pow(jdet(x).real(), s);
        },
        alg, p, sym);
    const double c = gn_measure_constant();
    r.value *= c;
    r.error_estimate *= c;
    return r;
}

IntegralResult integrate_fourier(const RealFn& f, double omega, FourierWeight w,
                                 const GridProfile& p, double scale) {
    IntegralResult r;
    const size_t limit = size_t(p.subdivisions[0]);
    Workspace ws(limit), cyc(limit);
    gsl_integration_qawo_table* table = gsl_integration_qawo_table_alloc(
        omega, 1.0, w == FourierWeight::Cosine ? GSL_INTEG_COSINE : GSL_INTEG_SINE, 50);
    Thunk t{&f, &r.evaluations};
    gsl_function g{&thunk_call, &t};
    double result = 0.0, err = 0.0;
    const double eps = std::max(p.abs_tol, p.rel_tol * scale);
    const int status =
        gsl_integration_qawf(&g, 0.0, eps, limit, ws.w, cyc.w, table, &result, &err);
    gsl_integration_qawo_table_free(table);
    if (status != GSL_SUCCESS && !(err <= 1e3 * eps))
        throw PrecisionError(std::string("fourier quadrature: ") + gsl_strerror(status), err);
    r.value = result;
    r.error_estimate = err;
    return r;
}

IntegralResult integrate_fourier_line(const ComplexFn& g, double omega, const GridProfile& p,
                                      double scale) {
    using W = FourierWeight;
    auto even = [&](double x) { return g(x) + g(-x); };
    auto odd = [&](double x) { return g(x) - g(-x); };
    const IntegralResult parts[4] = {
        integrate_fourier([&](double x) { return even(x).real(); }, omega, W::Cosine, p, scale),
        integrate_fourier([&](double x) { return even(x).imag(); }, omega, W::Cosine, p, scale),
        integrate_fourier([&](double x) { return odd(x).real(); }, omega, W::Sine, p, scale),
        integrate_fourier([&](double x) { return odd(x).imag(); }, omega, W::Sine, p, scale)};
    IntegralResult r;
    r.value = cplx(parts[0].real(), parts[1].real()) - cplx(0.0, 1.0) * cplx(parts[2].real(), parts[3].real());
    for (const auto& q : parts) {
        r.error_estimate += q.error_estimate;
        r.evaluations += q.evaluations;
    }
    return r;
}

TailReport monitor_tail(const std::vector<double>& increments) {
    TailReport t;
    t.increments = increments;
    for (size_t k = 1; k < increments.size(); ++k) {
        const double prev = std::abs(increments[k - 1]);
        t.ratios.push_back(prev > 0.0 ? std::abs(increments[k]) / prev
                                      : (increments[k] == 0.0 ? 0.0 : kInf));
    }
    bool bad = false;
    for (double x : increments)
        if (!std::isfinite(x)) bad = true;
    // the last two ratios decide; a convergent tail has them strictly below 1
    const size_t n = t.ratios.size();
    if (n >= 2) bad = bad || (t.ratios[n - 1] >= 1.0 && t.ratios[n - 2] >= 1.0);
    else if (n == 1) bad = bad || t.ratios[0] >= 1.0;
    t.divergent = bad;
    return t;
}

}  // namespace conelab
