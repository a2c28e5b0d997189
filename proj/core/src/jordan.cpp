#include "conelab/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace conelab {

namespace {

ScalarField join(ScalarField a, ScalarField b) {
    return (a == ScalarField::Real && b == ScalarField::Real) ? ScalarField::Real
                                                              : ScalarField::Complex;
}

void require_same(const JordanElement& x, const JordanElement& y, const char* op) {
    if (x.algebra() != y.algebra())
        throw DescriptorMismatch(std::string(op) + ": elements belong to " + x.algebra().name() +
                                 " and " + y.algebra().name());
}

Eigen::Matrix2cd sym_matrix(const JordanElement& x) {
    Eigen::Matrix2cd m;
    m << x[0], x[2], x[2], x[1];
    return m;
}

}  // namespace

// ---------------------------------------------------------------- descriptor

AlgebraDescriptor::AlgebraDescriptor(Family f) : family_(f) {
    if (f == Family::RankOneReal) {
        n_ = 1;
        r_ = 1;
        d_ = 0;
    } else {
        n_ = 3;
        r_ = 2;
        d_ = 1;
    }
}

AlgebraDescriptor AlgebraDescriptor::parse(const std::string& name) {
    if (name == "rank1") return rank_one();
    if (name == "sym2") return sym2();
    throw DomainError("unknown algebra '" + name + "' (expected rank1 or sym2)");
}

std::string AlgebraDescriptor::name() const {
    return family_ == Family::RankOneReal ? "rank1" : "sym2";
}

// ---------------------------------------------------------------- elements

JordanElement::JordanElement(const AlgebraDescriptor& alg, const std::vector<cplx>& coords,
                             ScalarField field)
    : alg_(alg), field_(field) {
    if (int(coords.size()) != alg.n())
        throw DescriptorMismatch("coordinate vector has length " + std::to_string(coords.size()) +
                                 ", algebra " + alg.name() + " needs " + std::to_string(alg.n()));
    for (int i = 0; i < alg.n(); ++i) {
        c_[i] = field == ScalarField::Real ? cplx(coords[i].real(), 0.0) : coords[i];
    }
}

JordanElement JordanElement::real(const AlgebraDescriptor& alg, const std::vector<double>& coords) {
    std::vector<cplx> c(coords.begin(), coords.end());
    return JordanElement(alg, c, ScalarField::Real);
}

JordanElement JordanElement::complex(const AlgebraDescriptor& alg, const std::vector<cplx>& coords) {
    return JordanElement(alg, coords, ScalarField::Complex);
}

JordanElement JordanElement::unit(const AlgebraDescriptor& alg) {
    JordanElement e(alg, ScalarField::Real);
    e.c_[0] = 1.0;
    if (alg.family() == Family::SymMatrices2) e.c_[1] = 1.0;
    return e;
}

JordanElement JordanElement::zero(const AlgebraDescriptor& alg, ScalarField field) {
    return JordanElement(alg, field);
}

JordanElement JordanElement::from_matrix(const Eigen::Matrix2cd& m, ScalarField field) {
    return JordanElement(AlgebraDescriptor::sym2(), {m(0, 0), m(1, 1), 0.5 * (m(0, 1) + m(1, 0))},
                         field);
}

JordanElement JordanElement::from_matrix(const Eigen::Matrix2d& m) {
    return from_matrix(Eigen::Matrix2cd(m.cast<cplx>()), ScalarField::Real);
}

std::vector<cplx> JordanElement::coords() const {
    return std::vector<cplx>(c_.begin(), c_.begin() + alg_.n());
}

std::vector<double> JordanElement::real_coords() const {
    std::vector<double> out(alg_.n());
    for (int i = 0; i < alg_.n(); ++i) out[i] = c_[i].real();
    return out;
}

Eigen::MatrixXcd JordanElement::to_matrix() const {
    if (alg_.family() == Family::RankOneReal) {
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = c_[0];
        return m;
    }
    return sym_matrix(*this);
}

Eigen::Matrix2d JordanElement::to_real_matrix() const {
    if (alg_.family() != Family::SymMatrices2) throw DomainError("to_real_matrix needs sym2");
    Eigen::Matrix2d m;
    m << c_[0].real(), c_[2].real(), c_[2].real(), c_[1].real();
    return m;
}

JordanElement JordanElement::re() const {
    JordanElement out(alg_, ScalarField::Real);
    for (int i = 0; i < alg_.n(); ++i) out.c_[i] = c_[i].real();
    return out;
}

JordanElement JordanElement::im() const {
    JordanElement out(alg_, ScalarField::Real);
    for (int i = 0; i < alg_.n(); ++i) out.c_[i] = c_[i].imag();
    return out;
}

JordanElement JordanElement::conj() const {
    JordanElement out(*this);
    for (int i = 0; i < alg_.n(); ++i) out.c_[i] = std::conj(c_[i]);
    return out;
}

JordanElement JordanElement::as_complex() const {
    JordanElement out(*this);
    out.field_ = ScalarField::Complex;
    return out;
}

JordanElement JordanElement::operator+(const JordanElement& o) const {
    require_same(*this, o, "add");
    JordanElement out(alg_, join(field_, o.field_));
    for (int i = 0; i < alg_.n(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

JordanElement JordanElement::operator-(const JordanElement& o) const {
    require_same(*this, o, "subtract");
    JordanElement out(alg_, join(field_, o.field_));
    for (int i = 0; i < alg_.n(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

JordanElement JordanElement::operator-() const { return *this * -1.0; }

JordanElement JordanElement::operator*(cplx s) const {
    JordanElement out(alg_, ScalarField::Complex);
    for (int i = 0; i < alg_.n(); ++i) out.c_[i] = c_[i] * s;
    return out;
}

JordanElement JordanElement::operator*(double s) const {
    JordanElement out(alg_, field_);
    for (int i = 0; i < alg_.n(); ++i) out.c_[i] = c_[i] * s;
    return out;
}

double JordanElement::norm() const {
    double s = 0.0;
    for (int i = 0; i < alg_.n(); ++i) s += (i == 2 ? 2.0 : 1.0) * std::norm(c_[i]);
    return std::sqrt(s);
}

// ---------------------------------------------------------------- operators

JordanElement JordanOperator::apply(const JordanElement& x) const {
    if (x.algebra() != algebra) throw DescriptorMismatch("operator applied across algebras");
    const int n = algebra.n();
    std::vector<cplx> out(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += matrix(i, j) * x[j];
    return JordanElement::complex(algebra, out);
}

JordanOperator JordanOperator::operator*(const JordanOperator& o) const {
    return {algebra, matrix * o.matrix};
}
JordanOperator JordanOperator::operator+(const JordanOperator& o) const {
    return {algebra, matrix + o.matrix};
}
JordanOperator JordanOperator::operator-(const JordanOperator& o) const {
    return {algebra, matrix - o.matrix};
}
JordanOperator JordanOperator::scaled(cplx s) const { return {algebra, matrix * s}; }
cplx JordanOperator::determinant() const { return matrix.determinant(); }

JordanOperator JordanOperator::identity(const AlgebraDescriptor& alg) {
    return {alg, OperatorMatrix::Identity(alg.n(), alg.n())};
}

// ---------------------------------------------------------------- exponents

ExponentVector::ExponentVector(std::vector<double> entries) : m_(std::move(entries)) {
    if (m_.empty()) throw DomainError("exponent vector must be non-empty");
    for (size_t j = 1; j < m_.size(); ++j)
        if (m_[j] > m_[j - 1])
            throw DomainError("exponent vector must be non-increasing: " + to_string());
}

ExponentVector ExponentVector::uniform(int r, double m) {
    return ExponentVector(std::vector<double>(r, m));
}

double ExponentVector::sum() const {
    double s = 0.0;
    for (double x : m_) s += x;
    return s;
}

bool ExponentVector::is_uniform() const {
    return std::all_of(m_.begin(), m_.end(), [&](double x) { return x == m_[0]; });
}

ExponentVector ExponentVector::shifted(double delta) const {
    std::vector<double> out(m_);
    for (auto& x : out) x -= delta;
    return ExponentVector(out);
}

std::string ExponentVector::to_string() const {
    std::ostringstream os;
    os.precision(10);
    os << '(';
    for (size_t j = 0; j < m_.size(); ++j) os << (j ? "," : "") << m_[j];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------- algebra

JordanElement jmul(const JordanElement& x, const JordanElement& y) {
    require_same(x, y, "jmul");
    const ScalarField f = join(x.field(), y.field());
    if (x.algebra().family() == Family::RankOneReal)
        return JordanElement(x.algebra(), {x[0] * y[0]}, f);
    Eigen::Matrix2cd a = sym_matrix(x), b = sym_matrix(y);
    Eigen::Matrix2cd p = 0.5 * (a * b + b * a);
    return JordanElement::from_matrix(p, f);
}

cplx jtrace(const JordanElement& x) {
    return x.algebra().family() == Family::RankOneReal ? x[0] : x[0] + x[1];
}

cplx jdet(const JordanElement& x) {
    return x.algebra().family() == Family::RankOneReal ? x[0] : x[0] * x[1] - x[2] * x[2];
}

cplx trace_form(const JordanElement& z, const JordanElement& w) {
    require_same(z, w, "trace_form");
    if (z.algebra().family() == Family::RankOneReal) return z[0] * w[0];
    return z[0] * w[0] + z[1] * w[1] + 2.0 * z[2] * w[2];
}

JordanElement jinv(const JordanElement& x, double tol) {
    const cplx det = jdet(x);
    const double scale = std::pow(std::max(1.0, x.norm()), x.algebra().r());
    if (std::abs(det) <= tol * scale) throw NonInvertible("jinv: singular element", std::abs(det));
    if (x.algebra().family() == Family::RankOneReal)
        return JordanElement(x.algebra(), {1.0 / x[0]}, x.field());
    return JordanElement(x.algebra(), {x[1] / det, x[0] / det, -x[2] / det}, x.field());
}

JordanOperator mult_op(const JordanElement& x) {
    const auto& alg = x.algebra();
    const int n = alg.n();
    JordanOperator op{alg, OperatorMatrix::Zero(n, n)};
    for (int j = 0; j < n; ++j) {
        std::vector<double> basis(n, 0.0);
        basis[j] = 1.0;
        JordanElement col = jmul(x, JordanElement::real(alg, basis));
        for (int i = 0; i < n; ++i) op.matrix(i, j) = col[i];
    }
    return op;
}

JordanOperator quad_rep(const JordanElement& x) {
    JordanOperator l = mult_op(x);
    return (l * l).scaled(2.0) - mult_op(jmul(x, x));
}

JordanOperator box_op(const JordanElement& z, const JordanElement& w) {
    require_same(z, w, "box_op");
    JordanOperator lz = mult_op(z), lw = mult_op(w);
    return mult_op(jmul(z, w)) + lz * lw - lw * lz;
}

// ---------------------------------------------------------------- spectra

SpectralData spectral_decompose(const JordanElement& x) {
    if (!x.is_real()) {
        for (int i = 0; i < x.size(); ++i)
            if (x[i].imag() != 0.0) throw DomainError("spectral_decompose needs a real element");
    }
    const auto& alg = x.algebra();
    SpectralData out;
    if (alg.family() == Family::RankOneReal) {
        out.eigenvalues = {x[0].real()};
        out.frame = {JordanElement::unit(alg)};
        return out;
    }
    const double a = x[0].real(), c = x[1].real(), b = x[2].real();
    const double mean = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), b);
    out.eigenvalues = {mean + rad, mean - rad};
    // Unit eigenvector for the top eigenvalue; any frame is valid when rad ~ 0.
    double vx, vy;
    if (rad < 1e-300) {
        vx = 1.0;
        vy = 0.0;
    } else if (a >= c) {
        vx = a - c + 2.0 * rad;  // = 2*(lambda1 - c)
        vy = 2.0 * b;
        const double nrm = std::hypot(vx, vy);
        vx /= nrm;
        vy /= nrm;
    } else {
        vx = 2.0 * b;
        vy = c - a + 2.0 * rad;
        const double nrm = std::hypot(vx, vy);
        vx /= nrm;
        vy /= nrm;
    }
    Eigen::Matrix2d p1;
    p1 << vx * vx, vx * vy, vx * vy, vy * vy;
    Eigen::Matrix2d p2 = Eigen::Matrix2d::Identity() - p1;
    out.frame = {JordanElement::from_matrix(p1), JordanElement::from_matrix(p2)};
    return out;
}

JordanElement spectral_reconstruct(const SpectralData& s) {
    JordanElement acc = JordanElement::zero(s.frame.front().algebra());
    for (size_t j = 0; j < s.frame.size(); ++j) acc = acc + s.frame[j] * s.eigenvalues[j];
    return acc;
}

JordanElement spectral_map(const JordanElement& x, double (*f)(double)) {
    SpectralData s = spectral_decompose(x);
    for (auto& l : s.eigenvalues) l = f(l);
    return spectral_reconstruct(s);
}

JordanElement jsqrt(const JordanElement& x) {
    if (!cone_contains(x)) throw DomainError("jsqrt: element outside the cone");
    return spectral_map(x, [](double l) { return std::sqrt(l); });
}

bool cone_contains(const JordanElement& x, double tol) {
    for (int i = 0; i < x.size(); ++i)
        if (x[i].imag() != 0.0) return false;
    const auto ev = spectral_decompose(x.re()).eigenvalues;
    return ev.back() > tol;
}

bool tube_contains(const JordanElement& z, double tol) { return cone_contains(z.im(), tol); }

// ---------------------------------------------------------------- powers

cplx leading_minor(const JordanElement& x) { return x[0]; }

double power_function(const JordanElement& x, const ExponentVector& m) {
    if (m.size() != x.algebra().r())
        throw DescriptorMismatch("exponent vector length does not match the rank");
    if (!cone_contains(x)) throw DomainError("power_function: element outside the cone");
    if (x.algebra().family() == Family::RankOneReal) return std::pow(x[0].real(), m[0]);
    const double d1 = x[0].real();
    const double d = jdet(x).real();
    return std::pow(d1, m[0] - m[1]) * std::pow(d, m[1]);
}

namespace {

// Eigenvalues of B^{-1/2} A B^{-1/2} for real symmetric A and positive B.
std::array<double, 2> relative_eigenvalues(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
    Eigen::Matrix2d m = b.inverse() * a;
    const double t = m.trace(), dt = m.determinant();
    const double disc = std::sqrt(std::max(0.0, 0.25 * t * t - dt));
    return {0.5 * t + disc, 0.5 * t - disc};
}

}  // namespace

cplx holo_log_det(const JordanElement& z) {
    if (!tube_contains(z)) throw DomainError("holo_log_det: point outside the tube domain");
    const double half_pi = 0.5 * M_PI;
    if (z.algebra().family() == Family::RankOneReal) return std::log(z[0]);
    const Eigen::Matrix2d x = z.re().to_real_matrix();
    const Eigen::Matrix2d y = z.im().to_real_matrix();
    const auto mu = relative_eigenvalues(x, y);
    // Delta(x + iy) = i^r Delta(y) prod (1 - i mu_k); each factor has positive real part.
    cplx acc(std::log(y.determinant()), 2.0 * half_pi);
    for (double m : mu) acc += std::log(cplx(1.0, -m));
    return acc;
}

cplx holo_det_power(const JordanElement& z, double s) { return std::exp(-s * holo_log_det(z)); }

cplx right_log_det(const JordanElement& w) {
    if (!cone_contains(w.re())) throw DomainError("right_log_det: real part outside the cone");
    if (w.algebra().family() == Family::RankOneReal) return std::log(w[0]);
    const Eigen::Matrix2d a = w.re().to_real_matrix();
    const Eigen::Matrix2d b = w.im().to_real_matrix();
    const auto mu = relative_eigenvalues(b, a);
    cplx acc(std::log(a.determinant()), 0.0);
    for (double m : mu) acc += std::log(cplx(1.0, m));
    return acc;
}

cplx right_det_power(const JordanElement& w, double s) { return std::exp(-s * right_log_det(w)); }

}  // namespace conelab
