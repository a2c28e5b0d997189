#pragma once

// Euclidean Jordan algebras V = R (rank 1) and V = Sym(2,R) (rank 2, d = 1)
// and their complexifications.
//
// Sym(2,R) coordinates are (x11, x22, x12). The trace form is the matrix
// trace of the product, so the off-diagonal coordinate counts twice:
// (x|y) = x11*y11 + x22*y22 + 2*x12*y12.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "conelab/errors.hpp"

namespace conelab {

using cplx = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-10;

enum class Family { RankOneReal, SymMatrices2 };
enum class ScalarField { Real, Complex };

class AlgebraDescriptor {
public:
    static AlgebraDescriptor rank_one() { return AlgebraDescriptor(Family::RankOneReal); }
    static AlgebraDescriptor sym2() { return AlgebraDescriptor(Family::SymMatrices2); }
    explicit AlgebraDescriptor(Family f);

    // Accepts "rank1" or "sym2".
    static AlgebraDescriptor parse(const std::string& name);

    Family family() const noexcept { return family_; }
    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    int d() const noexcept { return d_; }
    double n_over_r() const noexcept { return double(n_) / double(r_); }
    std::string name() const;

    bool operator==(const AlgebraDescriptor& o) const noexcept { return family_ == o.family_; }
    bool operator!=(const AlgebraDescriptor& o) const noexcept { return !(*this == o); }

private:
    Family family_;
    int n_, r_, d_;
};

class JordanElement {
public:
    JordanElement(const AlgebraDescriptor& alg, const std::vector<cplx>& coords,
                  ScalarField field = ScalarField::Complex);

    static JordanElement real(const AlgebraDescriptor& alg, const std::vector<double>& coords);
    static JordanElement complex(const AlgebraDescriptor& alg, const std::vector<cplx>& coords);
    static JordanElement unit(const AlgebraDescriptor& alg);
    static JordanElement zero(const AlgebraDescriptor& alg, ScalarField field = ScalarField::Real);
    // Sym(2) only; the off-diagonal entries are symmetrized.
    static JordanElement from_matrix(const Eigen::Matrix2cd& m, ScalarField field);
    static JordanElement from_matrix(const Eigen::Matrix2d& m);

    const AlgebraDescriptor& algebra() const noexcept { return alg_; }
    ScalarField field() const noexcept { return field_; }
    bool is_real() const noexcept { return field_ == ScalarField::Real; }
    int size() const noexcept { return alg_.n(); }
    cplx operator[](int i) const { return c_[i]; }
    std::vector<cplx> coords() const;
    std::vector<double> real_coords() const;

    // Rank 1: 1x1 matrix; Sym(2): the symmetric 2x2 matrix.
    Eigen::MatrixXcd to_matrix() const;
    Eigen::Matrix2d to_real_matrix() const;

    JordanElement re() const;
    JordanElement im() const;
    JordanElement conj() const;
    JordanElement as_complex() const;

    JordanElement operator+(const JordanElement& o) const;
    JordanElement operator-(const JordanElement& o) const;
    JordanElement operator-() const;
    JordanElement operator*(cplx s) const;
    JordanElement operator*(double s) const;

    double norm() const;  // Euclidean norm induced by the trace form

private:
    JordanElement(const AlgebraDescriptor& alg, ScalarField field) : alg_(alg), field_(field) {}
    AlgebraDescriptor alg_;
    std::array<cplx, 3> c_{};
    ScalarField field_;
};

inline JordanElement operator*(double s, const JordanElement& x) { return x * s; }
inline JordanElement operator*(cplx s, const JordanElement& x) { return x * s; }

using OperatorMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;

// Linear operator on V_C in the coordinate basis.
struct JordanOperator {
    AlgebraDescriptor algebra;
    OperatorMatrix matrix;

    JordanElement apply(const JordanElement& x) const;
    JordanOperator operator*(const JordanOperator& o) const;
    JordanOperator operator+(const JordanOperator& o) const;
    JordanOperator operator-(const JordanOperator& o) const;
    JordanOperator scaled(cplx s) const;
    cplx determinant() const;
    static JordanOperator identity(const AlgebraDescriptor& alg);
};

struct SpectralData {
    std::vector<double> eigenvalues;   // descending
    std::vector<JordanElement> frame;  // Jordan frame of idempotents
};

class ExponentVector {
public:
    explicit ExponentVector(std::vector<double> entries);
    static ExponentVector uniform(int r, double m);

    const std::vector<double>& entries() const noexcept { return m_; }
    int size() const noexcept { return int(m_.size()); }
    double operator[](int j) const { return m_[j]; }
    double sum() const;
    double omega() const { return m_.back(); }  // m_r
    bool is_uniform() const;
    ExponentVector shifted(double delta) const;  // m - delta componentwise
    std::string to_string() const;

private:
    std::vector<double> m_;
};

JordanElement jmul(const JordanElement& x, const JordanElement& y);
cplx jtrace(const JordanElement& x);
cplx jdet(const JordanElement& x);
cplx trace_form(const JordanElement& z, const JordanElement& w);
JordanElement jinv(const JordanElement& x, double tol = 1e-14);

JordanOperator mult_op(const JordanElement& x);  // L(x)
JordanOperator quad_rep(const JordanElement& x);  // P(x) = 2L(x)^2 - L(x^2)
JordanOperator box_op(const JordanElement& z, const JordanElement& w);

SpectralData spectral_decompose(const JordanElement& x);
JordanElement spectral_reconstruct(const SpectralData& s);
// f applied to the eigenvalues of a real element.
JordanElement spectral_map(const JordanElement& x, double (*f)(double));
JordanElement jsqrt(const JordanElement& x);  // x in the cone

bool cone_contains(const JordanElement& x, double tol = 0.0);
bool tube_contains(const JordanElement& z, double tol = 0.0);

// Leading principal minor Delta_1 (Sym(2): x11; rank 1: x).
cplx leading_minor(const JordanElement& x);
double power_function(const JordanElement& x, const ExponentVector& m);

// log Delta(z) on the tube, continued from Delta(iy) = i^r Delta(y).
cplx holo_log_det(const JordanElement& z);
// Delta(z)^{-s} on the tube with the branch of holo_log_det.
cplx holo_det_power(const JordanElement& z, double s);
// log Delta(w) for Re w in the cone, real on the cone itself.
cplx right_log_det(const JordanElement& w);
// Delta(w)^{-s} for Re w in the cone, positive on the cone.
cplx right_det_power(const JordanElement& w, double s);

// Random samples (deterministic for a given engine state).
template <class Rng>
JordanElement random_real(const AlgebraDescriptor& alg, Rng& rng);
template <class Rng>
JordanElement random_cone(const AlgebraDescriptor& alg, Rng& rng);
template <class Rng>
JordanElement random_tube(const AlgebraDescriptor& alg, Rng& rng);

}  // namespace conelab

#include "conelab/detail/jordan_random.hpp"
