#pragma once

// Exact-shape, tolerance-aware multilinear algebra on an n-dimensional real
// inner-product space: metrics, symmetric 2-tensors, 2-forms, complex
// structures, and algebraic curvature tensors with their contractions.
//
// Conventions used throughout:
//   - all stored tensors are fully covariant; indices are raised explicitly
//     through the inverse metric,
//   - components may live in an arbitrary (not necessarily orthonormal)
//     frame; the metric matrix travels with every operation,
//   - norms and residuals are evaluated in a g-orthonormal frame, so
//     tolerances are frame-invariant,
//   - r_ij = g^{pq} R_{ipjq}, s = g^{pq} r_pq, e = r - s g/n,
//     h = r - s g/(2n-2) (Schouten), and the triple contraction is
//     [trc R]_ij = R_{ikpq} R_j^{kpq}.

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace wekit {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kNormFloor = 1e-300;

/// Riemannian inner product: symmetric positive-definite matrix with a
/// cached inverse and Cholesky factor.
class Metric {
public:
  explicit Metric(Eigen::MatrixXd g);

  int n() const { return static_cast<int>(g_.rows()); }
  const Eigen::MatrixXd& mat() const { return g_; }
  const Eigen::MatrixXd& inv() const { return g_inv_; }
  /// Lower-triangular L with g = L L^T; maps g-orthonormal coordinates to
  /// frame coordinates.
  const Eigen::MatrixXd& chol() const { return chol_; }

private:
  Eigen::MatrixXd g_, g_inv_, chol_;
};

struct SymTensor2 {
  explicit SymTensor2(Eigen::MatrixXd a);
  SymTensor2(int n) : m(Eigen::MatrixXd::Zero(n, n)) {}

  int n() const { return static_cast<int>(m.rows()); }
  Eigen::MatrixXd m;
};

struct TwoForm {
  explicit TwoForm(Eigen::MatrixXd a);
  TwoForm(int n) : m(Eigen::MatrixXd::Zero(n, n)) {}

  int n() const { return static_cast<int>(m.rows()); }
  Eigen::MatrixXd m;
};

/// Endomorphism J with J^2 = -Id (n even). Column i of mat() holds the
/// components of J e_i.
struct ComplexStructureJ {
  explicit ComplexStructureJ(Eigen::MatrixXd j);

  int n() const { return static_cast<int>(mat.rows()); }
  Eigen::MatrixXd mat;
};

/// Rank-4 array of fully covariant components R[i][j][k][l].
class CurvTensor {
public:
  explicit CurvTensor(int n) : n_(n), a_(static_cast<size_t>(n) * n * n * n, 0.0) {}

  int n() const { return n_; }
  double& at(int i, int j, int k, int l) {
    return a_[static_cast<size_t>(((i * n_ + j) * n_ + k) * n_ + l)];
  }
  double at(int i, int j, int k, int l) const {
    return a_[static_cast<size_t>(((i * n_ + j) * n_ + k) * n_ + l)];
  }
  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  /// Writes one independent component together with its seven images under
  /// the pair antisymmetries and the pair interchange.
  void set_component(int i, int j, int k, int l, double v);

private:
  int n_;
  std::vector<double> a_;
};

struct ContractionBundle {
  SymTensor2 ricci;
  double scalar = 0.0;
  SymTensor2 einstein;
  SymTensor2 schouten;
  CurvTensor weyl;
  SymTensor2 trc;
};

struct MetricMultiple {
  bool is_multiple = false;
  double factor = 0.0;
  double residual = 0.0;
};

struct JActions {
  Eigen::MatrixXd aj;          // a(J.,.)
  Eigen::MatrixXd ja;          // -a(.,J.)
  Eigen::MatrixXd commutator;  // aj - ja
  bool is_hermitian = false;
};

struct HodgeSplit {
  TwoForm sd;
  TwoForm asd;
};

// Frame-invariant norms (Frobenius in a g-orthonormal frame).
double norm_g(const Metric& g, const Eigen::MatrixXd& a);
double norm_g(const Metric& g, const CurvTensor& r);
double trace_g(const Metric& g, const Eigen::MatrixXd& a);

/// Largest violation of the three curvature symmetries (pair antisymmetry,
/// pair interchange, first Bianchi), relative to the largest component.
double curvature_symmetry_residual(const CurvTensor& r);
void validate_curvature(const CurvTensor& r, double tol = 1e-10);

ContractionBundle contraction_bundle(const CurvTensor& r, const Metric& g);

/// [Rb]_ij = R_{ipjq} b^{pq}.
SymTensor2 act_on_sym(const CurvTensor& r, const SymTensor2& b, const Metric& g);
/// [Ra]_ij = (1/2) R_{ijpq} a^{pq}.
TwoForm act_on_form(const CurvTensor& r, const TwoForm& alpha, const Metric& g);

/// Splits a into factor*g plus a leftover; the residual is
/// ||a - factor g|| / max(||a||, ||g||, floor), so the zero tensor counts as
/// a multiple with factor 0.
MetricMultiple multiple_of_metric(const SymTensor2& a, const Metric& g,
                                  double tol = kDefaultTol);

/// aJ = a(J.,.), Ja = -a(.,J.); a is Hermitian when it is symmetric and the
/// two agree. For Hermitian a, aJ is a 2-form and (aJ)J = -a.
JActions j_ops(const Eigen::MatrixXd& a, const ComplexStructureJ& j,
               double tol = kDefaultTol);

/// g(J.,J.) = g, i.e. J is a linear isometry of g.
bool is_hermitian_metric(const Metric& g, const ComplexStructureJ& j,
                         double tol = kDefaultTol);

/// omega = gJ.
TwoForm kahler_form(const Metric& g, const ComplexStructureJ& j);

/// Hodge star on 2-forms, n = 4 only. `frame` holds the vectors of a
/// positively ordered frame in its columns; only its orientation class
/// enters. For a complex frame e1, e2 the positive order is (e1, Je1, e2, Je2).
TwoForm hodge_star(const TwoForm& alpha, const Metric& g,
                   const Eigen::Matrix4d& frame);
HodgeSplit hodge_split(const TwoForm& alpha, const Metric& g,
                       const Eigen::Matrix4d& frame);

/// Inner product on 2-forms, <a,b> = (1/2) a_ij b^{ij}.
double lambda2_inner(const Metric& g, const TwoForm& a, const TwoForm& b);

}  // namespace wekit
