#include "wekit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wekit {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double sym_defect(const Eigen::MatrixXd& a) {
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

double mat_scale(const Eigen::MatrixXd& a) {
  return std::max(a.cwiseAbs().maxCoeff(), 1.0);
}

// Raises one index slot of a rank-4 array: out[..a..] = g^{ab} in[..b..].
void raise_slot(const CurvTensor& in, CurvTensor& out, const Eigen::MatrixXd& gi,
                int slot) {
  const int n = in.n();
  int idx[4];
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1])
      for (idx[2] = 0; idx[2] < n; ++idx[2])
        for (idx[3] = 0; idx[3] < n; ++idx[3]) {
          double acc = 0.0;
          int jdx[4] = {idx[0], idx[1], idx[2], idx[3]};
          for (int b = 0; b < n; ++b) {
            jdx[slot] = b;
            acc += gi(idx[slot], b) * in.at(jdx[0], jdx[1], jdx[2], jdx[3]);
          }
          out.at(idx[0], idx[1], idx[2], idx[3]) = acc;
        }
}

CurvTensor raise_slots(const CurvTensor& r, const Eigen::MatrixXd& gi,
                       std::initializer_list<int> slots) {
  CurvTensor cur = r;
  CurvTensor tmp(r.n());
  for (int s : slots) {
    raise_slot(cur, tmp, gi, s);
    std::swap(cur, tmp);
  }
  return cur;
}

}  // namespace

Metric::Metric(Eigen::MatrixXd g) : g_(std::move(g)) {
  require(g_.rows() == g_.cols() && g_.rows() >= 2, "Metric: need square matrix, n >= 2");
  require(sym_defect(g_) <= 1e-12 * mat_scale(g_), "Metric: matrix not symmetric");
  g_ = ((g_ + g_.transpose()) / 2).eval();
  Eigen::LLT<Eigen::MatrixXd> llt(g_);
  require(llt.info() == Eigen::Success, "Metric: matrix not positive definite");
  chol_ = llt.matrixL();
  g_inv_ = llt.solve(Eigen::MatrixXd::Identity(g_.rows(), g_.cols()));
}

SymTensor2::SymTensor2(Eigen::MatrixXd a) : m(std::move(a)) {
  require(m.rows() == m.cols(), "SymTensor2: need square matrix");
  require(sym_defect(m) <= 1e-9 * mat_scale(m), "SymTensor2: matrix not symmetric");
  m = ((m + m.transpose()) / 2).eval();
}

TwoForm::TwoForm(Eigen::MatrixXd a) : m(std::move(a)) {
  require(m.rows() == m.cols(), "TwoForm: need square matrix");
  require((m + m.transpose()).cwiseAbs().maxCoeff() <= 1e-9 * mat_scale(m),
          "TwoForm: matrix not antisymmetric");
  m = ((m - m.transpose()) / 2).eval();
}

ComplexStructureJ::ComplexStructureJ(Eigen::MatrixXd j) : mat(std::move(j)) {
  require(mat.rows() == mat.cols(), "ComplexStructureJ: need square matrix");
  require(mat.rows() % 2 == 0, "ComplexStructureJ: dimension must be even");
  const Eigen::MatrixXd jj = mat * mat;
  require((jj + Eigen::MatrixXd::Identity(mat.rows(), mat.cols())).cwiseAbs().maxCoeff() <=
              1e-10 * mat_scale(mat) * mat_scale(mat),
          "ComplexStructureJ: J^2 != -Id");
}

void CurvTensor::set_component(int i, int j, int k, int l, double v) {
  at(i, j, k, l) = v;
  at(j, i, k, l) = -v;
  at(i, j, l, k) = -v;
  at(j, i, l, k) = v;
  at(k, l, i, j) = v;
  at(l, k, i, j) = -v;
  at(k, l, j, i) = -v;
  at(l, k, j, i) = v;
}

double norm_g(const Metric& g, const Eigen::MatrixXd& a) {
  // ||a||^2 = a_ij a_kl g^ik g^jl = tr(g^-1 a g^-1 a^T)
  const Eigen::MatrixXd& gi = g.inv();
  return std::sqrt(std::max(0.0, (gi * a * gi * a.transpose()).trace()));
}

double norm_g(const Metric& g, const CurvTensor& r) {
  const int n = r.n();
  CurvTensor up = raise_slots(r, g.inv(), {0, 1, 2, 3});
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += r.at(i, j, k, l) * up.at(i, j, k, l);
  return std::sqrt(std::max(0.0, acc));
}

double trace_g(const Metric& g, const Eigen::MatrixXd& a) {
  return (g.inv() * a).trace();
}

double curvature_symmetry_residual(const CurvTensor& r) {
  const int n = r.n();
  double scale = 0.0;
  for (double v : r.data()) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          worst = std::max(worst, std::abs(r.at(i, j, k, l) + r.at(j, i, k, l)));
          worst = std::max(worst, std::abs(r.at(i, j, k, l) + r.at(i, j, l, k)));
          worst = std::max(worst, std::abs(r.at(i, j, k, l) - r.at(k, l, i, j)));
          worst = std::max(worst, std::abs(r.at(i, j, k, l) + r.at(i, k, l, j) +
                                           r.at(i, l, j, k)));
        }
  return worst / scale;
}

void validate_curvature(const CurvTensor& r, double tol) {
  if (curvature_symmetry_residual(r) > tol)
    throw std::invalid_argument("CurvTensor: curvature symmetries violated");
}

ContractionBundle contraction_bundle(const CurvTensor& r, const Metric& g) {
  const int n = g.n();
  require(r.n() == n, "contraction_bundle: dimension mismatch");
  require(n >= 4, "contraction_bundle: Weyl tensor undefined for n < 4");
  validate_curvature(r);

  const Eigen::MatrixXd& gi = g.inv();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) acc += gi(p, q) * r.at(i, p, j, q);
      ric(i, j) = acc;
    }
  ric = ((ric + ric.transpose()) / 2).eval();
  const double s = (gi * ric).trace();
  const Eigen::MatrixXd e = ric - s * g.mat() / n;
  const Eigen::MatrixXd h = ric - s * g.mat() / (2 * n - 2);

  CurvTensor w = r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          w.at(i, j, p, q) -= (g.mat()(i, p) * h(j, q) + g.mat()(j, q) * h(i, p) -
                               g.mat()(j, p) * h(i, q) - g.mat()(i, q) * h(j, p)) /
                              (n - 2);

  // [trc R]_ij = R_ikpq R_j^{kpq}
  CurvTensor up = raise_slots(r, gi, {1, 2, 3});
  Eigen::MatrixXd trc = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) acc += r.at(i, k, p, q) * up.at(j, k, p, q);
      trc(i, j) = acc;
    }
  trc = ((trc + trc.transpose()) / 2).eval();

  return ContractionBundle{SymTensor2(ric), s,           SymTensor2(e),
                           SymTensor2(h),   std::move(w), SymTensor2(trc)};
}

SymTensor2 act_on_sym(const CurvTensor& r, const SymTensor2& b, const Metric& g) {
  const int n = g.n();
  require(r.n() == n && b.n() == n, "act_on_sym: dimension mismatch");
  const Eigen::MatrixXd bu = g.inv() * b.m * g.inv();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) acc += r.at(i, p, j, q) * bu(p, q);
      out(i, j) = acc;
    }
  return SymTensor2((out + out.transpose()) / 2);
}

TwoForm act_on_form(const CurvTensor& r, const TwoForm& alpha, const Metric& g) {
  const int n = g.n();
  require(r.n() == n && alpha.n() == n, "act_on_form: dimension mismatch");
  const Eigen::MatrixXd au = g.inv() * alpha.m * g.inv();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) acc += r.at(i, j, p, q) * au(p, q);
      out(i, j) = acc / 2;
    }
  return TwoForm((out - out.transpose()) / 2);
}

MetricMultiple multiple_of_metric(const SymTensor2& a, const Metric& g, double tol) {
  require(a.n() == g.n(), "multiple_of_metric: dimension mismatch");
  require(tol > 0.0, "multiple_of_metric: tol must be positive");
  MetricMultiple out;
  out.factor = trace_g(g, a.m) / g.n();
  const double num = norm_g(g, a.m - out.factor * g.mat());
  const double den =
      std::max({norm_g(g, a.m), norm_g(g, g.mat()), kNormFloor});
  out.residual = num / den;
  out.is_multiple = out.residual <= tol;
  return out;
}

JActions j_ops(const Eigen::MatrixXd& a, const ComplexStructureJ& j, double tol) {
  require(a.rows() == j.n() && a.cols() == j.n(), "j_ops: dimension mismatch");
  JActions out;
  out.aj = j.mat.transpose() * a;  // [aJ]_ij = J^k_i a_kj
  out.ja = -a * j.mat;             // [Ja]_ij = -a_ik J^k_j
  out.commutator = out.aj - out.ja;
  const double scale = std::max(a.norm(), 1.0);
  out.is_hermitian = sym_defect(a) <= tol * scale &&
                     out.commutator.cwiseAbs().maxCoeff() <= tol * scale;
  return out;
}

bool is_hermitian_metric(const Metric& g, const ComplexStructureJ& j, double tol) {
  require(g.n() == j.n(), "is_hermitian_metric: dimension mismatch");
  const Eigen::MatrixXd d = j.mat.transpose() * g.mat() * j.mat - g.mat();
  return norm_g(g, d) <= tol * norm_g(g, g.mat());
}

TwoForm kahler_form(const Metric& g, const ComplexStructureJ& j) {
  require(g.n() == j.n(), "kahler_form: dimension mismatch");
  return TwoForm(j.mat.transpose() * g.mat());
}

TwoForm hodge_star(const TwoForm& alpha, const Metric& g,
                   const Eigen::Matrix4d& frame) {
  require(g.n() == 4 && alpha.n() == 4, "hodge_star: defined for n = 4 only");
  const double detf = frame.determinant();
  require(std::abs(detf) > 1e-12 * mat_scale(frame) * mat_scale(frame) *
                               mat_scale(frame) * mat_scale(frame),
          "hodge_star: degenerate frame");
  const double vol = (detf > 0 ? 1.0 : -1.0) * std::sqrt(g.mat().determinant());
  const Eigen::MatrixXd au = g.inv() * alpha.m * g.inv();

  static const int perms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
      {0, 3, 2, 1}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0},
      {1, 3, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3},
      {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0}, {3, 0, 1, 2}, {3, 0, 2, 1},
      {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  static const int signs[24] = {1, -1, -1, 1,  1, -1, -1, 1,  1, -1, -1, 1,
                                1, -1, -1, 1,  1, -1, -1, 1,  1, -1, -1, 1};

  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  for (int p = 0; p < 24; ++p) {
    const int* ix = perms[p];
    out(ix[0], ix[1]) += 0.5 * vol * signs[p] * au(ix[2], ix[3]);
  }
  return TwoForm((out - out.transpose()) / 2);
}

HodgeSplit hodge_split(const TwoForm& alpha, const Metric& g,
                       const Eigen::Matrix4d& frame) {
  const TwoForm st = hodge_star(alpha, g, frame);
  return HodgeSplit{TwoForm((alpha.m + st.m) / 2), TwoForm((alpha.m - st.m) / 2)};
}

double lambda2_inner(const Metric& g, const TwoForm& a, const TwoForm& b) {
  require(a.n() == g.n() && b.n() == g.n(), "lambda2_inner: dimension mismatch");
  const Eigen::MatrixXd bu = g.inv() * b.m * g.inv();
  return 0.5 * (a.m.cwiseProduct(bu)).sum();
}

}  // namespace wekit
