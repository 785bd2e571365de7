#include "wekit/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wekit {

namespace {

// Covariant components of r^2: b_ij = r_i^k r_kj.
Eigen::MatrixXd ricci_squared(const Eigen::MatrixXd& ric, const Metric& g) {
  return ric * g.inv() * ric;
}

double multiple_residual(const Eigen::MatrixXd& a, const Metric& g) {
  return multiple_of_metric(SymTensor2(a), g, 1.0).residual;
}

}  // namespace

WeaklyEinstein is_weakly_einstein(const CurvTensor& r, const Metric& g, double tol) {
  const ContractionBundle b = contraction_bundle(r, g);
  const MetricMultiple m = multiple_of_metric(b.trc, g, tol);
  return WeaklyEinstein{m.is_multiple, m.residual, m.factor};
}

double we_equation_residual(const ContractionBundle& b, const Metric& g,
                            const CurvTensor& r, double tol) {
  const double e_norm = norm_g(g, b.einstein.m);
  if (e_norm <= tol * std::max(norm_g(g, r), kNormFloor)) return 0.0;
  const SymTensor2 we = act_on_sym(b.weyl, b.einstein, g);
  const Eigen::MatrixXd lhs = 6.0 * we.m + b.scalar * b.einstein.m;
  const double den = std::max({6.0 * norm_g(g, we.m),
                               std::abs(b.scalar) * e_norm, kNormFloor});
  return norm_g(g, lhs) / den;
}

IdentityReport identity_suite(const CurvTensor& r, const Metric& g, double tol) {
  const int n = g.n();
  if (n < 4) throw std::invalid_argument("identity_suite: n >= 4 required");
  const ContractionBundle b = contraction_bundle(r, g);
  const Eigen::MatrixXd& ric = b.ricci.m;
  const double s = b.scalar;
  const Eigen::MatrixXd r2 = ricci_squared(ric, g);
  const Eigen::MatrixXd rr = act_on_sym(r, b.ricci, g).m;
  const Eigen::MatrixXd wr = act_on_sym(b.weyl, b.ricci, g).m;

  IdentityReport out;
  // General-dimension identities from the Weyl decomposition.
  const ContractionBundle wb = contraction_bundle(b.weyl, g);
  const double c = static_cast<double>(n - 2);
  out.weyl_split_identity_a = multiple_residual(
      c * c * (b.trc.m - wb.trc.m) + 2.0 * (2.0 * s * ric - 2.0 * c * rr - n * r2), g);
  out.weyl_split_identity_b =
      multiple_residual(c * (rr - wr) + 2.0 * r2 - (n * s / (n - 1.0)) * ric, g);

  if (n == 4) {
    out.trc_ricci_identity =
        multiple_residual(b.trc.m - 2.0 * rr + s * ric - 2.0 * r2, g);
    out.trc_weyl_ricci_identity =
        multiple_residual(b.trc.m - 2.0 * wr - s * ric / 3.0, g);
    out.weyl_trc_multiple = multiple_residual(wb.trc.m, g);
    out.we_eq_residual = we_equation_residual(b, g, r, tol);
    const bool we = multiple_of_metric(b.trc, g, tol).is_multiple;
    out.iff_consistent = (we == (out.we_eq_residual <= tol));
  }
  return out;
}

SpectrumCheck kahler_spectrum_check(const SymTensor2& e, const Metric& g,
                                    double tol, double scalar) {
  const int n = g.n();
  if (n != 4) throw std::invalid_argument("kahler_spectrum_check: n = 4 required");
  if (e.n() != n) throw std::invalid_argument("kahler_spectrum_check: dimension mismatch");
  const double e_norm = norm_g(g, e.m);
  if (std::abs(trace_g(g, e.m)) > tol * std::max(1.0, e_norm))
    throw std::invalid_argument("kahler_spectrum_check: input not traceless");

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(e.m, g.mat());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("kahler_spectrum_check: eigensolver failed");
  const Eigen::VectorXd ev = es.eigenvalues();  // ascending

  SpectrumCheck out;
  out.a_value = (ev(3) + ev(2) - ev(1) - ev(0)) / 4.0;
  const double atol = tol * std::max(1.0, e_norm);
  out.spectrum_ok = std::abs(ev(3) - out.a_value) <= atol &&
                    std::abs(ev(2) - out.a_value) <= atol &&
                    std::abs(ev(1) + out.a_value) <= atol &&
                    std::abs(ev(0) + out.a_value) <= atol;
  if (out.spectrum_ok) {
    const Eigen::MatrixXd ric = e.m + scalar * g.mat() / 4.0;
    out.trq_residual =
        multiple_residual(scalar * ric - 2.0 * ricci_squared(ric, g), g);
    out.rrr_applicable = true;
  }
  return out;
}

EquivReport equiv_conditions(const CurvTensor& r, const Metric& g,
                             const ComplexStructureJ& j, double tol) {
  const int n = g.n();
  if (n != 4) throw std::invalid_argument("equiv_conditions: n = 4 required");
  if (!is_hermitian_metric(g, j, std::max(tol, 1e-10)))
    throw std::invalid_argument("equiv_conditions: metric not Hermitian for J");

  const ContractionBundle b = contraction_bundle(r, g);
  EquivReport out;
  out.ricci_hermitian = j_ops(b.ricci.m, j, std::max(tol, 1e-10)).is_hermitian;

  const MetricMultiple ma = multiple_of_metric(b.trc, g, tol);
  out.cond_a = ma.is_multiple;
  out.residual_a = ma.residual;

  const MetricMultiple mb = multiple_of_metric(act_on_sym(r, b.ricci, g), g, tol);
  out.cond_b = mb.is_multiple;
  out.residual_b = mb.residual;

  const double e_norm = norm_g(g, b.einstein.m);
  out.einstein_degenerate = e_norm <= tol * std::max(norm_g(g, r), kNormFloor);
  if (out.einstein_degenerate) {
    out.cond_c = out.cond_d = true;
  } else {
    out.residual_c = we_equation_residual(b, g, r, tol);
    out.cond_c = out.residual_c <= tol;

    const TwoForm eta(j.mat.transpose() * b.einstein.m);
    const TwoForm weta = act_on_form(b.weyl, eta, g);
    const Eigen::MatrixXd lhs = 3.0 * weta.m + b.scalar * eta.m;
    const double den = std::max({3.0 * norm_g(g, weta.m),
                                 std::abs(b.scalar) * norm_g(g, eta.m), kNormFloor});
    out.residual_d = norm_g(g, lhs) / den;
    out.cond_d = out.residual_d <= tol;
  }

  const SpectrumCheck sc = kahler_spectrum_check(b.einstein, g, tol, b.scalar);
  out.spectrum_ok = sc.spectrum_ok;
  out.a_value = sc.a_value;
  return out;
}

BasisOracle weyl_component_oracle(const CurvTensor& r, const Metric& g,
                                  const ComplexStructureJ& j, double tol) {
  const int n = g.n();
  if (n != 4) throw std::invalid_argument("weyl_component_oracle: n = 4 required");
  const ContractionBundle b = contraction_bundle(r, g);

  BasisOracle out;
  const double e_norm = norm_g(g, b.einstein.m);
  if (e_norm <= tol * std::max(norm_g(g, r), kNormFloor)) return out;
  const SpectrumCheck sc = kahler_spectrum_check(b.einstein, g, tol, b.scalar);
  if (!sc.spectrum_ok || sc.a_value <= 0.0) return out;
  out.applicable = true;
  out.a_value = sc.a_value;

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(b.einstein.m, g.mat());
  Eigen::VectorXd u = es.eigenvectors().col(3);  // +a eigenspace
  Eigen::VectorXd v = es.eigenvectors().col(0);  // -a eigenspace
  if (u(0) < 0) u = -u;
  if (v(0) < 0) v = -v;
  Eigen::Matrix<double, 4, 4> basis;
  basis.col(0) = u;
  basis.col(1) = j.mat * u;
  basis.col(2) = v;
  basis.col(3) = j.mat * v;

  // W in the eigenbasis.
  auto wcomp = [&](int a0, int a1, int a2, int a3) {
    double acc = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        for (int p = 0; p < 4; ++p)
          for (int q = 0; q < 4; ++q)
            acc += b.weyl.at(i, k, p, q) * basis(i, a0) * basis(k, a1) *
                   basis(p, a2) * basis(q, a3);
    return acc;
  };

  const double s = b.scalar;
  const double scale = std::max({norm_g(g, b.weyl), std::abs(s), kNormFloor});
  double worst = std::abs(wcomp(0, 1, 0, 1) + s / 12.0);
  worst = std::max(worst, std::abs(wcomp(2, 3, 2, 3) + s / 12.0));
  worst = std::max(worst, std::abs(wcomp(0, 1, 2, 3) - s / 4.0));
  const int off_pairs[4][2] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (const auto& pq : off_pairs) {
    worst = std::max(worst, std::abs(wcomp(0, 1, pq[0], pq[1])));
    worst = std::max(worst, std::abs(wcomp(2, 3, pq[0], pq[1])));
  }
  out.max_residual = worst / scale;
  out.ok = out.max_residual <= tol;
  return out;
}

}  // namespace wekit
