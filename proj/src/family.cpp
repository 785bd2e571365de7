#include "wekit/family.hpp"

#include <cmath>
#include <stdexcept>

namespace wekit {

namespace {

struct LocalData {
  double zeta, zeta_p;      // zeta and zeta'
  double eta, eta_p, eta_pp;
  double dt_e1;             // d_{e1} t = 2 zeta eta theta
};

LocalData local_data(const FamilyParams& fp, double t) {
  if (t == fp.gamma) throw std::domain_error("family: t = gamma excluded");
  LocalData d;
  d.zeta = fp.p * (fp.gamma - t) / fp.theta;
  d.zeta_p = -fp.p / fp.theta;
  const Jet2 e = fp.eta(t);
  d.eta = e.value;
  d.eta_p = e.d1;
  d.eta_pp = e.d2;
  if (!(d.zeta > 0.0)) throw std::domain_error("family: zeta <= 0 at t");
  if (!(d.eta > 0.0)) throw std::domain_error("family: eta <= 0 at t");
  d.dt_e1 = 2.0 * d.zeta * d.eta * fp.theta;
  return d;
}

Connection connection_at(const FamilyParams& fp, const LocalData& d) {
  const double p = fp.p, q = fp.q, th = fp.theta;
  const double zeph = (d.zeta_p * d.eta + d.zeta * d.eta_p) * th;  // (zeta eta)' theta
  Connection c{};
  c[0][0][0] = zeph;
  c[0][1][1] = c[1][0][1] = -p * d.eta;
  c[0][2][2] = c[2][0][2] = zeph;
  c[0][3][3] = c[3][0][3] = -p * d.eta;
  c[1][1][0] = p;
  c[1][2][3] = -p * d.eta;
  c[1][3][2] = p;
  c[2][1][3] = -(p * d.eta + q);
  c[2][2][0] = -zeph;
  c[2][3][1] = p * d.eta + q;
  c[3][1][2] = -p;
  c[3][2][1] = p * d.eta;
  c[3][3][0] = p;
  return c;
}

// Bracket coefficients: [e_i, e_j] = sum_k br[i][j][k] e_k.
Connection brackets_of(const FamilyParams& fp) {
  Connection br{};
  br[1][3][2] = 2.0 * fp.p;
  br[3][1][2] = -2.0 * fp.p;
  br[1][2][3] = fp.q;
  br[2][1][3] = -fp.q;
  br[2][3][1] = fp.q;
  br[3][2][1] = -fp.q;
  return br;
}

Eigen::Matrix4d metric_at(const LocalData& d) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = g(2, 2) = d.zeta * d.eta;
  g(1, 1) = g(3, 3) = d.zeta;
  return g;
}

}  // namespace

FamilyParams make_family_params(double p, double q, double theta, double gamma,
                                ProfileFn eta) {
  if (p == 0.0 || q == 0.0 || theta == 0.0)
    throw std::invalid_argument("FamilyParams: p, q, theta must be nonzero");
  if (!eta) throw std::invalid_argument("FamilyParams: eta profile required");
  return FamilyParams{p, q, theta, gamma, std::move(eta)};
}

FamilyParams family_from_qspec(const QSpec& spec, double p) {
  if (p == 0.0) throw std::invalid_argument("family_from_qspec: p != 0 required");
  if (spec.k == 0.0)
    throw std::invalid_argument("family_from_qspec: k != 0 required (q nonzero)");
  const double theta = -spec.eps * p;
  const double q = -spec.k / (4.0 * p);
  const double gamma = spec.gamma;
  ProfileFn eta = [spec, p, theta](double t) {
    const QJet jet = q_eval(spec, t);
    const double u = t - spec.gamma;
    Jet2 out;
    // eta = Q/(4 zeta theta^2) with zeta theta = p (gamma - t)
    out.value = -jet.q / (4.0 * p * theta * u);
    out.d1 = -(jet.dq * u - jet.q) / (4.0 * p * theta * u * u);
    out.d2 = -(jet.d2q * u * u - 2.0 * jet.dq * u + 2.0 * jet.q) /
             (4.0 * p * theta * u * u * u);
    return out;
  };
  return make_family_params(p, q, theta, gamma, std::move(eta));
}

FramePoint frame_point(const FamilyParams& fp, double t) {
  const LocalData d = local_data(fp, t);
  const double p = fp.p, q = fp.q, th = fp.theta;

  const double chi1 = p * d.zeta * d.zeta * d.eta * d.eta_p * th;
  // [(zeta eta)' theta]' = -2 p eta' + zeta eta'' theta
  const double dzeph = -2.0 * p * d.eta_p + d.zeta * d.eta_pp * th;
  const double chi2 = -2.0 * dzeph * d.zeta * d.zeta * d.eta * d.eta * th;
  const double chi3 = -2.0 * p * (2.0 * p * d.eta + q) * d.zeta;

  CurvTensor r(4);
  r.set_component(0, 1, 0, 1, chi1);
  r.set_component(0, 1, 2, 3, chi1);
  r.set_component(0, 3, 0, 3, chi1);
  r.set_component(0, 3, 1, 2, chi1);
  r.set_component(1, 2, 1, 2, chi1);
  r.set_component(2, 3, 2, 3, chi1);
  r.set_component(0, 2, 0, 2, chi2);
  r.set_component(0, 2, 1, 3, 2.0 * chi1);
  r.set_component(1, 3, 1, 3, chi3);

  const double r11 = 2.0 * (3.0 * p * d.eta_p - d.zeta * d.eta_pp * th) * d.zeta *
                     d.eta * th;
  const double r22 = 2.0 * p * d.zeta * d.eta_p * th - 2.0 * p * (2.0 * p * d.eta + q);
  Eigen::Matrix4d ric = Eigen::Matrix4d::Zero();
  ric(0, 0) = ric(2, 2) = r11;
  ric(1, 1) = ric(3, 3) = r22;

  Eigen::Matrix4d jm = Eigen::Matrix4d::Zero();
  jm(2, 0) = 1;  // J e1 = e3
  jm(0, 2) = -1;
  jm(3, 1) = 1;  // J e2 = e4
  jm(1, 3) = -1;

  const Eigen::Matrix4d g = metric_at(d);
  FramePoint out{t,
                 Metric(g),
                 ComplexStructureJ(jm),
                 connection_at(fp, d),
                 std::move(r),
                 SymTensor2(ric),
                 r11 / g(0, 0),
                 r22 / g(1, 1),
                 4.0 * d.zeta * d.eta * th * th};
  return out;
}

Eigen::Matrix4d family_orientation_frame() {
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
  f(0, 0) = 1;  // e1
  f(2, 1) = 1;  // e3 = J e1
  f(1, 2) = 1;  // e2
  f(3, 3) = 1;  // e4 = J e2
  return f;
}

double koszul_check(const FamilyParams& fp, double t) {
  return koszul_deviation(fp, fp, t);
}

double koszul_deviation(const FamilyParams& fp, const FamilyParams& bracket_params,
                        double t) {
  const LocalData d = local_data(fp, t);
  const Connection conn = connection_at(fp, d);
  const Connection br = brackets_of(bracket_params);
  const Eigen::Matrix4d g = metric_at(d);

  // d/dt of the metric coefficients
  Eigen::Matrix4d dg = Eigen::Matrix4d::Zero();
  dg(0, 0) = dg(2, 2) = d.zeta_p * d.eta + d.zeta * d.eta_p;
  dg(1, 1) = dg(3, 3) = d.zeta_p;

  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double lhs = 0.0;
        for (int m = 0; m < 4; ++m) lhs += 2.0 * conn[i][j][m] * g(m, k);
        double rhs = 0.0;
        if (i == 0) rhs += d.dt_e1 * dg(j, k);
        if (j == 0) rhs += d.dt_e1 * dg(i, k);
        if (k == 0) rhs -= d.dt_e1 * dg(i, j);
        for (int m = 0; m < 4; ++m)
          rhs += br[i][j][m] * g(m, k) - br[j][k][m] * g(m, i) + br[k][i][m] * g(m, j);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

double curvature_from_connection(const FamilyParams& fp, double t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("curvature_from_connection: h > 0");
  const LocalData d = local_data(fp, t);
  const Connection conn = connection_at(fp, d);
  const Connection conn_m = connection_at(fp, local_data(fp, t - h));
  const Connection conn_p = connection_at(fp, local_data(fp, t + h));
  const Connection br = brackets_of(fp);
  const Eigen::Matrix4d g = metric_at(d);
  const FramePoint ref = frame_point(fp, t);

  Connection dconn{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        dconn[i][j][k] = (conn_p[i][j][k] - conn_m[i][j][k]) / (2.0 * h);

  // R(e_i,e_j)e_k = nabla_{[e_i,e_j]}e_k + nabla_{e_j}nabla_{e_i}e_k
  //               - nabla_{e_i}nabla_{e_j}e_k
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        std::array<double, 4> vec{};
        for (int m = 0; m < 4; ++m)
          for (int l = 0; l < 4; ++l) vec[l] += br[i][j][m] * conn[m][k][l];
        if (j == 0)
          for (int l = 0; l < 4; ++l) vec[l] += d.dt_e1 * dconn[i][k][l];
        for (int m = 0; m < 4; ++m)
          for (int l = 0; l < 4; ++l) vec[l] += conn[i][k][m] * conn[j][m][l];
        if (i == 0)
          for (int l = 0; l < 4; ++l) vec[l] -= d.dt_e1 * dconn[j][k][l];
        for (int m = 0; m < 4; ++m)
          for (int l = 0; l < 4; ++l) vec[l] -= conn[j][k][m] * conn[i][m][l];
        for (int l = 0; l < 4; ++l) {
          double rl = 0.0;
          for (int m = 0; m < 4; ++m) rl += vec[m] * g(m, l);
          worst = std::max(worst, std::abs(rl - ref.curv.at(i, j, k, l)));
        }
      }
  return worst;
}

WEResiduals we_residual(const FamilyParams& fp, const QSpec& spec, double t) {
  const double k_expected = 4.0 * spec.eps * fp.q * fp.theta;
  if (std::abs(spec.k - k_expected) > 1e-12 * std::max(1.0, std::abs(k_expected)))
    throw std::invalid_argument("we_residual: spec.k inconsistent with 4 eps q theta");
  const QJet jet = q_eval(spec, t);
  const double u = t - spec.gamma;
  WEResiduals out;
  out.ode = std::abs(u * u * jet.d2q + 2.0 * jet.q - 4.0 * fp.q * fp.theta * u) /
            (1.0 + std::abs(jet.q));
  out.einstein =
      std::abs(jet.q - spec.eps * spec.k * u / 2.0) / (1.0 + std::abs(jet.q));
  return out;
}

RicciEigs ricci_eigs_potential_path(const QSpec& spec, double t) {
  const QJet jet = q_eval(spec, t);
  const double u = t - spec.gamma;
  if (!(jet.q > 0.0))
    throw std::domain_error("ricci_eigs_potential_path: Q <= 0 at t");
  const double y = jet.dq + jet.q / u;
  const double yp = jet.d2q + jet.dq / u - jet.q / (u * u);
  RicciEigs out;
  out.mu = -yp / 2.0;
  out.lambda = (spec.k - spec.eps * y) / (2.0 * spec.eps * u);
  return out;
}

}  // namespace wekit
