#pragma once

// Cohomogeneity-one Kahler frame family on a trivialized tangent bundle
// (e1, e2, e3, e4) with bracket relations
//   [e1, ei] = 0,  [e2, e4] = 2p e3,  [e2, e3] = q e4,  [e3, e4] = q e2,
// metric g(e1,e1) = g(e3,e3) = zeta*eta, g(e2,e2) = g(e4,e4) = zeta, and
// complex structure J e1 = e3, J e2 = e4. Here zeta(t) = p (gamma - t)/theta
// with theta != 0 constant (so zeta' theta = -p, the Kahler condition), and
// eta > 0 is a free profile of the family parameter t.
//
// Closed forms are provided for the Levi-Civita connection, the curvature,
// and the Ricci eigenvalues mu (on Span(e1,e3)) and lambda (on Span(e2,e4)).
// The sign convention is R(v,w)u = nabla_{[v,w]}u + nabla_w nabla_v u
// - nabla_v nabla_w u, with R_ijkl = g(R(e_i,e_j)e_k, e_l); frame
// derivatives convert through d_{e1} t = 2 zeta eta theta.
//
// With Q = 4 zeta eta theta^2, the metric is weakly Einstein exactly when
// (t-gamma)^2 Q'' + 2Q = 4 q theta (t-gamma), the Euler ODE with
// K = 4 eps q theta, and Einstein exactly when Q = eps K (t-gamma)/2.

#include "wekit/euler_ode.hpp"
#include "wekit/tensor.hpp"

#include <array>
#include <functional>

namespace wekit {

struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Profile of eta as a function of t with two analytic derivatives.
using ProfileFn = std::function<Jet2(double)>;

struct FamilyParams {
  double p = 1.0;
  double q = 1.0;
  double theta = 1.0;
  double gamma = 0.0;
  ProfileFn eta;
};

FamilyParams make_family_params(double p, double q, double theta, double gamma,
                                ProfileFn eta);

/// Family member whose Q profile is the closed-form ODE solution `spec`:
/// theta = -eps*p (making zeta = |t - gamma|), q = -k/(4p), and
/// eta = Q / (4 zeta theta^2). Weakly Einstein by construction.
FamilyParams family_from_qspec(const QSpec& spec, double p = 1.0);

/// Connection coefficients: conn[i][j][k] is the e_k-component of
/// nabla_{e_i} e_j.
using Connection = std::array<std::array<std::array<double, 4>, 4>, 4>;

struct FramePoint {
  double t = 0.0;
  Metric g;
  ComplexStructureJ j;
  Connection conn{};
  CurvTensor curv;
  SymTensor2 ricci;
  double mu = 0.0;      // r = mu g on Span(e1, e3)
  double lambda = 0.0;  // r = lambda g on Span(e2, e4)
  double q_value = 0.0; // Q = 4 zeta eta theta^2
};

/// Evaluates metric, connection, curvature and Ricci data at t from the
/// closed forms. Requires t != gamma and zeta, eta > 0 there.
FramePoint frame_point(const FamilyParams& params, double t);

/// Positively ordered orientation frame (e1, Je1, e2, Je2) = (e1, e3, e2, e4)
/// as columns, for use with hodge_star/hodge_split.
Eigen::Matrix4d family_orientation_frame();

/// Max deviation of the closed-form connection from the Koszul formula
/// evaluated with the bracket relations and analytic t-derivatives.
double koszul_check(const FamilyParams& params, double t);

/// Same, but the Koszul right-hand side takes its bracket relations from
/// `bracket_params`. A mismatch (for instance q doubled on one side) makes
/// the deviation macroscopic; corrupting both sides together does not, since
/// the connection of (g, brackets) is covariant in the structure constants.
double koszul_deviation(const FamilyParams& conn_params,
                        const FamilyParams& bracket_params, double t);

/// Max deviation of the closed-form curvature from the curvature assembled
/// out of the connection, with t-derivatives of the connection coefficients
/// taken by central differences of step h.
double curvature_from_connection(const FamilyParams& params, double t, double h);

struct WEResiduals {
  double ode = 0.0;       // |(t-g)^2 Q'' + 2Q - 4 q theta (t-g)| / (1+|Q|)
  double einstein = 0.0;  // |Q - eps K (t-g)/2| / (1+|Q|)
};

/// Residuals of the weakly-Einstein ODE and of the Einstein branch for the
/// closed-form Q of `spec`; checks k = 4 eps q theta consistency.
WEResiduals we_residual(const FamilyParams& params, const QSpec& spec, double t);

struct RicciEigs {
  double mu = 0.0;
  double lambda = 0.0;
};

/// Ricci eigenvalues through the potential route mu = -Y'/2,
/// lambda = (K - eps Y)/(2 eps (t-gamma)) with Y = Q' + Q/(t-gamma).
RicciEigs ricci_eigs_potential_path(const QSpec& spec, double t);

}  // namespace wekit
