#pragma once

// Closed-form solutions of the equidimensional ODE
//     (t - gamma)^2 Q'' + 2 Q = eps K (t - gamma)
// on either side of t = gamma, positivity-interval analysis of Q, and the
// endpoint-slope pattern test used by the nonrealizability sweep.
//
// The general solution is the particular linear branch eps K (t - gamma)/2
// plus |t - gamma|^{1/2} times a log-periodic oscillation with angular
// frequency sqrt(7)/2 in log|t - gamma|.

#include <vector>

namespace wekit {

/// Coefficients of one closed-form solution:
///   Q(t) = eps k u/2 + |u|^{1/2} [a cos(w log|u|) + b sin(w log|u|)],
/// with u = t - gamma and w = sqrt(7)/2.
struct QSpec {
  double k = 0.0;
  double gamma = 0.0;
  int eps = 1;  // +1 or -1; the working side is sign(t - gamma) = eps
  double a = 0.0;
  double b = 0.0;
};

struct QJet {
  double q = 0.0;
  double dq = 0.0;
  double d2q = 0.0;
};

/// Q and its first two derivatives; throws at t = gamma (logarithmic
/// singularity).
QJet q_eval(const QSpec& spec, double t);

enum class BoundaryKind { zero, blowup, domain_edge };

struct PositivityInterval {
  double lo = 0.0, hi = 0.0;
  double lo_slope = 0.0, hi_slope = 0.0;  // analytic Q' at the endpoints
  BoundaryKind lo_kind = BoundaryKind::domain_edge;
  BoundaryKind hi_kind = BoundaryKind::domain_edge;
};

/// Maximal subintervals of [t_lo, t_hi] on which Q > 0. Roots are bracketed
/// on a grid spaced geometrically in |t - gamma| (the oscillation is
/// log-periodic) and refined by bisection to ~1e-12. gamma must lie outside
/// [t_lo, t_hi]; grid >= 100.
std::vector<PositivityInterval> positivity_scan(const QSpec& spec, double t_lo,
                                                double t_hi, int grid);

/// True when the interval has the realizable boundary pattern: both
/// endpoints are zeros of Q, the entering slope is positive, and the two
/// slopes are mutually opposite to relative tolerance tol. Throws unless
/// both endpoint kinds are `zero`.
bool boundary_match(const PositivityInterval& iv, double tol);

}  // namespace wekit
