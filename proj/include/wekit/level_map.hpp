#pragma once

// The damped sine profile F(alpha) = e^{-alpha cot c} sin(alpha) with
// c = arctan(sqrt 7), its closed derivative ladder
//   F^(q)(alpha) sin^q(c) = (-1)^q e^{-alpha cot c} sin(alpha - q c),
// and the level-matching map beta of [0, pi]: for alpha != c, beta(alpha) is
// the unique point on the other side of c with F(beta) = F(alpha), and
// beta(c) = c. beta is a decreasing involution with beta(0) = pi and
// beta'(c) = -1; the numerical scan verifies the strict slope bound
// beta' < -1 on [0, c).
//
// reduce_to_sine rewrites the oscillatory part of a closed-form ODE profile
// as a single phase-shifted sine in theta = log|t - gamma| / 2, the variable
// in which the endpoint-slope question becomes a statement about F.

#include "wekit/euler_ode.hpp"

#include <vector>

namespace wekit {

/// c = arctan(sqrt 7), the unique maximum of F in (0, pi).
double critical_angle();

/// F and its derivatives via the closed ladder; order in [0, 4].
double damped_sine(double alpha, int order = 0);

/// beta(alpha) for alpha in [0, pi], by bisection on the opposite side of c.
double beta_value(double alpha);

/// beta'(alpha) = F'(alpha)/F'(beta(alpha)) for alpha in [0, c); returns the
/// analytic value -1 within 1e-6 of c (the quotient is 0/0 there); throws
/// for alpha > c.
double beta_slope(double alpha);

struct BetaMap {
  double c = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> beta_prime;  // filled on [0, c] samples, NaN beyond
};

/// Samples beta on a uniform grid of [0, pi] (samples >= 1000) and validates
/// monotonicity and the level-matching property.
BetaMap build_beta_map(int samples);

struct SlopeScan {
  double c = 0.0;
  double three_c_minus_pi = 0.0;
  bool three_c_minus_pi_in_range = false;  // in (0, pi/4)
  double f2_ratio = 0.0;                   // F''(0)/F''(c) = 2 e^{c cot c} cos c
  double alpha0 = 0.0;                     // solves F(alpha0) = F(2c) in [0, c)
  double beta_alpha0 = 0.0;                // = 2c
  double beta_prime_alpha0 = 0.0;
  double beta_prime_zero = 0.0;            // -e^{pi cot c}
  double max_beta_prime = 0.0;             // over a uniform grid on [0, c - margin]
  bool verdict = false;                    // max_beta_prime < -1
};

/// Scans beta' on [0, c - margin] with `grid` points and reports the named
/// constants alongside the verdict.
SlopeScan verify_lemma(int grid, double margin);

struct SineForm {
  int delta = 1;          // sign of t - gamma on the working side
  double amplitude = 0.0; // 2 sqrt(a^2 + b^2)
  double phase = 0.0;     // a cos + b sin = (amplitude/2) sin(sqrt7 (theta - phase))
  double roundtrip_residual = 0.0;
};

/// Requires (a, b) != (0, 0). The round-trip identity
///   2 e^{-theta} Q(t(theta)) = delta eps k e^{theta}
///                              + amplitude sin(sqrt7 (theta - phase))
/// with t(theta) = gamma + delta e^{2 theta} is validated on a theta-grid
/// and its residual reported.
SineForm reduce_to_sine(const QSpec& spec);

}  // namespace wekit
