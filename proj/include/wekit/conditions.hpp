#pragma once

// Predicates and residual reports for the weakly-Einstein property of
// algebraic curvature tensors in dimension four, the unconditional
// contraction identities behind it, and the equivalent characterizations
// available on Kahler surfaces:
//   (a) trc R is a multiple of g,
//   (b) Rr is a multiple of g,
//   (c) 6 We = -s e,
//   (d) 3 W eta = -s eta,   eta = eJ.

#include "wekit/tensor.hpp"

#include <optional>

namespace wekit {

struct WeaklyEinstein {
  bool weakly_einstein = false;
  double residual = 0.0;
  double factor = 0.0;  // trc R = factor * g when weakly Einstein
};

WeaklyEinstein is_weakly_einstein(const CurvTensor& r, const Metric& g,
                                  double tol = kDefaultTol);

/// Relative residuals of multiple-of-g identities satisfied by every
/// algebraic curvature tensor. Fields are set only where the identity
/// applies (n = 4 for all but the two general-dimension ones, n >= 4 for
/// those).
struct IdentityReport {
  std::optional<double> trc_ricci_identity;       // trcR - 2Rr + sr - 2r^2
  std::optional<double> trc_weyl_ricci_identity;  // trcR - 2Wr - sr/3
  std::optional<double> weyl_trc_multiple;        // trc W itself
  std::optional<double> weyl_split_identity_a;    // (n-2)^2(trcR - trcW) + 2[2sr - 2(n-2)Rr - n r^2]
  std::optional<double> weyl_split_identity_b;    // (n-2)(Rr - Wr) + 2r^2 - n sr/(n-1)
  std::optional<bool> iff_consistent;  // weakly-Einstein test agrees with ||6We + se|| <= tol
  double we_eq_residual = 0.0;         // scale-free residual of 6We + se
};

IdentityReport identity_suite(const CurvTensor& r, const Metric& g,
                              double tol = kDefaultTol);

/// Scale-free residual of 6 We + s e; zero when e vanishes to tolerance.
double we_equation_residual(const ContractionBundle& b, const Metric& g,
                            const CurvTensor& r, double tol);

struct SpectrumCheck {
  bool spectrum_ok = false;
  double a_value = 0.0;
  double trq_residual = 0.0;   // multiple-of-g residual of s r - 2 r^2
  bool rrr_applicable = false; // trcR - 2Rr is a multiple of g once the spectrum holds
};

/// Tests whether the traceless tensor e has g-spectrum (a, a, -a, -a);
/// `scalar` supplies s so the associated r = e + s g/4 can be formed.
SpectrumCheck kahler_spectrum_check(const SymTensor2& e, const Metric& g,
                                    double tol = kDefaultTol, double scalar = 0.0);

struct EquivReport {
  bool ricci_hermitian = false;
  bool einstein_degenerate = false;  // ||e|| below tolerance: (c), (d) hold vacuously
  bool cond_a = false, cond_b = false, cond_c = false, cond_d = false;
  double residual_a = 0.0, residual_b = 0.0, residual_c = 0.0, residual_d = 0.0;
  bool spectrum_ok = false;
  double a_value = 0.0;
};

/// Evaluates the four algebraic conditions at a point of a Kahler surface.
/// Throws when g is not Hermitian for J; a non-Hermitian Ricci tensor is
/// reported, not thrown.
EquivReport equiv_conditions(const CurvTensor& r, const Metric& g,
                             const ComplexStructureJ& j, double tol = kDefaultTol);

/// Independent route to condition (d): builds an orthonormal eigenbasis
/// (u, Ju, v, Jv) of e with eigenvalues (a, a, -a, -a) and checks the Weyl
/// components in that basis (W_1212 = W_3434 = -s/12, W_1234 = s/4, all
/// other W_12.. and W_34.. components zero). Applicable when e != 0 and the
/// spectrum has the required shape.
struct BasisOracle {
  bool applicable = false;
  bool ok = false;
  double max_residual = 0.0;
  double a_value = 0.0;
};

BasisOracle weyl_component_oracle(const CurvTensor& r, const Metric& g,
                                  const ComplexStructureJ& j,
                                  double tol = kDefaultTol);

}  // namespace wekit
