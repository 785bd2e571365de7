#include "doctest.h"
#include "wekit/conditions.hpp"
#include "wekit/family.hpp"
#include "wekit/tensor.hpp"

#include <cmath>
#include <random>

using namespace wekit;

namespace {

FamilyParams flat_params() {
  return make_family_params(1.0, -1.0, -1.0, 0.0,
                            [](double) { return Jet2{0.5, 0.0, 0.0}; });
}

const QSpec kSample{4.0, 0.0, 1, 0.3, 0.0};

}  // namespace

TEST_CASE("flat member of the family") {
  const FamilyParams fp = flat_params();
  const FramePoint pt = frame_point(fp, 1.0);
  CHECK(pt.g.mat()(0, 0) == doctest::Approx(0.5));  // zeta = 1, eta = 1/2
  CHECK(pt.g.mat()(1, 1) == doctest::Approx(1.0));
  CHECK(pt.q_value == doctest::Approx(2.0));        // Q = 4 zeta eta theta^2
  double mx = 0.0;
  for (double v : pt.curv.data()) mx = std::max(mx, std::abs(v));
  CHECK(mx <= 1e-12);
  CHECK(pt.mu == doctest::Approx(0.0));
  CHECK(pt.lambda == doctest::Approx(0.0));

  // Q = 2t solves the weakly-Einstein ODE and the Einstein branch
  const QSpec lin{4.0, 0.0, 1, 0.0, 0.0};
  for (double t : {0.5, 1.0, 3.0}) {
    const WEResiduals res = we_residual(fp, lin, t);
    CHECK(res.ode <= 1e-14);
    CHECK(res.einstein <= 1e-14);
  }
}

TEST_CASE("frame point from a QSpec profile") {
  const FamilyParams fp = family_from_qspec(kSample);
  const FramePoint pt = frame_point(fp, 1.0);

  // Ricci block structure: r(V,H) = 0 and equal eigenvalues per block
  const ContractionBundle b = contraction_bundle(pt.curv, pt.g);
  CHECK(std::abs(b.ricci.m(0, 1)) <= 1e-10);
  CHECK(std::abs(b.ricci.m(0, 3)) <= 1e-10);
  CHECK(std::abs(b.ricci.m(2, 1)) <= 1e-10);
  CHECK(std::abs(b.ricci.m(0, 0) / pt.g.mat()(0, 0) - pt.mu) <= 1e-10);
  CHECK(std::abs(b.ricci.m(1, 1) / pt.g.mat()(1, 1) - pt.lambda) <= 1e-10);
  // closed-form Ricci equals the contraction of the closed-form curvature
  CHECK((b.ricci.m - pt.ricci.m).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK(curvature_symmetry_residual(pt.curv) <= 1e-12);  // first Bianchi included
  CHECK(is_hermitian_metric(pt.g, pt.j));

  CHECK_THROWS(frame_point(fp, 0.0));   // t = gamma
  CHECK_THROWS(frame_point(fp, -1.0));  // wrong side: zeta < 0
}

TEST_CASE("koszul formula cross-check") {
  CHECK(koszul_check(flat_params(), 1.0) <= 1e-12);

  const FamilyParams fp = family_from_qspec(kSample);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ut(0.2, 3.0);
  for (int rep = 0; rep < 50; ++rep) CHECK(koszul_check(fp, ut(rng)) <= 1e-10);

  // mismatched structure constants are detected...
  const FamilyParams wrong =
      make_family_params(fp.p, 2.0 * fp.q, fp.theta, fp.gamma, fp.eta);
  CHECK(koszul_deviation(fp, wrong, 1.0) > 0.1);
  // ...while a consistent change of q moves connection and brackets together
  CHECK(koszul_check(wrong, 1.0) <= 1e-10);
}

TEST_CASE("curvature from connection by finite differences") {
  CHECK(curvature_from_connection(flat_params(), 1.0, 1e-5) <= 1e-8);

  const FamilyParams fp = family_from_qspec(kSample);
  CHECK(curvature_from_connection(fp, 1.0, 1e-5) <= 1e-6);

  // second-order convergence, measured where truncation dominates roundoff
  const double d1 = curvature_from_connection(fp, 1.0, 1e-3);
  const double d2 = curvature_from_connection(fp, 1.0, 5e-4);
  CHECK(d1 / d2 > 3.0);
  CHECK(d1 / d2 < 5.0);
}

TEST_CASE("weakly-Einstein residuals on the family") {
  const FamilyParams ein = family_from_qspec(QSpec{4.0, 0.0, 1, 0.0, 0.0});
  const WEResiduals r0 = we_residual(ein, QSpec{4.0, 0.0, 1, 0.0, 0.0}, 1.3);
  CHECK(r0.ode == 0.0);
  CHECK(r0.einstein == 0.0);

  const FamilyParams fp = family_from_qspec(kSample);
  for (double t : {0.5, 1.0, 2.0}) {
    const WEResiduals r = we_residual(fp, kSample, t);
    CHECK(r.ode <= 1e-10);
    CHECK(r.einstein > 1e-3);  // non-Einstein member
  }
  const QSpec bsin{4.0, 0.0, 1, 0.0, 0.7};
  const FamilyParams fb = family_from_qspec(bsin);
  CHECK(we_residual(fb, bsin, 1.7).ode <= 1e-10);

  // inconsistent K is rejected
  CHECK_THROWS(we_residual(fp, QSpec{5.0, 0.0, 1, 0.3, 0.0}, 1.0));
}

TEST_CASE("ricci eigenvalues through the potential route") {
  const QSpec ein{4.0, 0.0, 1, 0.0, 0.0};
  const RicciEigs flat = ricci_eigs_potential_path(ein, 1.0);
  CHECK(flat.mu == doctest::Approx(0.0));
  CHECK(flat.lambda == doctest::Approx(0.0));

  const FamilyParams fp = family_from_qspec(kSample);
  for (double t : {0.5, 1.0, 1.9, 3.1}) {
    const FramePoint pt = frame_point(fp, t);
    const RicciEigs eig = ricci_eigs_potential_path(kSample, t);
    CHECK(std::abs(eig.mu - pt.mu) <= 1e-10 * std::max(1.0, std::abs(pt.mu)));
    CHECK(std::abs(eig.lambda - pt.lambda) <=
          1e-10 * std::max(1.0, std::abs(pt.lambda)));
  }

  // nonconstant mu witnesses non-homogeneity whenever (a, b) != 0
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < 10; ++i) {
    const double t = 0.5 + 0.25 * i;
    const double mu = ricci_eigs_potential_path(kSample, t).mu;
    lo = std::min(lo, mu);
    hi = std::max(hi, mu);
  }
  CHECK(hi - lo > 1e-3);
  for (int i = 0; i < 10; ++i)
    CHECK(std::abs(ricci_eigs_potential_path(ein, 0.5 + 0.25 * i).mu) <= 1e-14);
}

TEST_CASE("kahler identities along the family") {
  const FamilyParams fp = family_from_qspec(kSample);
  const Eigen::Matrix4d frame = family_orientation_frame();
  for (double t : {0.4, 1.0, 2.3}) {
    const FramePoint pt = frame_point(fp, t);
    const ContractionBundle b = contraction_bundle(pt.curv, pt.g);

    // W acting on the Kahler form is (s/6) omega
    const TwoForm om = kahler_form(pt.g, pt.j);
    const TwoForm wom = act_on_form(b.weyl, om, pt.g);
    const double res = norm_g(pt.g, wom.m - (b.scalar / 6.0) * om.m) /
                       std::max(norm_g(pt.g, om.m), 1e-300);
    CHECK(res <= 1e-9);

    // the Einstein 2-form is anti-self-dual
    const TwoForm eta(pt.j.mat.transpose() * b.einstein.m);
    const HodgeSplit sp = hodge_split(eta, pt.g, frame);
    const double nrm = std::max(norm_g(pt.g, eta.m), 1e-300);
    CHECK(norm_g(pt.g, sp.sd.m) / nrm <= 1e-10);
  }
}

TEST_CASE("ODE residual tracks the equivalence verdict") {
  const FamilyParams fp = family_from_qspec(kSample);
  for (double t : {0.6, 1.2, 2.4}) {
    const FramePoint pt = frame_point(fp, t);
    CHECK(we_residual(fp, kSample, t).ode <= 1e-10);
    const EquivReport r = equiv_conditions(pt.curv, pt.g, pt.j, 1e-8);
    CHECK((r.cond_a && r.cond_b && r.cond_c && r.cond_d));
  }
  // eta linear in t solves the Einstein branch: still (vacuously) all true
  const FamilyParams lin = make_family_params(1.0, -1.0, -1.0, 0.0, [](double t) {
    return Jet2{0.5 + 0.05 * t, 0.05, 0.0};
  });
  for (double t : {0.6, 1.2, 2.4}) {
    const FramePoint pt = frame_point(lin, t);
    CHECK(pt.mu == doctest::Approx(pt.lambda));  // Einstein member
    const EquivReport r = equiv_conditions(pt.curv, pt.g, pt.j, 1e-8);
    CHECK(r.einstein_degenerate);
    CHECK((r.cond_a && r.cond_b && r.cond_c && r.cond_d));
  }
  // eta quadratic in t solves neither branch: all false
  const FamilyParams off = make_family_params(1.0, -1.0, -1.0, 0.0, [](double t) {
    return Jet2{0.5 + 0.05 * t * t, 0.1 * t, 0.1};
  });
  for (double t : {0.6, 1.2, 2.4}) {
    const FramePoint pt = frame_point(off, t);
    const EquivReport r = equiv_conditions(pt.curv, pt.g, pt.j, 1e-8);
    CHECK_FALSE((r.cond_a || r.cond_b || r.cond_c || r.cond_d));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(make_family_params(0.0, 1.0, 1.0, 0.0,
                                  [](double) { return Jet2{1, 0, 0}; }));
  CHECK_THROWS(make_family_params(1.0, 0.0, 1.0, 0.0,
                                  [](double) { return Jet2{1, 0, 0}; }));
  CHECK_THROWS(family_from_qspec(QSpec{0.0, 0.0, 1, 0.3, 0.0}));  // k = 0
  const FamilyParams fp = family_from_qspec(kSample);
  // near t = e^{-6 pi / sqrt 7} the oscillation pushes Q, hence eta, negative
  CHECK_THROWS(frame_point(fp, std::exp(-6.0 * M_PI / std::sqrt(7.0))));
}
