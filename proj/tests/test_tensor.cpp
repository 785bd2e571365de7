#include "doctest.h"
#include "oracles.hpp"
#include "wekit/model_spaces.hpp"
#include "wekit/tensor.hpp"

#include <cmath>
#include <random>

using namespace wekit;

namespace {

Metric random_metric(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = un(rng);
  return Metric(a * a.transpose() + 0.5 * n * Eigen::MatrixXd::Identity(n, n));
}

Eigen::MatrixXd random_antisym(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = un(rng);
  return (a - a.transpose()) / 2;
}

}  // namespace

TEST_CASE("metric validation") {
  CHECK_THROWS(Metric(Eigen::MatrixXd::Zero(3, 3)));               // not SPD
  CHECK_THROWS(Metric(-Eigen::MatrixXd::Identity(4, 4)));          // negative
  Eigen::MatrixXd ns(2, 2);
  ns << 1, 0.5, 0.3, 1;
  CHECK_THROWS(Metric(ns));                                        // asymmetric
  const Metric g(Eigen::MatrixXd::Identity(4, 4));
  CHECK((g.mat() * g.inv() - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-14);
}

TEST_CASE("contraction bundle on constant curvature") {
  const auto ex = constant_curvature(1.0, 4);
  const ContractionBundle b = contraction_bundle(ex.curv, ex.g);
  CHECK((b.ricci.m - 3.0 * ex.g.mat()).norm() == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(b.scalar == doctest::Approx(12.0));
  CHECK(norm_g(ex.g, b.einstein.m) < 1e-13);
  CHECK(norm_g(ex.g, b.weyl) < 1e-12);
  CHECK((b.trc.m - 6.0 * ex.g.mat()).norm() < 1e-12);

  // the same values through the brute-force index loops
  CHECK((oracle::ricci_brute(ex.curv, ex.g) - b.ricci.m).norm() < 1e-12);
  CHECK((oracle::trc_brute(ex.curv, ex.g) - b.trc.m).norm() < 1e-12);
}

TEST_CASE("contraction bundle zero case") {
  const Metric g(Eigen::MatrixXd::Identity(4, 4));
  const CurvTensor zero(4);
  const ContractionBundle b = contraction_bundle(zero, g);
  CHECK(b.scalar == 0.0);
  CHECK(b.ricci.m.norm() == 0.0);
  CHECK(norm_g(g, b.weyl) == 0.0);
  CHECK(b.trc.m.norm() == 0.0);
}

TEST_CASE("contraction bundle on the EPS space") {
  const auto ex = eps_space(1.0);
  const ContractionBundle b = contraction_bundle(ex.curv, ex.g);
  Eigen::Vector4d expect(-3, 1, -1, -1);
  CHECK((b.ricci.m.diagonal() - expect).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(b.scalar == doctest::Approx(-4.0));
  CHECK((b.trc.m - 6.0 * Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-13);
  CHECK((oracle::trc_brute(ex.curv, ex.g) - b.trc.m).norm() < 1e-12);
}

TEST_CASE("bundle rejects bad input") {
  const Metric g3(Eigen::MatrixXd::Identity(3, 3));
  CHECK_THROWS(contraction_bundle(CurvTensor(3), g3));  // n < 4
  const Metric g4(Eigen::MatrixXd::Identity(4, 4));
  CHECK_THROWS(contraction_bundle(CurvTensor(5), g4));  // mismatch
  CurvTensor bad(4);
  bad.at(0, 1, 0, 1) = 1.0;  // no symmetry images
  CHECK_THROWS(contraction_bundle(bad, g4));
}

TEST_CASE("bundle invariants on random curvature tensors") {
  int idx = 0;
  for (int n : {4, 5, 6}) {
    std::mt19937_64 rng(91 + n);
    for (int rep = 0; rep < 334; ++rep, ++idx) {
      const CurvTensor r = random_curvature(1000 + idx, n, 1.0);
      const Metric g = random_metric(rng, n);
      const ContractionBundle b = contraction_bundle(r, g);
      CHECK(std::abs(trace_g(g, b.einstein.m)) <= 1e-10 * std::max(1.0, norm_g(g, b.ricci.m)));
      // all contractions of the Weyl tensor vanish
      Eigen::MatrixXd wtr = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) wtr(i, k) += g.inv()(j, l) * b.weyl.at(i, j, k, l);
      CHECK(wtr.cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, norm_g(g, b.weyl)));
      CHECK(curvature_symmetry_residual(b.weyl) < 1e-11);
    }
  }
}

TEST_CASE("act_on_sym") {
  const auto cc = constant_curvature(1.0, 4);
  const ContractionBundle b = contraction_bundle(cc.curv, cc.g);
  const SymTensor2 rg = act_on_sym(cc.curv, SymTensor2(cc.g.mat()), cc.g);
  CHECK((rg.m - 3.0 * cc.g.mat()).norm() < 1e-13);  // Rg = ricci

  const CurvTensor zero(4);
  CHECK(act_on_sym(zero, SymTensor2(cc.g.mat()), cc.g).m.norm() == 0.0);

  const auto pr = product_surfaces(1.0, -1.0);
  const ContractionBundle pb = contraction_bundle(pr.curv, pr.g);
  const SymTensor2 rr = act_on_sym(pr.curv, pb.ricci, pr.g);
  CHECK((rr.m - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-13);  // Rr = g
  CHECK((oracle::act_on_sym_brute(pr.curv, pb.ricci.m, pr.g) - rr.m).norm() < 1e-13);
}

TEST_CASE("act_on_sym equals ricci on g for random tensors") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 4 + rep % 3;
    const CurvTensor r = random_curvature(50 + rep, n, 1.0);
    const Metric g = random_metric(rng, n);
    const ContractionBundle b = contraction_bundle(r, g);
    const SymTensor2 rg = act_on_sym(r, SymTensor2(g.mat()), g);
    CHECK((rg.m - b.ricci.m).cwiseAbs().maxCoeff() < 1e-14 * std::max(1.0, b.ricci.m.norm()));
  }
}

TEST_CASE("act_on_form") {
  std::mt19937_64 rng(11);
  const double kappa = 0.8;
  const auto cc = constant_curvature(kappa, 4);
  for (int rep = 0; rep < 20; ++rep) {
    const TwoForm al(random_antisym(rng, 4));
    const TwoForm out = act_on_form(cc.curv, al, cc.g);
    CHECK((out.m - kappa * al.m).norm() < 1e-13);  // R alpha = kappa alpha
    CHECK((oracle::act_on_form_brute(cc.curv, al.m, cc.g) - out.m).norm() < 1e-13);
  }
  const TwoForm zero(4);
  CHECK(act_on_form(cc.curv, zero, cc.g).m.norm() == 0.0);

  // Kahler product with s = 0: W omega = 0
  const auto pr = product_surfaces(1.0, -1.0);
  const ContractionBundle pb = contraction_bundle(pr.curv, pr.g);
  const TwoForm om = kahler_form(pr.g, *pr.j);
  CHECK(act_on_form(pb.weyl, om, pr.g).m.norm() < 1e-13);
}

TEST_CASE("multiple_of_metric") {
  const Metric g(Eigen::MatrixXd::Identity(4, 4));
  const MetricMultiple five = multiple_of_metric(SymTensor2(5.0 * g.mat()), g, 1e-9);
  CHECK(five.is_multiple);
  CHECK(five.factor == doctest::Approx(5.0));
  CHECK(five.residual < 1e-15);

  Eigen::Vector4d d(1, 1, -1, -1);
  const MetricMultiple no = multiple_of_metric(SymTensor2(d.asDiagonal()), g, 1e-9);
  CHECK_FALSE(no.is_multiple);
  CHECK(no.factor == doctest::Approx(0.0));
  CHECK(no.residual > 0.1);

  const auto eps = eps_space(1.0);
  const ContractionBundle b = contraction_bundle(eps.curv, eps.g);
  const MetricMultiple six = multiple_of_metric(b.trc, eps.g, 1e-9);
  CHECK(six.is_multiple);
  CHECK(six.factor == doctest::Approx(6.0));

  // the zero tensor counts as a multiple with factor 0
  const MetricMultiple z = multiple_of_metric(SymTensor2(4), g, 1e-9);
  CHECK(z.is_multiple);
  CHECK(z.factor == 0.0);
}

TEST_CASE("j_ops") {
  const auto pr = product_surfaces(1.0, -1.0);
  const ComplexStructureJ& j = *pr.j;

  const JActions on_g = j_ops(pr.g.mat(), j);
  CHECK(on_g.is_hermitian);
  CHECK((on_g.aj - kahler_form(pr.g, j).m).norm() < 1e-14);
  CHECK(on_g.commutator.norm() < 1e-14);

  const JActions on_zero = j_ops(Eigen::MatrixXd::Zero(4, 4), j);
  CHECK(on_zero.is_hermitian);
  CHECK(on_zero.aj.norm() == 0.0);

  // EPS Ricci against the product J: not Hermitian
  const auto eps = eps_space(1.0);
  const ContractionBundle b = contraction_bundle(eps.curv, eps.g);
  const JActions on_eps = j_ops(b.ricci.m, j);
  CHECK_FALSE(on_eps.is_hermitian);
  CHECK(on_eps.commutator.norm() > 0.5);

  // (aJ)J = -a for Hermitian a
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  for (int rep = 0; rep < 25; ++rep) {
    Eigen::Matrix4d raw;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) raw(i, k) = un(rng);
    Eigen::Matrix4d sym = (raw + raw.transpose()) / 2;
    // project onto J-invariant symmetric tensors: (a + J^T a J)/2
    Eigen::Matrix4d herm = (sym + j.mat.transpose() * sym * j.mat) / 2;
    const JActions act = j_ops(herm, j);
    CHECK(act.is_hermitian);
    CHECK((act.aj + act.aj.transpose()).norm() < 1e-13);  // aJ is a 2-form
    const JActions twice = j_ops(act.aj, j);
    CHECK((twice.aj + herm).norm() < 1e-13);              // (aJ)J = -a
  }
}

TEST_CASE("hermitian metric check") {
  const auto pr = product_surfaces(1.0, 2.0);
  CHECK(is_hermitian_metric(pr.g, *pr.j));
  Eigen::Matrix4d stretched = Eigen::Vector4d(1, 2, 1, 1).asDiagonal();
  CHECK_FALSE(is_hermitian_metric(Metric(stretched), *pr.j));
}

TEST_CASE("hodge split on the standard patterns") {
  const Metric g(Eigen::MatrixXd::Identity(4, 4));
  const Eigen::Matrix4d frame = Eigen::Matrix4d::Identity();

  Eigen::Matrix4d om = Eigen::Matrix4d::Zero();  // xi1^xi2 + xi3^xi4
  om(0, 1) = 1; om(1, 0) = -1; om(2, 3) = 1; om(3, 2) = -1;
  const HodgeSplit s1 = hodge_split(TwoForm(om), g, frame);
  CHECK((s1.sd.m - om).norm() < 1e-14);
  CHECK(s1.asd.m.norm() < 1e-14);

  Eigen::Matrix4d et = Eigen::Matrix4d::Zero();  // xi1^xi2 - xi3^xi4
  et(0, 1) = 1; et(1, 0) = -1; et(2, 3) = -1; et(3, 2) = 1;
  const HodgeSplit s2 = hodge_split(TwoForm(et), g, frame);
  CHECK(s2.sd.m.norm() < 1e-14);
  CHECK((s2.asd.m - et).norm() < 1e-14);

  Eigen::Matrix4d mx = Eigen::Matrix4d::Zero();  // xi1^xi3
  mx(0, 2) = 1; mx(2, 0) = -1;
  const TwoForm st = hodge_star(TwoForm(mx), g, frame);
  CHECK((st.m - oracle::hodge_star_brute(mx, g, frame)).norm() < 1e-14);
  // *(xi1^xi3) = xi4^xi2
  CHECK(st.m(3, 1) == doctest::Approx(1.0));
}

TEST_CASE("hodge star properties on random data") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  for (int rep = 0; rep < 40; ++rep) {
    const Metric g = random_metric(rng, 4);
    Eigen::Matrix4d frame;
    do {
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) frame(i, k) = un(rng);
    } while (std::abs(frame.determinant()) < 1e-2);
    const TwoForm al(random_antisym(rng, 4));

    const TwoForm st = hodge_star(al, g, frame);
    CHECK((st.m - oracle::hodge_star_brute(al.m, g, frame)).norm() <
          1e-12 * std::max(1.0, al.m.norm()));
    const TwoForm stst = hodge_star(st, g, frame);
    CHECK((stst.m - al.m).norm() < 1e-12 * std::max(1.0, al.m.norm()));

    const HodgeSplit sp = hodge_split(al, g, frame);
    CHECK((sp.sd.m + sp.asd.m - al.m).norm() < 1e-13);
    CHECK(std::abs(lambda2_inner(g, sp.sd, sp.asd)) < 1e-12);
    // eigenforms of the star
    CHECK((hodge_star(sp.sd, g, frame).m - sp.sd.m).norm() < 1e-12);
    CHECK((hodge_star(sp.asd, g, frame).m + sp.asd.m).norm() < 1e-12);
  }
  CHECK_THROWS(hodge_star(TwoForm(4), Metric(Eigen::MatrixXd::Identity(4, 4)),
                          Eigen::Matrix4d::Zero()));  // degenerate frame
}
