#include "wekit/model_spaces.hpp"

#include <random>
#include <stdexcept>

namespace wekit {

ExampleInstance constant_curvature(double kappa, int n) {
  if (n < 2) throw std::invalid_argument("constant_curvature: n >= 2 required");
  Metric g(Eigen::MatrixXd::Identity(n, n));
  CurvTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r.at(i, j, k, l) =
              kappa * (g.mat()(i, k) * g.mat()(j, l) - g.mat()(i, l) * g.mat()(j, k));
  return ExampleInstance{std::move(r), std::move(g), std::nullopt,
                         "constant_curvature",
                         {{"kappa", kappa}, {"n", static_cast<double>(n)}}};
}

ExampleInstance product_surfaces(double k1, double k2) {
  Metric g(Eigen::MatrixXd::Identity(4, 4));
  CurvTensor r(4);
  r.set_component(0, 1, 0, 1, k1);
  r.set_component(2, 3, 2, 3, k2);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(4, 4);
  j(1, 0) = 1;  // J e1 = e2
  j(0, 1) = -1;
  j(3, 2) = 1;  // J e3 = e4
  j(2, 3) = -1;
  return ExampleInstance{std::move(r), std::move(g), ComplexStructureJ(j),
                         "product_surfaces",
                         {{"k1", k1}, {"k2", k2}}};
}

ExampleInstance eps_space(double a) {
  if (a == 0.0) throw std::invalid_argument("eps_space: a != 0 required");
  Metric g(Eigen::MatrixXd::Identity(4, 4));
  CurvTensor r(4);
  const double a2 = a * a;
  r.set_component(0, 1, 0, 1, -a2);
  r.set_component(0, 2, 0, 2, -a2);
  r.set_component(0, 3, 0, 3, -a2);
  r.set_component(2, 3, 2, 3, -a2);
  r.set_component(1, 2, 1, 2, a2);
  r.set_component(1, 3, 1, 3, a2);
  return ExampleInstance{std::move(r), std::move(g), std::nullopt, "eps_space",
                         {{"a", a}}};
}

CurvTensor curvature_projection(const CurvTensor& raw) {
  const int n = raw.n();
  CurvTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          // antisymmetrize both pairs, then symmetrize under pair interchange
          const double v =
              (raw.at(i, j, k, l) - raw.at(j, i, k, l) - raw.at(i, j, l, k) +
               raw.at(j, i, l, k) + raw.at(k, l, i, j) - raw.at(l, k, i, j) -
               raw.at(k, l, j, i) + raw.at(l, k, j, i)) /
              8.0;
          t.at(i, j, k, l) = v;
        }
  CurvTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out.at(i, j, k, l) =
              t.at(i, j, k, l) -
              (t.at(i, j, k, l) + t.at(i, k, l, j) + t.at(i, l, j, k)) / 3.0;
  return out;
}

CurvTensor random_curvature(std::uint64_t seed, int n, double scale) {
  if (n < 2) throw std::invalid_argument("random_curvature: n >= 2 required");
  std::mt19937_64 rng(seed);
  CurvTensor raw(n);
  for (double& v : raw.data()) {
    // portable uniform in [-scale, scale): 53 mantissa bits of the generator
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    v = scale * (2.0 * u - 1.0);
  }
  return curvature_projection(raw);
}

}  // namespace wekit
