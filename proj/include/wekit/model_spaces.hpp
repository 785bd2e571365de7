#pragma once

// Constructors for the concrete curvature tensors used throughout the test
// and verification suites: constant-curvature space forms, Riemannian
// products of constant-curvature surfaces, the EPS space (the locally
// homogeneous non-Einstein weakly Einstein example of Euh, Park and
// Sekigawa), and seeded random algebraic curvature tensors.

#include "wekit/tensor.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace wekit {

struct ExampleInstance {
  CurvTensor curv;
  Metric g;
  std::optional<ComplexStructureJ> j;
  std::string label;
  std::map<std::string, double> params;
};

/// g = Id, R_ijkl = kappa (g_ik g_jl - g_il g_jk).
ExampleInstance constant_curvature(double kappa, int n);

/// Product of two surfaces with Gaussian curvatures k1, k2 on the frame
/// (e1, e2, e3, e4): R_1212 = k1, R_3434 = k2, J e1 = e2, J e3 = e4.
ExampleInstance product_surfaces(double k1, double k2);

/// EPS space with parameter a != 0: g = Id and the components algebraically
/// related to R_1212 = R_1313 = R_1414 = R_3434 = -a^2, R_2323 = R_2424 = a^2.
/// Not Kahler; no J attached.
ExampleInstance eps_space(double a);

/// Deterministic random algebraic curvature tensor: uniform entries in
/// [-scale, scale] projected onto the space of curvature tensors.
CurvTensor random_curvature(std::uint64_t seed, int n, double scale);

/// Projection of an arbitrary rank-4 array onto curvature symmetries:
/// antisymmetrize both pairs, symmetrize under pair interchange, remove the
/// Bianchi part (1/3)(T_ijkl + T_iklj + T_iljk). Idempotent.
CurvTensor curvature_projection(const CurvTensor& raw);

}  // namespace wekit
